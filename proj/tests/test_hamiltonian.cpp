#include <doctest.h>

#include "helpers.hpp"
#include "liepoisson/hamiltonian.hpp"
#include "liepoisson/compact.hpp"
#include "liepoisson/linalg.hpp"

using namespace liepoisson;
using testing::I;
using testing::mat;

TEST_CASE("omega hand value and symmetries")
{
    const auto inst = SpaceInstance::grass(1, 1);
    const Mat e = identity(inst);
    const Mat x = mat({{0, 1}, {1, 0}}), y = mat({{0, I}, {-I, 0}});
    CHECK(omega(inst, e, {e, x}, {e, y}) == doctest::Approx(2.0));
    CHECK(omega(inst, e, {e, x}, {e, x}) == 0.0);
    CHECK_THROWS_AS(omega(inst, e, {e, x}, {2.0 * e, y}), Error);

    Rng rng = make_rng(31);
    for (const auto& in : testing::instances()) {
        const Mat w1 = sample(in, GroupSpace::U, rng), g0 = sample(in, GroupSpace::G0, rng);
        const Mat a = sample(in, Space::p, rng), b = sample(in, Space::p, rng), k = sample(in, GroupSpace::K, rng);
        const double v = omega(in, w1, {g0, a}, {g0, b});
        CHECK(std::abs(v + omega(in, w1, {g0, b}, {g0, a})) < 1e-12);
        CHECK(std::abs(v - omega(in, w1, {g0 * k, ad_inv(k, a)}, {g0 * k, ad_inv(k, b)})) < 1e-12);
        CHECK(std::abs(v - omega_factored(in, w1, {g0, a}, {g0, b})) < 1e-10);
    }
}

TEST_CASE("dressing is a right action")
{
    Rng rng = make_rng(32);
    for (const auto& inst : testing::instances()) {
        const Mat u = sample(inst, GroupSpace::U, rng);
        const Mat g = sample(inst, GroupSpace::G0, rng), h = sample(inst, GroupSpace::G0, rng);
        CHECK(frob(dressing(inst, u, identity(inst)) - u) < 1e-12);
        CHECK(frob(dressing(inst, dressing(inst, u, g), h) - dressing(inst, u, g * h)) < 1e-12);
        const Mat k = sample(inst, GroupSpace::K, rng);
        CHECK(frob(dressing(inst, identity(inst), k) - k) < 1e-12);
    }
}

TEST_CASE("stabilizer algebra")
{
    const auto g11 = SpaceInstance::grass(1, 1);
    CHECK(stabilizer_algebra(g11, identity(g11)).empty());
    for (int n : {2, 3}) {
        const auto inst = SpaceInstance::group(n);
        const auto r = stabilizer_algebra(inst, identity(inst));
        CHECK(static_cast<int>(r.size()) == n - 1);
        for (const auto& b : r) {
            CHECK(residual(inst, Space::g0, b) < 1e-10);
            CHECK(frob(upper(b)) < 1e-10);
        }
    }
    Rng rng = make_rng(33);
    const auto inst = SpaceInstance::group(3);
    const Mat w1 = sample(inst, GroupSpace::U, rng), k = sample(inst, GroupSpace::K, rng);
    CHECK(stabilizer_algebra(inst, w1).size() == stabilizer_algebra(inst, w1 * k).size());
}

TEST_CASE("kernel of omega matches r(w1)")
{
    Rng rng = make_rng(34);
    for (const auto& inst : testing::instances()) {
        const Mat g0 = sample(inst, GroupSpace::G0, rng);
        for (const Mat& w1 : {identity(inst), Mat(sample(inst, GroupSpace::U, rng))})
            CHECK(subspace_distance(omega_kernel(inst, w1, g0), predicted_kernel(inst, w1, g0)) < 1e-8);
    }
}

TEST_CASE("torus t_w")
{
    const auto g2 = SpaceInstance::group(2);
    const auto trivial = leaf_parameter(g2, identity(g2));
    CHECK(subspace_distance(t_w_basis(g2, trivial), g2.basis(Space::t0)) < 1e-10);
    const auto leaf = leaf_parameter(g2, group_leaf_w1(2, {1}));
    REQUIRE(leaf.w);
    const auto tw = t_w_basis(g2, leaf);
    REQUIRE(tw.size() == 1);
    CHECK(frob(tw[0].topLeftCorner(2, 2) + tw[0].bottomRightCorner(2, 2)) < 1e-10);

    Rng rng = make_rng(35);
    const Mat g0 = sample(g2, GroupSpace::G0, rng);
    CHECK(frob(torus_act(g2, leaf, identity(g2), g0) - g0) < 1e-14);
    const Mat t = expm(0.7 * tw[0]);
    CHECK(residual(g2, GroupSpace::G0, torus_act(g2, leaf, t, g0)) < 1e-10);
    CHECK_THROWS_AS(torus_act(g2, leaf, expm(g2.basis(Space::t)[0]), g0), Error);
}

TEST_CASE("momentum map")
{
    Rng rng = make_rng(36);
    for (const auto& inst : testing::instances()) {
        const auto leaf = leaf_parameter(inst, identity(inst));
        for (double v : momentum(inst, leaf, identity(inst)).coefficients)
            CHECK(v == doctest::Approx(0.0));
        const Mat g0 = sample(inst, GroupSpace::G0, rng);
        const auto tw = t_w_basis(inst, leaf);
        if (!tw.empty()) {
            const Mat t = expm(0.4 * tw[0]);
            const auto before = momentum(inst, leaf, g0).coefficients;
            const auto after = momentum(inst, leaf, torus_act(inst, leaf, t, g0)).coefficients;
            for (std::size_t j = 0; j < before.size(); ++j)
                CHECK(std::abs(before[j] - after[j]) < 1e-10);
        }
    }
}
