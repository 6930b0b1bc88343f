#include <doctest.h>

#include "helpers.hpp"
#include "liepoisson/compact.hpp"
#include "liepoisson/factorization.hpp"
#include "liepoisson/hamiltonian.hpp"
#include "liepoisson/linalg.hpp"

using namespace liepoisson;
using testing::I;
using testing::mat;

TEST_CASE("Ad(w) blocks")
{
    const auto inst = SpaceInstance::grass(1, 1);
    const auto e = ad_w_blocks(inst, identity(inst));
    CHECK((e.A - Mat::Identity(e.A.rows(), e.A.cols())).norm() < 1e-14);
    CHECK((e.D - Mat::Identity(e.D.rows(), e.D.cols())).norm() < 1e-14);
    CHECK(e.B.norm() < 1e-14);
    CHECK(e.C.norm() < 1e-14);

    const auto s = ad_w_blocks(inst, mat({{0, I}, {I, 0}}));
    CHECK(s.A.norm() < 1e-14);
    CHECK(s.D.norm() < 1e-14);
    CHECK(s.B.norm() > 0.5);
    CHECK(s.C.norm() > 0.5);

    for (const auto& in : testing::instances())
        for (const Mat& w1 : leaf_representatives(in)) {
            const Mat w = leaf_parameter(in, w1).w_hat;
            CHECK(frob(assemble(ad_w_blocks(in, w)) - ad_root_matrix(in, w)) < 1e-12);
        }
}

TEST_CASE("h_w at the identity is the Hilbert operator")
{
    Rng rng = make_rng(52);
    for (const auto& inst : testing::instances()) {
        const auto op = h_w_operator(inst, identity(inst));
        const Mat X = sample(inst, Space::u, rng);
        CHECK(h_w_domain_residual(op, X) < 1e-12);
        CHECK(frob(h_w_apply(op, X) - hilbert(X)) < 1e-12);
    }
}

TEST_CASE("u tilde and Z")
{
    Rng rng = make_rng(53);
    for (const auto& inst : testing::instances()) {
        const Mat e = identity(inst);
        const Mat k = sample(inst, GroupSpace::K, rng);
        CHECK(frob(u_tilde(inst, e, k) - k) < 1e-12);
        const Mat g0 = expm(0.1 * sample(inst, Space::p, rng));
        CHECK(frob(u_tilde(inst, e, g0) - iwasawa(inst, g0).u) < 1e-12);

        const Mat x = sample(inst, Space::ip, rng);
        CHECK(frob(z_operator(inst, e, e, x)) < 1e-12);
        const Mat w1 = sample(inst, GroupSpace::U, rng), g = sample(inst, GroupSpace::G0, rng);
        const Mat z = z_operator(inst, w1, g, x);
        CHECK(frob(z - z_operator_direct(inst, w1, g, x)) < 1e-9);
        CHECK(frob(upper(z)) < 1e-10);
    }
}

TEST_CASE("pi_compact")
{
    Rng rng = make_rng(54);
    for (const auto& inst : testing::instances()) {
        const Mat u = sample(inst, GroupSpace::U, rng);
        const Mat a = sample(inst, Space::ip, rng), b = sample(inst, Space::ip, rng);
        CHECK(pi_compact(inst, {u, a}, {u, a}) == 0.0);
        CHECK(std::abs(pi_compact(inst, {u, a}, {u, b}) + pi_compact(inst, {u, b}, {u, a})) < 1e-12);
        CHECK(leaf_form_pinv(inst, u, a, a) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("leaf representatives")
{
    const auto g2 = SpaceInstance::group(2);
    const Mat w1 = group_leaf_w1(2, {1});
    CHECK(frob(w1.topLeftCorner(2, 2) - representative(2, {1})) < 1e-15);
    CHECK(frob(w1.bottomRightCorner(2, 2) - Mat::Identity(2, 2)) < 1e-15);
    CHECK(leaf_representatives(SpaceInstance::group(3)).size() == 6);
    for (const auto& inst : testing::instances())
        for (const Mat& w : leaf_representatives(inst))
            CHECK(residual(inst, GroupSpace::U, w) < 1e-12);
}
