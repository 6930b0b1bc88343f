#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "liepoisson/group_case.hpp"
#include "liepoisson/linalg.hpp"

using namespace liepoisson;
using testing::I;

namespace {

Mat random_su(int n, Rng& rng)
{
    const auto inst = SpaceInstance::group(n);
    return group_to_k(sample(inst, GroupSpace::U, rng));
}

Mat random_su_algebra(int n, Rng& rng)
{
    const auto inst = SpaceInstance::group(n);
    return sample(inst, Space::u, rng).topLeftCorner(n, n);
}

} // namespace

TEST_CASE("pi_K and Pi_K at the identity")
{
    Rng rng = make_rng(61);
    for (int n : {2, 3}) {
        const Mat e = Mat::Identity(n, n);
        const Mat a = random_su_algebra(n, rng), b = random_su_algebra(n, rng);
        CHECK(std::abs(pi_k(e, a, b)) < 1e-14);
        CHECK(big_pi_k(e, a, b) == doctest::Approx(2.0 * form(hilbert(a), b).real()));
        CHECK(pi_k_matrix(e).norm() < 1e-14);
    }
}

TEST_CASE("w0 translation")
{
    Rng rng = make_rng(62);
    for (int n : {2, 3})
        for (int s = 0; s < 20; ++s) {
            const auto t = w0_translate_check(random_su(n, rng), random_su_algebra(n, rng), random_su_algebra(n, rng));
            CHECK(std::abs(t.lhs - t.rhs) < 1e-10);
        }
}

TEST_CASE("SU(2) coordinates")
{
    CHECK(frob(su2_k_of_zeta(0.0) - Mat::Identity(2, 2)) < 1e-15);
    const Mat k1 = su2_k_of_zeta(1.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(frob(k1 - testing::mat({{r, -r}, {r, r}})) < 1e-15);
    Rng rng = make_rng(63);
    std::normal_distribution<double> nd;
    for (int s = 0; s < 20; ++s) {
        const Complex z(nd(rng), nd(rng));
        const Mat k = su2_k_of_zeta(z);
        CHECK(frob(k * k.adjoint() - Mat::Identity(2, 2)) < 1e-13);
        CHECK(std::abs(k.determinant() - 1.0) < 1e-13);
        CHECK(std::abs(k(1, 0) / k(0, 0) - z) < 1e-12);
    }

    const auto d2 = root_datum(2);
    const LeafCoordinates c{{1}, {Complex(0.3, -0.4)}};
    CHECK(frob(lu_coordinates_to_l(d2, c) - testing::mat({{1, 0}, {Complex(0.3, -0.4), 1}})) < 1e-13);
    const Mat a = lu_a_product(d2, c);
    CHECK(a(0, 0).real() == doctest::Approx(1.0 / std::sqrt(1.25)));
    CHECK(a(1, 1).real() == doctest::Approx(std::sqrt(1.25)));
}

TEST_CASE("form coefficients and Haar density")
{
    const auto d2 = root_datum(2);
    CHECK(lu_form_coefficients(d2, {{1}, {0.0}})[0] == doctest::Approx(0.5));
    CHECK(lu_form_coefficients(d2, {{1}, {Complex(0.6, 0.8)}})[0] == doctest::Approx(0.25));
    CHECK(haar_density(d2, {{1}, {Complex(3, 4)}}) == doctest::Approx(1.0));
    CHECK(haar_density(d2, {{}, {}}) == 1.0);

    const auto d3 = root_datum(3);
    CHECK(haar_density(d3, {{1, 2}, {1.0, 1.0}}) == doctest::Approx(2.0));
    CHECK(haar_density(d3, {{2, 1}, {1.0, 1.0}}) == doctest::Approx(2.0));
    CHECK(haar_density(d3, {{1, 2}, {0.0, 5.0}}) == doctest::Approx(1.0));

    CHECK_THROWS_AS(haar_density(d3, {{1, 1}, {1.0, 1.0}}), Error);
    CHECK_THROWS_AS(haar_density(d3, {{1, 2}, {1.0}}), Error);
}

TEST_CASE("momentum in coordinates")
{
    const auto d2 = root_datum(2);
    for (double v : momentum_in_coordinates(d2, {{1}, {0.0}}))
        CHECK(v == doctest::Approx(0.0));
    for (double z : {0.5, 1.0, 3.0}) {
        const double m = momentum_in_coordinates(d2, {{1}, {z}})[0];
        CHECK(m / std::log1p(z * z) == doctest::Approx(-0.5));
    }
}

TEST_CASE("leaf forms in coordinates")
{
    const auto d3 = root_datum(3);
    const LeafCoordinates c{{1, 2}, {Complex(0.4, 0.2), Complex(-0.7, 0.5)}};
    const RMat W = cell_pulled_back_coefficients(d3, c);
    const auto coeff = lu_form_coefficients(d3, c);
    for (int j = 0; j < 2; ++j)
        CHECK(W(2 * j, 2 * j + 1) == doctest::Approx(coeff[static_cast<std::size_t>(j)]).epsilon(1e-6));
    CHECK(std::abs(W(0, 2)) < 1e-6);
    CHECK(std::abs(W(1, 3)) < 1e-6);
    const RMat S = pulled_back_coefficients(d3, c);
    CHECK((S + W).norm() < 1e-5);

    const Mat k = cell_point(d3, c);
    CHECK(frob(k * k.adjoint() - Mat::Identity(3, 3)) < 1e-12);
    CHECK(numerical_rank(pi_k_matrix(k), 1e-8) == 4);
}

TEST_CASE("torus rotation of coordinates")
{
    const auto d3 = root_datum(3);
    const LeafCoordinates c{{1, 2}, {Complex(0.4, 0.2), Complex(-0.7, 0.5)}};
    Mat t = Mat::Zero(3, 3);
    t.diagonal() << std::polar(1.0, 0.3), std::polar(1.0, -1.1), std::polar(1.0, 0.8);
    const Mat lhs = t * lu_coordinates_to_l(d3, c) * t.adjoint();
    CHECK(frob(lhs - lu_coordinates_to_l(d3, torus_rotate(d3, c, t))) < 1e-12);
}
