#include <doctest.h>

#include "helpers.hpp"
#include "liepoisson/linalg.hpp"

using namespace liepoisson;
using testing::I;
using testing::mat;

TEST_CASE("triangular parts split entrywise")
{
    const Mat X = mat({{0, 1}, {2, 0}});
    const auto parts = triangular_parts(X);
    CHECK(frob(parts.minus - mat({{0, 0}, {2, 0}})) == 0.0);
    CHECK(frob(parts.zero) == 0.0);
    CHECK(frob(parts.plus - mat({{0, 1}, {0, 0}})) == 0.0);

    const Mat D = mat({{1, 0}, {0, -1}});
    const auto dp = triangular_parts(D);
    CHECK(frob(dp.minus) == 0.0);
    CHECK(frob(dp.zero - D) == 0.0);

    const auto inst = SpaceInstance::grass(2, 1);
    Rng rng = make_rng(1);
    const Mat Z = sample(inst, Space::g, rng);
    const auto zp = triangular_parts(Z);
    CHECK(frob(zp.minus + zp.zero + zp.plus - Z) < 1e-15);
}

TEST_CASE("hilbert transform")
{
    CHECK(frob(hilbert(mat({{0, 1}, {2, 0}})) - mat({{0, I}, {-2.0 * I, 0}})) < 1e-15);
    CHECK(frob(hilbert(mat({{3, 0}, {0, -3}}))) == 0.0);
    Rng rng = make_rng(2);
    for (const auto& inst : testing::instances()) {
        const Mat X = sample(inst, Space::g, rng);
        const Mat N = X - diagonal(X);
        CHECK(frob(hilbert(hilbert(N)) + N) < 1e-15);
        const Mat Y = sample(inst, Space::g, rng);
        CHECK(std::abs(form(hilbert(X), Y) + form(X, hilbert(Y))) < 1e-12);
        for (Space s : {Space::u, Space::iu, Space::g0, Space::ig0}) {
            const Mat Z = sample(inst, s, rng);
            CHECK(residual(inst, s, hilbert(Z)) < 1e-13);
        }
    }
}

TEST_CASE("nijenhuis torsion vanishes")
{
    CHECK(frob(nijenhuis(mat({{1, 0}, {0, -1}}), mat({{2, 0}, {0, -2}}))) == 0.0);
    Rng rng = make_rng(3);
    for (int n = 2; n <= 4; ++n) {
        const auto inst = SpaceInstance::grass(1, n - 1);
        double worst = 0.0, worst_ybe = 0.0;
        for (int s = 0; s < 200; ++s) {
            const Mat A = sample(inst, Space::g, rng), B = sample(inst, Space::g, rng);
            worst = std::max(worst, frob(nijenhuis(A, B)));
            const Mat HA = hilbert(A), HB = hilbert(B);
            const Mat lhs = bracket(HA, HB) - hilbert(bracket(HA, B) + bracket(A, HB));
            worst_ybe = std::max(worst_ybe, frob(lhs - bracket(A, B)));
        }
        CHECK(worst < 1e-10);
        CHECK(worst_ybe < 1e-10);
    }
}

TEST_CASE("projection diagrams commute")
{
    Rng rng = make_rng(4);
    for (const auto& inst : testing::instances())
        for (int s = 0; s < 200; ++s) {
            const Mat Z = sample(inst, Space::u, rng);
            CHECK(frob(pr_u(I * Z) - hilbert(Z)) < 1e-13);
            const Mat Y = sample(inst, Space::g0, rng);
            CHECK(frob(pr_g0(inst, I * Y) - hilbert(Y)) < 1e-13);
        }
}

TEST_CASE("projectors are idempotent, complementary and orthogonal")
{
    Rng rng = make_rng(5);
    const std::vector<Projector> orth = {Projector::orth_u, Projector::orth_iu, Projector::orth_p,
                                         Projector::orth_k, Projector::orth_g0, Projector::orth_a0};
    const std::vector<Projector> iwa = {Projector::iwasawa_u, Projector::iwasawa_na, Projector::iwasawa_g0,
                                        Projector::iwasawa_nih0};
    for (const auto& inst : testing::instances()) {
        const Mat X = sample(inst, Space::g, rng), Y = sample(inst, Space::g, rng);
        for (Projector P : orth) {
            const Mat PX = project(inst, P, X);
            CHECK(frob(project(inst, P, PX) - PX) < 1e-14);
            CHECK(std::abs(form(PX, Y - project(inst, P, Y)).real()) < 1e-12);
        }
        for (Projector P : iwa) {
            const Mat PX = project(inst, P, X);
            CHECK(frob(project(inst, P, PX) - PX) < 1e-14);
        }
        CHECK(frob(pr_u(X) + pr_na(X) - X) < 1e-15);
        CHECK(frob(pr_g0(inst, X) + pr_nih0(inst, X) - X) < 1e-15);
        CHECK(residual(inst, Space::u, pr_u(X)) < 1e-14);
        CHECK(residual(inst, Space::g0, pr_g0(inst, X)) < 1e-14);
        const Mat na = pr_na(X);
        CHECK(frob(upper(na)) < 1e-15);
        CHECK(frob(diagonal(na).imag()) < 1e-15);
    }
    CHECK_THROWS_AS(projector_from_string("orth_z"), Error);
    CHECK(projector_from_string("iwasawa_pr_g0") == Projector::iwasawa_g0);
}

TEST_CASE("trace form is symmetric and ad-invariant")
{
    Rng rng = make_rng(6);
    for (const auto& inst : testing::instances()) {
        const Mat X = sample(inst, Space::g, rng), Y = sample(inst, Space::g, rng),
                  Z = sample(inst, Space::g, rng);
        CHECK(std::abs(form(X, Y) - form(Y, X)) < 1e-12);
        CHECK(std::abs(form(bracket(Z, X), Y) + form(X, bracket(Z, Y))) < 1e-12);
        CHECK(std::abs(form(X, Y) - (X * Y).trace()) < 1e-12);
    }
}

TEST_CASE("involutions")
{
    const auto g11 = SpaceInstance::grass(1, 1);
    const Mat m = mat({{1, 2}, {3, 4}});
    CHECK(frob(theta(g11, m) - mat({{1, -2}, {-3, 4}})) == 0.0);

    Rng rng = make_rng(7);
    for (const auto& inst : testing::instances()) {
        const Mat k = sample(inst, GroupSpace::K, rng);
        CHECK(frob(theta(inst, k) - k) < 1e-14);
        const Mat X = sample(inst, Space::g, rng);
        CHECK(frob(sigma(inst, X) - minus_star(theta(inst, X))) < 1e-15);
        CHECK(frob(theta(inst, minus_star(X)) - minus_star(theta(inst, X))) < 1e-15);
        CHECK(frob(sigma(inst, sigma(inst, X)) - X) < 1e-15);
        const Mat g = sample(inst, GroupSpace::G, rng);
        CHECK(frob(sigma_group(inst, g) - inverse_star(theta(inst, g))) < 1e-12);
        CHECK(frob(involution(inst, Involution::sigma, g, true) - sigma_group(inst, g)) == 0.0);
        // sigma exchanges n+ and n-
        const int N = inst.dim();
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                if (!inst.allowed(i, j))
                    continue;
                Mat E = Mat::Zero(N, N);
                E(i, j) = 1.0;
                const Mat S = sigma(inst, E);
                CHECK(frob(S - lower(S)) == 0.0);
                CHECK(frob(S) > 0.5);
                CHECK(frob(theta(inst, lower(X)) - lower(theta(inst, lower(X)))) == 0.0);
            }
    }
}

TEST_CASE("compact Cartan t0 is maximal abelian in k")
{
    for (const auto& inst : testing::instances()) {
        const auto& k = inst.basis(Space::k);
        const auto& t0 = inst.basis(Space::t0);
        // centralizer of t0 in k: null space of X -> ([t_1, X], [t_2, X], ...)
        RMat M(0, static_cast<Eigen::Index>(k.size()));
        for (const auto& t : t0) {
            const RMat block = operator_matrix(k, inst.basis(Space::g),
                                               [&](const Mat& X) { return bracket(t, X); });
            RMat next(M.rows() + block.rows(), M.cols());
            next << M, block;
            M = next;
        }
        CHECK(null_space(M).cols() == static_cast<Eigen::Index>(t0.size()));
    }
}

TEST_CASE("subspace dimensions")
{
    const auto g21 = SpaceInstance::grass(2, 1);
    CHECK(g21.basis(Space::g).size() == 16);
    CHECK(g21.basis(Space::u).size() == 8);
    CHECK(g21.basis(Space::p).size() == 4);
    CHECK(g21.basis(Space::k).size() == 4);
    CHECK(g21.basis(Space::a0).size() == 0);
    CHECK(g21.basis(Space::t0).size() == 2);
    const auto gr3 = SpaceInstance::group(3);
    CHECK(gr3.basis(Space::g0).size() == 16);
    CHECK(gr3.basis(Space::p).size() == 8);
    CHECK(gr3.basis(Space::a0).size() == 2);
    CHECK(gr3.basis(Space::t0).size() == 2);
    CHECK(gr3.basis(Space::t).size() == 4);
    CHECK(gr3.basis(Space::h0).size() == 4);
}

TEST_CASE("sampling satisfies tags and is deterministic")
{
    const auto g21 = SpaceInstance::grass(2, 1);
    const Mat x = sample(g21, Space::p, 11);
    CHECK(frob(theta(g21, x) + x) < 1e-14);
    CHECK(in_space(g21, Space::p, x));
    const auto gr2 = SpaceInstance::group(2);
    const Mat g0 = sample(gr2, GroupSpace::G0, 12);
    CHECK(frob(g0.bottomRightCorner(2, 2) - inverse_star(Mat(g0.topLeftCorner(2, 2)))) < 1e-12);
    CHECK(frob(sample(gr2, GroupSpace::G0, 12) - g0) == 0.0);
    Rng rng = make_rng(13);
    for (const auto& inst : testing::instances()) {
        for (Space s : {Space::g, Space::u, Space::iu, Space::g0, Space::k, Space::p, Space::ip, Space::t0,
                        Space::a0, Space::h0})
            CHECK(in_space(inst, s, sample(inst, s, rng)));
        for (GroupSpace s : {GroupSpace::G, GroupSpace::U, GroupSpace::G0, GroupSpace::K, GroupSpace::T,
                             GroupSpace::N_minus, GroupSpace::A, GroupSpace::A0})
            CHECK(in_group(inst, s, sample(inst, s, rng)));
    }
    CHECK(space_from_string("n-") == Space::n_minus);
    CHECK_THROWS_AS(space_from_string("zz"), Error);
}

TEST_CASE("instance specs roundtrip")
{
    CHECK(SpaceInstance::parse("grass:2,1").name() == "grass:2,1");
    CHECK(SpaceInstance::parse(" group : 3 ").name() == "group:3");
    CHECK_THROWS_AS(SpaceInstance::parse("group:1"), Error);
    CHECK_THROWS_AS(SpaceInstance::parse("torus:2"), Error);
}
