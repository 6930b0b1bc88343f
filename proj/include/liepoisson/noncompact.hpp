#pragma once

#include "liepoisson/hamiltonian.hpp"

namespace liepoisson {

/// {Ad(g0)^{-1} H Ad(g0) phi}_p.
Mat omega_noncompact(const SpaceInstance& inst, const Mat& g0, const Mat& phi);
/// <Omega(g0) phi, psi>, antisymmetrized.
double pi_noncompact(const SpaceInstance& inst, const TangentVector& phi, const TangentVector& psi);
/// Matrix of Omega(g0) in the orthonormal basis of p.
RMat omega_noncompact_matrix(const SpaceInstance& inst, const Mat& g0);

/// L = a0^{-1} l a0 a1 from g0 = l a0 a1 u.
Mat big_l(const SpaceInstance& inst, const Mat& g0);

/// T(g0) on u, its matrix from the u basis to the g0 basis.
struct TOperator {
    Mat g0;
    Mat L;
    RMat as_matrix;
};
TOperator t_operator(const SpaceInstance& inst, const Mat& g0);

/// Entrywise formula for T(g0)(X), X in u.
Mat t_apply(const SpaceInstance& inst, const Mat& L, const Mat& X);
/// pr_g0 o Ad(L) on u.
Mat t_apply_composed(const SpaceInstance& inst, const Mat& L, const Mat& X);
Mat t_adjoint(const SpaceInstance& inst, const Mat& L, const Mat& y);
/// (y0^L - y0) + 2 y0 + (y0^L - y0)^sigma for y0 in a0.
Mat t_cokernel_element(const SpaceInstance& inst, const Mat& L, const Mat& y0);

struct StagedSolution {
    Mat x;
    double image_residual = 0.0;
};
/// Solves T(x) = y for x orthogonal to i a0; throws when y is not in the image.
StagedSolution t_solve_staged(const SpaceInstance& inst, const Mat& L, const Mat& y, double tol = 1e-8);

/// The A0 factor of g0.
Mat casimir(const SpaceInstance& inst, const Mat& g0);
/// a0^{-1} g0.
Mat horizontal_section(const SpaceInstance& inst, const Mat& g0);

struct LeafTest {
    bool tangent = false;
    double residual = 0.0;
};
/// [g0, x] is leaf-tangent iff Ad(u(g0)) x is orthogonal to a0.
LeafTest leaf_tangent_test(const SpaceInstance& inst, const TangentVector& v, double tol = 1e-10);

/// <x, xi> with Omega(g0) xi = y, xi from the pseudo-inverse.
double noncompact_leaf_form(const SpaceInstance& inst, const TangentVector& v1, const TangentVector& v2);

} // namespace liepoisson
