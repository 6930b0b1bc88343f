#pragma once

#include <optional>

#include "liepoisson/factorization.hpp"
#include "liepoisson/linalg.hpp"
#include "liepoisson/weyl.hpp"

namespace liepoisson {

/// [g0, x] with g0 in G0 and x in p; [g0 k, Ad(k^{-1}) x] names the same vector.
struct TangentVector {
    Mat base;
    Mat vec;
};

/// w1 in U together with its Cartan image w_hat = w1 Theta(w1)^{-1}.
struct LeafParameter {
    Mat w1;
    Mat w_hat;
    std::optional<WeylElement> w;    ///< set when w_hat normalizes the torus
};

LeafParameter leaf_parameter(const SpaceInstance& inst, const Mat& w1);

struct MomentumValue {
    std::vector<double> coefficients;
};

/// u(w1 g0): the U factor of w1 g0.
Mat dressing(const SpaceInstance& inst, const Mat& u, const Mat& g0);

/// <Ad(u)^{-1} H Ad(u) x, y> with u = u(w1 g0), antisymmetrized.
double omega(const SpaceInstance& inst, const Mat& w1, const TangentVector& v1, const TangentVector& v2);
/// Same value through the factorization I o Ad(u^{-1}) o pr_u o Ad((la)^{-1} w1) o Ad(g0).
double omega_factored(const SpaceInstance& inst, const Mat& w1, const TangentVector& v1,
                      const TangentVector& v2);
/// Matrix of the form on p at g0 in the orthonormal basis of p.
RMat omega_matrix(const SpaceInstance& inst, const Mat& w1, const Mat& g0);

/// Basis of r(w1) = Ad(w1^{-1})(n- + a) intersected with g0.
RealBasis stabilizer_algebra(const SpaceInstance& inst, const Mat& w1);
/// Null space of the form at g0 as a subspace of p.
RealBasis omega_kernel(const SpaceInstance& inst, const Mat& w1, const Mat& g0);
/// span of {Ad(g0^{-1}) b}_p for b in r(w1).
RealBasis predicted_kernel(const SpaceInstance& inst, const Mat& w1, const Mat& g0);

/// {Ad(g0^{-1}) X}_p: the vector field of the left action at g0 K.
Mat kappa(const SpaceInstance& inst, const Mat& X, const Mat& g0);

/// Fixed space of Ad(w_hat) o Theta on t.
RealBasis t_w_basis(const SpaceInstance& inst, const LeafParameter& leaf);
/// Distance of t from T_w.
double t_w_residual(const SpaceInstance& inst, const LeafParameter& leaf, const Mat& t);
/// w1^{-1} t w1 g0.
Mat torus_act(const SpaceInstance& inst, const LeafParameter& leaf, const Mat& t, const Mat& g0);

/// <iX, log a(w1 g0)>.
double momentum_component(const SpaceInstance& inst, const Mat& w1, const Mat& X, const Mat& g0);
MomentumValue momentum(const SpaceInstance& inst, const LeafParameter& leaf, const Mat& g0);

} // namespace liepoisson
