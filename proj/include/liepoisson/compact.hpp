#pragma once

#include <Eigen/QR>

#include "liepoisson/hamiltonian.hpp"

namespace liepoisson {

/// {Ad(u)^{-1} H Ad(u) phi}_ip.
Mat omega_compact(const SpaceInstance& inst, const Mat& u, const Mat& phi);
/// <Omega(u) phi, psi> at the common base u, antisymmetrized.
double pi_compact(const SpaceInstance& inst, const TangentVector& phi, const TangentVector& psi);
/// Matrix of Omega(u) in the orthonormal basis of ip.
RMat omega_compact_matrix(const SpaceInstance& inst, const Mat& u);
RealBasis pi_compact_kernel(const SpaceInstance& inst, const Mat& u);
/// i {Ad(g0^{-1}) r(w1)}_p.
RealBasis predicted_compact_kernel(const SpaceInstance& inst, const Mat& w1, const Mat& g0);

/// u(w1 g0).
Mat u_tilde(const SpaceInstance& inst, const Mat& w1, const Mat& g0);
/// [g0, y] -> [u, {Ad(u^{-1}) H Ad(u)(-i y)}_ip].
TangentVector u_tilde_pushforward(const SpaceInstance& inst, const Mat& w1, const TangentVector& v);
/// [u, phi] -> [g0, {Ad(u^{-1}) iH Ad(u) phi}_p].
TangentVector u_tilde_pushforward_adjoint(const SpaceInstance& inst, const Mat& w1, const Mat& g0,
                                          const Mat& phi);

/// Root-vector basis of g: E_ij (i < j), coroots E_jj - E_{j+1,j+1}, E_ij (i > j), within blocks.
struct RootBasis {
    std::vector<Mat> n_plus, h, n_minus;
};
RootBasis root_basis(const SpaceInstance& inst);

/// Ad(w_hat) relative to g = n+ + h + n-, complex matrices in the root basis.
struct AdWBlocks {
    Mat w_hat;
    Mat A, B, C, D, w_h;
};
AdWBlocks ad_w_blocks(const SpaceInstance& inst, const Mat& w_hat);
/// [[A, 0, B], [0, w_h, 0], [C, 0, D]].
Mat assemble(const AdWBlocks& blocks);
/// Full matrix of Ad(w_hat) in the root basis, ordered n+, h, n-.
Mat ad_root_matrix(const SpaceInstance& inst, const Mat& w_hat);

/// H_w with C sigma realified on n- in the basis {E_ij, i E_ij}.
struct HwOperator {
    SpaceInstance inst;
    AdWBlocks blocks;
    RMat c_sigma;
    Eigen::CompleteOrthogonalDecomposition<RMat> solver;
};
HwOperator h_w_operator(const SpaceInstance& inst, const Mat& w_hat);
/// -i (1 + C sigma)(1 - C sigma)^{-1} chi_- + i chi_+; throws outside D(H_w).
Mat h_w_apply(const HwOperator& op, const Mat& chi, double tol = 1e-8);
/// Residual of the (1 - C sigma) solve for chi_-.
double h_w_domain_residual(const HwOperator& op, const Mat& chi);

/// i ker(1 - C sigma): the outputs of H_w are determined modulo this span.
RealBasis h_w_ambiguity(const HwOperator& op);

/// (Z + Ad(w_hat) sigma Z) / 2.
Mat project_g0w(const SpaceInstance& inst, const Mat& w_hat, const Mat& Z);
/// (Z - Ad(w_hat) sigma Z) / 2.
Mat project_ig0w(const SpaceInstance& inst, const Mat& w_hat, const Mat& Z);

/// -((x^u)_0 - (x^{w1 g0})_0) + p_-(Ad(la)((x^u)_0 + 2 (x^u)_+)).
Mat z_operator(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& x);
/// -i (Ad(la) H Ad(la)^{-1} - H)(x^{w1 g0}).
Mat z_operator_direct(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& x);

/// Distance of i x^{g0} from the orthogonal complement of r(w1), x in ip.
double leaf_tangency_residual(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& x);
/// <x^{w1 g0}, H_w(y^{w1 g0})> for x, y in ip tangent to S(w) at u(w1 g0).
double leaf_form(const HwOperator& op, const LeafParameter& leaf, const Mat& g0, const Mat& x, const Mat& y,
                 double tol = 1e-8);
/// <x, xi> with Omega(u) xi = y, xi from the pseudo-inverse.
double leaf_form_pinv(const SpaceInstance& inst, const Mat& u, const Mat& x, const Mat& y);

/// (w, 1) with w the representative of the word.
Mat group_leaf_w1(int n, const Word& word);
/// exp(pi/4 sum (E_ij - E_ji)) over the pairs (i in the p block, j in the q block).
Mat grass_leaf_w1(const SpaceInstance& inst, const std::vector<std::pair<int, int>>& matching);
/// One w1 per reduced word (GROUP) or partial matching (GRASS).
std::vector<Mat> leaf_representatives(const SpaceInstance& inst);

} // namespace liepoisson
