#pragma once

#include "liepoisson/compact.hpp"

namespace liepoisson {

/// <(H - Ad(k) H Ad(k)^{-1}) phi, psi>, right trivialization, phi and psi in su(n).
double pi_k(const Mat& k, const Mat& phi, const Mat& psi);
/// <(H + Ad(k) H Ad(k)^{-1}) phi, psi>.
double big_pi_k(const Mat& k, const Mat& phi, const Mat& psi);
/// Matrix of H + Ad(k) H Ad(k)^{-1} in the orthonormal basis of su(n).
RMat big_pi_k_matrix(const Mat& k);
/// Matrix of H - Ad(k) H Ad(k)^{-1} in the orthonormal basis of su(n).
RMat pi_k_matrix(const Mat& k);
/// Leaf form of Pi_K at k on right-trivialized tangent vectors, through the GROUP(n) identification.
double big_pi_k_leaf_form(const Mat& k, const Mat& x, const Mat& y);
/// Leaf form of pi_K at k on right-trivialized tangent vectors, <x, xi> with pi_K(k) xi = y.
double pi_k_leaf_form(const Mat& k, const Mat& x, const Mat& y);
/// Matrices of the pi_K and Pi_K leaf forms on a list of tangent vectors at k.
RMat pi_k_leaf_gram(const Mat& k, const std::vector<Mat>& xs);
RMat big_pi_k_leaf_gram(const Mat& k, const std::vector<Mat>& xs);

/// Push-forward of pi_K by left translation by w0, and -Pi_K, both at w0 k.
struct TranslationCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
TranslationCheck w0_translate_check(const Mat& k, const Mat& phi, const Mat& psi);

/// GROUP(n) point (k, 1) and the inverse identification (k1, k2) -> k1 k2^{-1}.
Mat group_point(const Mat& k);
Mat group_to_k(const Mat& u);
/// Cotangent phi in su(n) at k as an element of ip for GROUP(n) at (k, 1).
Mat group_cotangent(const Mat& k, const Mat& phi);
/// Right-trivialized tangent x at k as an element of ip at (k, 1).
Mat group_tangent(const Mat& k, const Mat& x);

/// [[1,0],[zeta,1]] diag(a, 1/a) [[1,-conj(zeta)],[0,1]], a = (1+|zeta|^2)^{-1/2}.
Mat su2_k_of_zeta(Complex zeta);

/// Reduced word r_n..r_1 and coordinates zeta_n..zeta_1, both left to right.
struct LeafCoordinates {
    Word word;
    std::vector<Complex> zeta;
};

/// w_{n-1}^{-1} i_n(k(zeta_n)) w_{n-1} ... w_1^{-1} i_2(k(zeta_2)) w_1 i_1(k(zeta_1)).
Mat lu_product(const RootDatum& datum, const LeafCoordinates& c);
/// The n- factor of the Birkhoff factorization of lu_product.
Mat lu_coordinates_to_l(const RootDatum& datum, const LeafCoordinates& c);
/// prod (1+|zeta_j|^2)^{-1/2 w_{j-1}^{-1} h_j w_{j-1}}.
Mat lu_a_product(const RootDatum& datum, const LeafCoordinates& c);
/// 1 / (<gamma_j, gamma_j> (1+|zeta_j|^2)), in the order of the word.
std::vector<double> lu_form_coefficients(const RootDatum& datum, const LeafCoordinates& c);
/// prod (1+|zeta_j|^2)^{delta_check(w_{j-1}^{-1} h_j w_{j-1}) - 1}.
double haar_density(const RootDatum& datum, const LeafCoordinates& c);
/// Coordinates of t l(zeta) t^{-1} for diagonal unitary t: zeta_j times the ratio of the entries of
/// w_{j-1} t w_{j-1}^{-1} at the two rows of gamma_j.
LeafCoordinates torus_rotate(const RootDatum& datum, const LeafCoordinates& c, const Mat& t);
/// -<(i/2) log a, i h_j> for the simple coroots h_j.
std::vector<double> momentum_in_coordinates(const RootDatum& datum, const LeafCoordinates& c);

struct DensityReport {
    std::vector<double> form_coefficients;
    Mat a_value;
    double haar_density = 0.0;
};
DensityReport density_report(const RootDatum& datum, const LeafCoordinates& c);

/// The element of S(1) with n- factor l: the unitary factor of l = k b, b upper with positive diagonal.
Mat s1_point(const Mat& l);
/// (l^{-1}, l^*) in G0 of GROUP(n); its u-tilde image (w1 = e) is the S(1) point with n- factor l.
Mat s1_g0(const Mat& l);

/// w_hat s1_point(l(zeta)) on the pi_K leaf C_w through w_hat, w_hat the representative of the word.
Mat cell_point(const RootDatum& datum, const LeafCoordinates& c);

/// S(1) leaf form in the real coordinates (Re zeta_j, Im zeta_j), halved so that the
/// (Re zeta_j, Im zeta_j) entry is the coefficient of i dzeta_j ^ dconj(zeta_j).
RMat pulled_back_coefficients(const RootDatum& datum, const LeafCoordinates& c, double step = 1e-6);
/// The pi_K leaf form of C_w at cell_point, same coordinates and normalization.
RMat cell_pulled_back_coefficients(const RootDatum& datum, const LeafCoordinates& c, double step = 1e-6);

} // namespace liepoisson
