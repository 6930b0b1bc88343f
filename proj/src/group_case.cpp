#include "liepoisson/group_case.hpp"

#include <cmath>

namespace liepoisson {

namespace {

RealBasis su_basis(int n)
{
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat A = Mat::Zero(n, n), S = Mat::Zero(n, n);
            A(i, j) = 1.0;
            A(j, i) = -1.0;
            S(i, j) = I_;
            S(j, i) = I_;
            gens.push_back(A);
            gens.push_back(S);
        }
    for (int j = 0; j + 1 < n; ++j) {
        Mat H = Mat::Zero(n, n);
        H(j, j) = I_;
        H(j + 1, j + 1) = -I_;
        gens.push_back(H);
    }
    return orthonormal_span(gens);
}

Mat conjugated_hilbert(const Mat& k, const Mat& phi)
{
    return ad(k, hilbert(ad_inv(k, phi)));
}

/// w_{j-1} for each position of the word, position 0 being the leftmost letter gamma_n.
std::vector<Mat> prefixes(const RootDatum& datum, const Word& word)
{
    std::vector<Mat> w(word.size());
    Mat acc = Mat::Identity(datum.n, datum.n);
    for (std::size_t t = word.size(); t-- > 0;) {
        w[t] = acc;
        acc = simple_reflection(datum.n, word[t]) * acc;
    }
    return w;
}

void check_coordinates(const RootDatum& datum, const LeafCoordinates& c)
{
    if (c.word.size() != c.zeta.size())
        throw Error("leaf coordinates: word and zeta lengths differ");
    if (!is_reduced(datum.n, c.word))
        throw Error("leaf coordinates: word is not reduced");
}

/// w_{j-1}^{-1} h_{gamma_j} w_{j-1} for each letter.
std::vector<Mat> conjugated_coroots(const RootDatum& datum, const LeafCoordinates& c)
{
    const auto w = prefixes(datum, c.word);
    std::vector<Mat> out;
    for (std::size_t t = 0; t < c.word.size(); ++t) {
        const Mat h = datum.coroots[static_cast<std::size_t>(c.word[t] - 1)].cast<Complex>();
        out.push_back(ad_inv(w[t], h));
    }
    return out;
}

} // namespace

double pi_k(const Mat& k, const Mat& phi, const Mat& psi)
{
    return form(hilbert(phi) - conjugated_hilbert(k, phi), psi).real();
}

double big_pi_k(const Mat& k, const Mat& phi, const Mat& psi)
{
    return form(hilbert(phi) + conjugated_hilbert(k, phi), psi).real();
}

RMat big_pi_k_matrix(const Mat& k)
{
    const RealBasis b = su_basis(static_cast<int>(k.rows()));
    return operator_matrix(b, b, [&](const Mat& phi) -> Mat { return hilbert(phi) + conjugated_hilbert(k, phi); });
}

RMat pi_k_matrix(const Mat& k)
{
    const RealBasis b = su_basis(static_cast<int>(k.rows()));
    return operator_matrix(b, b, [&](const Mat& phi) -> Mat { return hilbert(phi) - conjugated_hilbert(k, phi); });
}

double pi_k_leaf_form(const Mat& k, const Mat& x, const Mat& y)
{
    const RealBasis b = su_basis(static_cast<int>(k.rows()));
    return coords(b, x).dot(pinv(pi_k_matrix(k)) * coords(b, y));
}

RMat leaf_gram(const Mat& k, const RMat& M, const std::vector<Mat>& xs)
{
    const RealBasis b = su_basis(static_cast<int>(k.rows()));
    RMat C(M.rows(), static_cast<Eigen::Index>(xs.size()));
    for (std::size_t j = 0; j < xs.size(); ++j)
        C.col(static_cast<Eigen::Index>(j)) = coords(b, xs[j]);
    return C.transpose() * pinv(M) * C;
}

RMat pi_k_leaf_gram(const Mat& k, const std::vector<Mat>& xs)
{
    return leaf_gram(k, pi_k_matrix(k), xs);
}

RMat big_pi_k_leaf_gram(const Mat& k, const std::vector<Mat>& xs)
{
    return leaf_gram(k, big_pi_k_matrix(k), xs);
}

double big_pi_k_leaf_form(const Mat& k, const Mat& x, const Mat& y)
{
    const int n = static_cast<int>(k.rows());
    return leaf_form_pinv(SpaceInstance::group(n), group_point(k), group_tangent(k, x), group_tangent(k, y));
}

TranslationCheck w0_translate_check(const Mat& k, const Mat& phi, const Mat& psi)
{
    const int n = static_cast<int>(k.rows());
    const Mat w0 = representative(n, reduced_word(longest_permutation(n)));
    TranslationCheck t;
    t.lhs = pi_k(k, ad_inv(w0, phi), ad_inv(w0, psi));
    t.rhs = -big_pi_k(w0 * k, phi, psi);
    return t;
}

Mat group_point(const Mat& k)
{
    const auto n = k.rows();
    Mat u = Mat::Identity(2 * n, 2 * n);
    u.topLeftCorner(n, n) = k;
    return u;
}

Mat group_to_k(const Mat& u)
{
    const auto n = u.rows() / 2;
    return u.topLeftCorner(n, n) * inverse(Mat(u.bottomRightCorner(n, n)));
}

Mat group_cotangent(const Mat& k, const Mat& phi)
{
    const auto n = k.rows();
    const Mat y = ad_inv(k, phi);
    Mat x = Mat::Zero(2 * n, 2 * n);
    x.topLeftCorner(n, n) = y;
    x.bottomRightCorner(n, n) = -y;
    return x;
}

Mat group_tangent(const Mat& k, const Mat& x)
{
    return 0.5 * group_cotangent(k, x);
}

Mat su2_k_of_zeta(Complex zeta)
{
    const double a = 1.0 / std::sqrt(1.0 + std::norm(zeta));
    Mat l = Mat::Identity(2, 2), d = Mat::Zero(2, 2), u = Mat::Identity(2, 2);
    l(1, 0) = zeta;
    d(0, 0) = a;
    d(1, 1) = 1.0 / a;
    u(0, 1) = -std::conj(zeta);
    return l * d * u;
}

Mat lu_product(const RootDatum& datum, const LeafCoordinates& c)
{
    check_coordinates(datum, c);
    const auto w = prefixes(datum, c.word);
    Mat P = Mat::Identity(datum.n, datum.n);
    for (std::size_t t = 0; t < c.word.size(); ++t)
        P *= ad_inv(w[t], embed_root(datum.n, c.word[t], su2_k_of_zeta(c.zeta[t])));
    return P;
}

Mat lu_coordinates_to_l(const RootDatum& datum, const LeafCoordinates& c)
{
    return birkhoff(lu_product(datum, c)).l;
}

Mat lu_a_product(const RootDatum& datum, const LeafCoordinates& c)
{
    check_coordinates(datum, c);
    const auto h = conjugated_coroots(datum, c);
    Mat log_a = Mat::Zero(datum.n, datum.n);
    for (std::size_t t = 0; t < h.size(); ++t)
        log_a += -0.5 * std::log1p(std::norm(c.zeta[t])) * h[t];
    return exp_diagonal(log_a);
}

std::vector<double> lu_form_coefficients(const RootDatum& datum, const LeafCoordinates& c)
{
    check_coordinates(datum, c);
    std::vector<double> out;
    for (std::size_t t = 0; t < c.word.size(); ++t) {
        const double norm = datum.norms[static_cast<std::size_t>(c.word[t] - 1)];
        out.push_back(1.0 / (norm * (1.0 + std::norm(c.zeta[t]))));
    }
    return out;
}

double haar_density(const RootDatum& datum, const LeafCoordinates& c)
{
    check_coordinates(datum, c);
    const auto h = conjugated_coroots(datum, c);
    double rho = 1.0;
    for (std::size_t t = 0; t < h.size(); ++t) {
        const double e = evaluate_functional(datum, Functional::delta_check, h[t]).real() - 1.0;
        rho *= std::pow(1.0 + std::norm(c.zeta[t]), e);
    }
    return rho;
}

LeafCoordinates torus_rotate(const RootDatum& datum, const LeafCoordinates& c, const Mat& t)
{
    check_coordinates(datum, c);
    const auto w = prefixes(datum, c.word);
    LeafCoordinates out = c;
    for (std::size_t j = 0; j < c.word.size(); ++j) {
        const Mat s = ad(w[j], t);
        const int r = c.word[j] - 1;
        out.zeta[j] *= s(r + 1, r + 1) / s(r, r);
    }
    return out;
}

std::vector<double> momentum_in_coordinates(const RootDatum& datum, const LeafCoordinates& c)
{
    const Mat log_a = log_positive_diagonal(lu_a_product(datum, c));
    std::vector<double> out;
    for (const auto& h : datum.coroots)
        out.push_back(-form(0.5 * I_ * log_a, I_ * h.cast<Complex>()).real());
    return out;
}

DensityReport density_report(const RootDatum& datum, const LeafCoordinates& c)
{
    return {lu_form_coefficients(datum, c), lu_a_product(datum, c), haar_density(datum, c)};
}

Mat s1_point(const Mat& l)
{
    Eigen::HouseholderQR<Mat> qr(l);
    Mat Q = qr.householderQ();
    const Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < l.cols(); ++j) {
        const Complex d = R(j, j);
        Q.col(j) *= d / std::abs(d);
    }
    return Q;
}

Mat s1_g0(const Mat& l)
{
    const auto n = l.rows();
    Mat g0 = Mat::Zero(2 * n, 2 * n);
    g0.topLeftCorner(n, n) = inverse(l);
    g0.bottomRightCorner(n, n) = l.adjoint();
    return g0;
}

Mat cell_point(const RootDatum& datum, const LeafCoordinates& c)
{
    return representative(datum.n, c.word) * s1_point(lu_coordinates_to_l(datum, c));
}

RMat cell_pulled_back_coefficients(const RootDatum& datum, const LeafCoordinates& c, double step)
{
    const auto m = static_cast<Eigen::Index>(c.zeta.size());
    const Mat k = cell_point(datum, c);
    const Mat k_inv = k.adjoint();
    std::vector<Mat> x;
    for (Eigen::Index r = 0; r < 2 * m; ++r) {
        const Complex dz = (r % 2 == 0) ? Complex(step, 0.0) : Complex(0.0, step);
        LeafCoordinates plus = c, minus = c;
        plus.zeta[static_cast<std::size_t>(r / 2)] += dz;
        minus.zeta[static_cast<std::size_t>(r / 2)] -= dz;
        const Mat d = (cell_point(datum, plus) - cell_point(datum, minus)) * k_inv / (2.0 * step);
        x.push_back(0.5 * (d - d.adjoint()));
    }
    return 0.5 * pi_k_leaf_gram(k, x);
}

RMat pulled_back_coefficients(const RootDatum& datum, const LeafCoordinates& c, double step)
{
    const SpaceInstance inst = SpaceInstance::group(datum.n);
    const auto m = static_cast<Eigen::Index>(c.zeta.size());
    auto point = [&](const LeafCoordinates& cc) { return group_point(s1_point(lu_coordinates_to_l(datum, cc))); };
    const Mat u = point(c);
    std::vector<Mat> x;
    for (Eigen::Index r = 0; r < 2 * m; ++r) {
        const Complex dz = (r % 2 == 0) ? Complex(step, 0.0) : Complex(0.0, step);
        LeafCoordinates plus = c, minus = c;
        plus.zeta[static_cast<std::size_t>(r / 2)] += dz;
        minus.zeta[static_cast<std::size_t>(r / 2)] -= dz;
        x.push_back(project(inst, Space::ip, inverse(u) * (point(plus) - point(minus)) / (2.0 * step)));
    }
    RMat W(2 * m, 2 * m);
    for (Eigen::Index r = 0; r < 2 * m; ++r)
        for (Eigen::Index s = 0; s < 2 * m; ++s)
            W(r, s) = 0.5 * leaf_form_pinv(inst, u, x[static_cast<std::size_t>(r)], x[static_cast<std::size_t>(s)]);
    return W;
}

} // namespace liepoisson
