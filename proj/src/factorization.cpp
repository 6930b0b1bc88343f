#include "liepoisson/factorization.hpp"

#include <cmath>
#include <sstream>

namespace liepoisson {

namespace {

std::string perm_string(const Permutation& p)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? " " : "") << p[i] + 1;
    os << "]";
    return os.str();
}

Mat iwasawa_lau(const Mat& g, Mat& l, Mat& a)
{
    const auto N = g.rows();
    Eigen::LLT<Mat> llt(g * g.adjoint());
    if (llt.info() != Eigen::Success)
        throw Error("iwasawa: singular input");
    const Mat L = llt.matrixL();
    a = Mat::Zero(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
        if (!(L(i, i).real() > 0.0))
            throw Error("iwasawa: singular input");
        a(i, i) = L(i, i).real();
    }
    l = L;
    for (Eigen::Index j = 0; j < N; ++j)
        l.col(j) /= a(j, j);
    return L.triangularView<Eigen::Lower>().solve(g);
}

} // namespace

Mat log_positive_diagonal(const Mat& a)
{
    Mat L = Mat::Zero(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        L(i, i) = std::log(a(i, i).real());
    return L;
}

Mat exp_diagonal(const Mat& d)
{
    Mat E = Mat::Zero(d.rows(), d.cols());
    for (Eigen::Index i = 0; i < d.rows(); ++i)
        E(i, i) = std::exp(d(i, i));
    return E;
}

IwasawaFactors iwasawa(const Mat& g)
{
    IwasawaFactors f;
    if (!g.allFinite())
        throw Error("iwasawa: non-finite input");
    Eigen::JacobiSVD<Mat> svd(g);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) <= 1e-14 * s(0))
        throw Error("iwasawa: singular input");
    f.u = iwasawa_lau(g, f.l, f.a);
    f.a0 = Mat::Identity(g.rows(), g.cols());
    f.a1 = f.a;
    return f;
}

IwasawaFactors iwasawa(const SpaceInstance& inst, const Mat& g)
{
    if (g.rows() != inst.dim() || g.cols() != inst.dim())
        throw Error("iwasawa: size mismatch");
    IwasawaFactors f = iwasawa(g);
    const Mat log_a = log_positive_diagonal(f.a);
    const Mat log_a0 = project(inst, Space::a0, log_a);
    f.a0 = exp_diagonal(log_a0);
    f.a1 = exp_diagonal(log_a - log_a0);
    return f;
}

bool BruhatCell::is_identity() const
{
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i))
            return false;
    return true;
}

BruhatCell bruhat_cell(const Mat& g)
{
    const int n = static_cast<int>(g.rows());
    // r(i,j): rank of the leading (i+1) x (j+1) block, with zero borders
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    BruhatCell cell;
    const double scale = Eigen::JacobiSVD<Mat>(g).singularValues()(0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Eigen::JacobiSVD<Mat> svd(g.topLeftCorner(i, j));
            const auto& s = svd.singularValues();
            int rank = 0;
            for (Eigen::Index k = 0; k < s.size(); ++k) {
                if (scale <= 0.0)
                    break;
                const double rel = s(k) / scale;
                if (rel > 1e-10)
                    ++rank;
                if (rel > 1e-12 && rel < 1e-8)
                    cell.marginal = true;
            }
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rank;
        }
    cell.perm.assign(static_cast<std::size_t>(n), -1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
            const int d = r[I][J] - r[I - 1][J] - r[I][J - 1] + r[I - 1][J - 1];
            if (d == 1)
                cell.perm[I - 1] = j - 1;
        }
    if (!is_permutation(cell.perm))
        throw Error("bruhat_cell: inconsistent rank profile");
    return cell;
}

OffTopStratum::OffTopStratum(Permutation cell)
    : Error("off top stratum: cell " + perm_string(cell)), cell_(std::move(cell))
{
}

BirkhoffFactors birkhoff(const Mat& k)
{
    const BruhatCell cell = bruhat_cell(k);
    if (!cell.is_identity())
        throw OffTopStratum(cell.perm);
    const auto n = k.rows();
    // Doolittle elimination without pivoting
    Mat L = Mat::Identity(n, n), U = k;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const Complex f = U(i, j) / U(j, j);
            L(i, j) = f;
            U.row(i) -= f * U.row(j);
            U(i, j) = 0.0;
        }
    BirkhoffFactors b;
    b.w = cell.perm;
    b.l = L;
    b.m = Mat::Zero(n, n);
    b.a = Mat::Zero(n, n);
    b.u_plus = Mat::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex d = U(i, i);
        b.a(i, i) = std::abs(d);
        b.m(i, i) = d / std::abs(d);
        for (Eigen::Index j = i + 1; j < n; ++j)
            b.u_plus(i, j) = U(i, j) / d;
    }
    return b;
}

Mat cartan_embed(const SpaceInstance& inst, const Mat& u)
{
    return u * inverse(theta(inst, u));
}

BruhatCell layer_of(const SpaceInstance& inst, const Mat& u)
{
    return bruhat_cell(cartan_embed(inst, u));
}

} // namespace liepoisson
