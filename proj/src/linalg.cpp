#include "liepoisson/linalg.hpp"

#include <algorithm>

namespace liepoisson {

namespace {

RVec realify(const Mat& X)
{
    RVec v(2 * X.size());
    for (Eigen::Index k = 0; k < X.size(); ++k) {
        v(2 * k) = X.data()[k].real();
        v(2 * k + 1) = X.data()[k].imag();
    }
    return v;
}

Mat unrealify(const RVec& v, Eigen::Index rows, Eigen::Index cols)
{
    Mat X(rows, cols);
    for (Eigen::Index k = 0; k < X.size(); ++k)
        X.data()[k] = Complex(v(2 * k), v(2 * k + 1));
    return X;
}

// Singular values below tol * max(s_max, 1) count as zero; operators here are O(1).
int rank_of(const RVec& s, double rel_tol)
{
    if (s.size() == 0)
        return 0;
    return static_cast<int>((s.array() > rel_tol * std::max(s(0), 1.0)).count());
}

} // namespace

double real_inner(const Mat& X, const Mat& Y)
{
    return (X.conjugate().cwiseProduct(Y)).sum().real();
}

RealBasis orthonormal_span(const std::vector<Mat>& gens, double rel_tol)
{
    if (gens.empty())
        return {};
    const auto rows = gens.front().rows(), cols = gens.front().cols();
    RMat M(2 * rows * cols, static_cast<Eigen::Index>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
        M.col(static_cast<Eigen::Index>(j)) = realify(gens[j]);
    Eigen::JacobiSVD<RMat> svd(M, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    RealBasis out;
    if (s.size() == 0 || s(0) == 0.0)
        return out;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) > rel_tol * s(0))
            out.push_back(unrealify(svd.matrixU().col(k), rows, cols));
    return out;
}

RVec coords(const RealBasis& basis, const Mat& X)
{
    RVec c(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        c(static_cast<Eigen::Index>(k)) = real_inner(basis[k], X);
    return c;
}

Mat combine(const RealBasis& basis, const RVec& c)
{
    if (basis.empty())
        throw Error("combine: empty basis");
    Mat X = Mat::Zero(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
        X += c(static_cast<Eigen::Index>(k)) * basis[k];
    return X;
}

Mat project_onto(const RealBasis& basis, const Mat& X)
{
    Mat P = Mat::Zero(X.rows(), X.cols());
    for (const auto& b : basis)
        P += real_inner(b, X) * b;
    return P;
}

RMat operator_matrix(const RealBasis& domain, const RealBasis& codomain,
                     const std::function<Mat(const Mat&)>& f)
{
    RMat M(static_cast<Eigen::Index>(codomain.size()), static_cast<Eigen::Index>(domain.size()));
    for (std::size_t j = 0; j < domain.size(); ++j)
        M.col(static_cast<Eigen::Index>(j)) = coords(codomain, f(domain[j]));
    return M;
}

RMat gram_matrix(const RealBasis& basis)
{
    const auto d = static_cast<Eigen::Index>(basis.size());
    RMat G(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            G(i, j) = form(basis[i], basis[j]).real();
    return G;
}

int numerical_rank(const RMat& M, double rel_tol)
{
    if (M.size() == 0)
        return 0;
    return rank_of(Eigen::JacobiSVD<RMat>(M).singularValues(), rel_tol);
}

RMat null_space(const RMat& M, double rel_tol)
{
    if (M.cols() == 0)
        return RMat(0, 0);
    if (M.rows() == 0)
        return RMat::Identity(M.cols(), M.cols());
    Eigen::JacobiSVD<RMat> svd(M, Eigen::ComputeFullV);
    const int rank = rank_of(svd.singularValues(), rel_tol);
    return svd.matrixV().rightCols(M.cols() - rank);
}

RMat pinv(const RMat& M, double rel_tol)
{
    Eigen::JacobiSVD<RMat> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    RVec inv = RVec::Zero(s.size());
    const int rank = rank_of(s, rel_tol);
    for (Eigen::Index k = 0; k < rank; ++k)
        inv(k) = 1.0 / s(k);
    RMat S = RMat::Zero(M.cols(), M.rows());
    for (Eigen::Index k = 0; k < s.size(); ++k)
        S(k, k) = inv(k);
    return svd.matrixV() * S * svd.matrixU().transpose();
}

double subspace_distance(const RealBasis& A, const RealBasis& B)
{
    if (A.size() != B.size())
        return 1.0;
    if (A.empty())
        return 0.0;
    // sin of the largest principal angle, from the part of A orthogonal to B
    const auto dim = 2 * A.front().size();
    RMat Av(dim, static_cast<Eigen::Index>(A.size())), Bv(dim, static_cast<Eigen::Index>(B.size()));
    for (std::size_t i = 0; i < A.size(); ++i) {
        Av.col(static_cast<Eigen::Index>(i)) = realify(A[i]);
        Bv.col(static_cast<Eigen::Index>(i)) = realify(B[i]);
    }
    const RMat R = Av - Bv * (Bv.transpose() * Av);
    Eigen::JacobiSVD<RMat> svd(R);
    return svd.singularValues()(0);
}

RealBasis basis_from_columns(const RealBasis& basis, const RMat& cols)
{
    RealBasis out;
    for (Eigen::Index j = 0; j < cols.cols(); ++j)
        out.push_back(combine(basis, cols.col(j)));
    return out;
}

} // namespace liepoisson
