#pragma once

#include <functional>

#include "liepoisson/lie_core.hpp"

namespace liepoisson {

/// Re tr(X^* Y).
double real_inner(const Mat& X, const Mat& Y);

/// Orthonormal basis of the real span of the generators.
RealBasis orthonormal_span(const std::vector<Mat>& gens, double rel_tol = 1e-10);

RVec coords(const RealBasis& basis, const Mat& X);
Mat combine(const RealBasis& basis, const RVec& c);
/// Orthogonal projection onto the span of an orthonormal basis.
Mat project_onto(const RealBasis& basis, const Mat& X);

/// Matrix of a real-linear map between two spans in their orthonormal bases.
RMat operator_matrix(const RealBasis& domain, const RealBasis& codomain,
                     const std::function<Mat(const Mat&)>& f);
/// Matrix of the trace-form pairing (b_i, b_j) restricted to a span.
RMat gram_matrix(const RealBasis& basis);

int numerical_rank(const RMat& M, double rel_tol = 1e-10);
/// Orthonormal columns spanning the null space; tolerances are relative to max(s_max, 1).
RMat null_space(const RMat& M, double rel_tol = 1e-10);
RMat pinv(const RMat& M, double rel_tol = 1e-10);

/// Largest sine of the principal angles between two spans (1 on dimension mismatch).
double subspace_distance(const RealBasis& A, const RealBasis& B);

/// Basis elements sum_k c_ik b_k for the columns c_i of the coefficient matrix.
RealBasis basis_from_columns(const RealBasis& basis, const RMat& cols);

} // namespace liepoisson
