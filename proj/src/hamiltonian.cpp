#include "liepoisson/hamiltonian.hpp"

namespace liepoisson {

namespace {

void check_base(const TangentVector& v1, const TangentVector& v2)
{
    if (v1.base.rows() != v2.base.rows() || (v1.base - v2.base).norm() > 1e-12 * (1.0 + v1.base.norm()))
        throw Error("tangent vectors have different base points");
}

Mat conjugated_hilbert(const Mat& u, const Mat& x)
{
    return ad_inv(u, hilbert(ad(u, x)));
}

} // namespace

LeafParameter leaf_parameter(const SpaceInstance& inst, const Mat& w1)
{
    LeafParameter leaf;
    leaf.w1 = w1;
    leaf.w_hat = cartan_embed(inst, w1);
    if (normalizes_torus(leaf.w_hat))
        leaf.w = weyl_element(monomial_pattern(leaf.w_hat));
    return leaf;
}

Mat dressing(const SpaceInstance& inst, const Mat& u, const Mat& g0)
{
    (void)inst;
    return iwasawa(u * g0).u;
}

double omega(const SpaceInstance& inst, const Mat& w1, const TangentVector& v1, const TangentVector& v2)
{
    check_base(v1, v2);
    const Mat u = dressing(inst, w1, v1.base);
    const double xy = form(conjugated_hilbert(u, v1.vec), v2.vec).real();
    const double yx = form(conjugated_hilbert(u, v2.vec), v1.vec).real();
    return 0.5 * (xy - yx);
}

double omega_factored(const SpaceInstance& inst, const Mat& w1, const TangentVector& v1,
                      const TangentVector& v2)
{
    check_base(v1, v2);
    const auto f = iwasawa(w1 * v1.base);
    const Mat la_inv_w1 = inverse(f.l * f.a) * w1;
    auto apply = [&](const Mat& x) {
        const Mat T = pr_u(ad(la_inv_w1, ad(v1.base, x)));
        return iota_left(inst, ad_inv(f.u, T));
    };
    const double xy = form(apply(v1.vec), v2.vec).real();
    const double yx = form(apply(v2.vec), v1.vec).real();
    return 0.5 * (xy - yx);
}

RMat omega_matrix(const SpaceInstance& inst, const Mat& w1, const Mat& g0)
{
    const auto& p = inst.basis(Space::p);
    const auto n = static_cast<Eigen::Index>(p.size());
    RMat M(n, n);
    const Mat u = dressing(inst, w1, g0);
    std::vector<Mat> Hp;
    for (const auto& x : p)
        Hp.push_back(conjugated_hilbert(u, x));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            M(i, j) = form(Hp[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]).real();
    return 0.5 * (M - M.transpose());
}

RealBasis stabilizer_algebra(const SpaceInstance& inst, const Mat& w1)
{
    const auto& g0 = inst.basis(Space::g0);
    const RMat M = operator_matrix(g0, inst.basis(Space::u), [&](const Mat& b) { return pr_u(ad(w1, b)); });
    return basis_from_columns(g0, null_space(M));
}

RealBasis omega_kernel(const SpaceInstance& inst, const Mat& w1, const Mat& g0)
{
    return basis_from_columns(inst.basis(Space::p), null_space(omega_matrix(inst, w1, g0), 1e-8));
}

RealBasis predicted_kernel(const SpaceInstance& inst, const Mat& w1, const Mat& g0)
{
    std::vector<Mat> gens;
    for (const auto& b : stabilizer_algebra(inst, w1))
        gens.push_back(kappa(inst, b, g0));
    return orthonormal_span(gens, 1e-8);
}

Mat kappa(const SpaceInstance& inst, const Mat& X, const Mat& g0)
{
    return project(inst, Space::p, ad_inv(g0, X));
}

RealBasis t_w_basis(const SpaceInstance& inst, const LeafParameter& leaf)
{
    if (!normalizes_torus(leaf.w_hat))
        throw Error("t_w_basis: w_hat does not normalize the torus");
    const auto& t = inst.basis(Space::t);
    RMat M = operator_matrix(t, t, [&](const Mat& x) { return ad(leaf.w_hat, theta(inst, x)); });
    M -= RMat::Identity(M.rows(), M.cols());
    return basis_from_columns(t, null_space(M));
}

double t_w_residual(const SpaceInstance& inst, const LeafParameter& leaf, const Mat& t)
{
    return residual(inst, GroupSpace::T, t) +
           frob(leaf.w_hat * theta(inst, t) * inverse(leaf.w_hat) - t);
}

Mat torus_act(const SpaceInstance& inst, const LeafParameter& leaf, const Mat& t, const Mat& g0)
{
    if (t_w_residual(inst, leaf, t) > 1e-10)
        throw Error("torus_act: t is not in T_w");
    return leaf.w1.adjoint() * t * leaf.w1 * g0;
}

double momentum_component(const SpaceInstance& inst, const Mat& w1, const Mat& X, const Mat& g0)
{
    (void)inst;
    const Mat log_a = log_positive_diagonal(iwasawa(w1 * g0).a);
    return form(I_ * X, log_a).real();
}

MomentumValue momentum(const SpaceInstance& inst, const LeafParameter& leaf, const Mat& g0)
{
    MomentumValue m;
    for (const auto& b : t_w_basis(inst, leaf))
        m.coefficients.push_back(momentum_component(inst, leaf.w1, b, g0));
    return m;
}

} // namespace liepoisson
