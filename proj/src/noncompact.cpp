#include "liepoisson/noncompact.hpp"

namespace liepoisson {

Mat omega_noncompact(const SpaceInstance& inst, const Mat& g0, const Mat& phi)
{
    return project(inst, Space::p, ad_inv(g0, hilbert(ad(g0, phi))));
}

double pi_noncompact(const SpaceInstance& inst, const TangentVector& phi, const TangentVector& psi)
{
    if ((phi.base - psi.base).norm() > 1e-12 * (1.0 + phi.base.norm()))
        throw Error("pi_noncompact: different base points");
    const double a = form(omega_noncompact(inst, phi.base, phi.vec), psi.vec).real();
    const double b = form(omega_noncompact(inst, phi.base, psi.vec), phi.vec).real();
    return 0.5 * (a - b);
}

RMat omega_noncompact_matrix(const SpaceInstance& inst, const Mat& g0)
{
    const auto& p = inst.basis(Space::p);
    return operator_matrix(p, p, [&](const Mat& x) { return omega_noncompact(inst, g0, x); });
}

Mat big_l(const SpaceInstance& inst, const Mat& g0)
{
    const auto f = iwasawa(inst, g0);
    return inverse(f.a0) * f.l * f.a0 * f.a1;
}

TOperator t_operator(const SpaceInstance& inst, const Mat& g0)
{
    TOperator T;
    T.g0 = g0;
    T.L = big_l(inst, g0);
    T.as_matrix = operator_matrix(inst.basis(Space::u), inst.basis(Space::g0),
                                  [&](const Mat& X) { return t_apply(inst, T.L, X); });
    return T;
}

Mat t_apply(const SpaceInstance& inst, const Mat& L, const Mat& X)
{
    const Mat XL = ad(L, upper(X));
    const Mat XLp = upper(XL);
    return sigma(inst, XLp) + project(inst, Space::t0, X) + project(inst, Space::h0, XL) + XLp;
}

Mat t_apply_composed(const SpaceInstance& inst, const Mat& L, const Mat& X)
{
    return pr_g0(inst, ad(L, X));
}

Mat t_adjoint(const SpaceInstance& inst, const Mat& L, const Mat& y)
{
    const Mat W = lower(ad_inv(L, project(inst, Space::h0, y) + 2.0 * lower(y)));
    return 0.5 * (W + 2.0 * project(inst, Space::t0, y) - W.adjoint());
}

Mat t_cokernel_element(const SpaceInstance& inst, const Mat& L, const Mat& y0)
{
    const Mat d = ad(L, y0) - y0;
    return d + 2.0 * y0 + sigma(inst, d);
}

StagedSolution t_solve_staged(const SpaceInstance& inst, const Mat& L, const Mat& y, double tol)
{
    StagedSolution s;
    const Mat xp = upper(ad_inv(L, upper(y)));
    const Mat xpL = ad(L, xp);
    s.image_residual = frob(project(inst, Space::a0, y - xpL));
    if (s.image_residual > tol)
        throw Error("t_solve_staged: not in image");
    s.x = xp - xp.adjoint() + project(inst, Space::t0, y) - project(inst, Space::t0, xpL);
    return s;
}

Mat casimir(const SpaceInstance& inst, const Mat& g0)
{
    return iwasawa(inst, g0).a0;
}

Mat horizontal_section(const SpaceInstance& inst, const Mat& g0)
{
    return inverse(casimir(inst, g0)) * g0;
}

LeafTest leaf_tangent_test(const SpaceInstance& inst, const TangentVector& v, double tol)
{
    const Mat u = iwasawa(v.base).u;
    LeafTest t;
    t.residual = frob(project(inst, Space::a0, ad(u, v.vec)));
    t.tangent = t.residual < tol * std::max(1.0, frob(v.vec));
    return t;
}

double noncompact_leaf_form(const SpaceInstance& inst, const TangentVector& v1, const TangentVector& v2)
{
    const auto& p = inst.basis(Space::p);
    const RMat Minv = pinv(omega_noncompact_matrix(inst, v1.base), 1e-10);
    const RVec x = coords(p, v1.vec), y = coords(p, v2.vec);
    return x.dot(Minv * y);
}

} // namespace liepoisson
