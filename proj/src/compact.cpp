#include "liepoisson/compact.hpp"

#include <algorithm>
#include <numbers>

namespace liepoisson {

namespace {

Mat conjugated_hilbert(const Mat& u, const Mat& x)
{
    return ad_inv(u, hilbert(ad(u, x)));
}

Mat unit(int n, int i, int j)
{
    Mat E = Mat::Zero(n, n);
    E(i, j) = 1.0;
    return E;
}

/// Coordinates of Z in the root basis, ordered n+, h, n-.
Eigen::VectorXcd root_coords(const RootBasis& rb, const Mat& Z)
{
    const auto np = static_cast<Eigen::Index>(rb.n_plus.size());
    const auto nh = static_cast<Eigen::Index>(rb.h.size());
    Eigen::VectorXcd c(2 * np + nh);
    for (Eigen::Index k = 0; k < np; ++k) {
        const auto& E = rb.n_plus[static_cast<std::size_t>(k)];
        Eigen::Index i, j;
        E.cwiseAbs().maxCoeff(&i, &j);
        c(k) = Z(i, j);
        const auto& F = rb.n_minus[static_cast<std::size_t>(k)];
        F.cwiseAbs().maxCoeff(&i, &j);
        c(np + nh + k) = Z(i, j);
    }
    if (nh > 0) {
        Mat H(Z.rows(), nh);
        for (Eigen::Index k = 0; k < nh; ++k)
            H.col(k) = rb.h[static_cast<std::size_t>(k)].diagonal();
        c.segment(np, nh) = H.colPivHouseholderQr().solve(Eigen::VectorXcd(Z.diagonal()));
    }
    return c;
}

std::vector<Mat> root_list(const RootBasis& rb)
{
    std::vector<Mat> all = rb.n_plus;
    all.insert(all.end(), rb.h.begin(), rb.h.end());
    all.insert(all.end(), rb.n_minus.begin(), rb.n_minus.end());
    return all;
}

/// Real coordinates (Re, Im per entry) of the n- part in the order of rb.n_minus.
RVec realify(const RootBasis& rb, const Mat& Z)
{
    RVec v(2 * static_cast<Eigen::Index>(rb.n_minus.size()));
    for (std::size_t k = 0; k < rb.n_minus.size(); ++k) {
        Eigen::Index i, j;
        rb.n_minus[k].cwiseAbs().maxCoeff(&i, &j);
        v(2 * static_cast<Eigen::Index>(k)) = Z(i, j).real();
        v(2 * static_cast<Eigen::Index>(k) + 1) = Z(i, j).imag();
    }
    return v;
}

Mat complexify(const RootBasis& rb, const RVec& v, int n)
{
    Mat Z = Mat::Zero(n, n);
    for (std::size_t k = 0; k < rb.n_minus.size(); ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        Z += Complex(v(2 * kk), v(2 * kk + 1)) * rb.n_minus[k];
    }
    return Z;
}

Mat c_sigma_apply(const SpaceInstance& inst, const Mat& w_hat, const Mat& v)
{
    return lower(ad(w_hat, sigma(inst, v)));
}

} // namespace

Mat omega_compact(const SpaceInstance& inst, const Mat& u, const Mat& phi)
{
    return project(inst, Space::ip, conjugated_hilbert(u, phi));
}

double pi_compact(const SpaceInstance& inst, const TangentVector& phi, const TangentVector& psi)
{
    if ((phi.base - psi.base).norm() > 1e-12 * (1.0 + phi.base.norm()))
        throw Error("pi_compact: different base points");
    const double a = form(omega_compact(inst, phi.base, phi.vec), psi.vec).real();
    const double b = form(omega_compact(inst, phi.base, psi.vec), phi.vec).real();
    return 0.5 * (a - b);
}

RMat omega_compact_matrix(const SpaceInstance& inst, const Mat& u)
{
    const auto& ip = inst.basis(Space::ip);
    return operator_matrix(ip, ip, [&](const Mat& x) { return omega_compact(inst, u, x); });
}

RealBasis pi_compact_kernel(const SpaceInstance& inst, const Mat& u)
{
    return basis_from_columns(inst.basis(Space::ip), null_space(omega_compact_matrix(inst, u), 1e-8));
}

RealBasis predicted_compact_kernel(const SpaceInstance& inst, const Mat& w1, const Mat& g0)
{
    std::vector<Mat> gens;
    for (const auto& b : stabilizer_algebra(inst, w1))
        gens.push_back(I_ * kappa(inst, b, g0));
    return orthonormal_span(gens, 1e-8);
}

Mat u_tilde(const SpaceInstance& inst, const Mat& w1, const Mat& g0)
{
    return dressing(inst, w1, g0);
}

TangentVector u_tilde_pushforward(const SpaceInstance& inst, const Mat& w1, const TangentVector& v)
{
    const Mat u = u_tilde(inst, w1, v.base);
    return {u, omega_compact(inst, u, -I_ * v.vec)};
}

TangentVector u_tilde_pushforward_adjoint(const SpaceInstance& inst, const Mat& w1, const Mat& g0,
                                          const Mat& phi)
{
    const Mat u = u_tilde(inst, w1, g0);
    return {g0, project(inst, Space::p, ad_inv(u, I_ * hilbert(ad(u, phi))))};
}

RootBasis root_basis(const SpaceInstance& inst)
{
    RootBasis rb;
    const int n = inst.dim(), m = inst.block_size();
    for (int b = 0; b < inst.blocks(); ++b) {
        const int o = b * m;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                rb.n_plus.push_back(unit(n, o + i, o + j));
                rb.n_minus.push_back(unit(n, o + j, o + i));
            }
        for (int j = 0; j + 1 < m; ++j)
            rb.h.push_back(unit(n, o + j, o + j) - unit(n, o + j + 1, o + j + 1));
    }
    return rb;
}

Mat ad_root_matrix(const SpaceInstance& inst, const Mat& w_hat)
{
    const RootBasis rb = root_basis(inst);
    const auto all = root_list(rb);
    Mat M(static_cast<Eigen::Index>(all.size()), static_cast<Eigen::Index>(all.size()));
    for (std::size_t k = 0; k < all.size(); ++k)
        M.col(static_cast<Eigen::Index>(k)) = root_coords(rb, ad(w_hat, all[k]));
    return M;
}

AdWBlocks ad_w_blocks(const SpaceInstance& inst, const Mat& w_hat)
{
    if (!normalizes_torus(w_hat))
        throw Error("ad_w_blocks: w_hat does not normalize the torus");
    const RootBasis rb = root_basis(inst);
    const Mat M = ad_root_matrix(inst, w_hat);
    const auto np = static_cast<Eigen::Index>(rb.n_plus.size());
    const auto nh = static_cast<Eigen::Index>(rb.h.size());
    AdWBlocks blk;
    blk.w_hat = w_hat;
    blk.A = M.block(0, 0, np, np);
    blk.B = M.block(0, np + nh, np, np);
    blk.C = M.block(np + nh, 0, np, np);
    blk.D = M.block(np + nh, np + nh, np, np);
    blk.w_h = M.block(np, np, nh, nh);
    return blk;
}

Mat assemble(const AdWBlocks& blk)
{
    const auto np = blk.A.rows(), nh = blk.w_h.rows();
    Mat M = Mat::Zero(2 * np + nh, 2 * np + nh);
    M.block(0, 0, np, np) = blk.A;
    M.block(0, np + nh, np, np) = blk.B;
    M.block(np + nh, 0, np, np) = blk.C;
    M.block(np + nh, np + nh, np, np) = blk.D;
    M.block(np, np, nh, nh) = blk.w_h;
    return M;
}

HwOperator h_w_operator(const SpaceInstance& inst, const Mat& w_hat)
{
    HwOperator op{inst, ad_w_blocks(inst, w_hat), RMat(), {}};
    const RootBasis rb = root_basis(inst);
    const auto m = static_cast<Eigen::Index>(2 * rb.n_minus.size());
    op.c_sigma = RMat::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        RVec e = RVec::Unit(m, k);
        op.c_sigma.col(k) = realify(rb, c_sigma_apply(inst, w_hat, complexify(rb, e, inst.dim())));
    }
    op.solver.compute(RMat::Identity(m, m) - op.c_sigma);
    return op;
}

double h_w_domain_residual(const HwOperator& op, const Mat& chi)
{
    const RootBasis rb = root_basis(op.inst);
    const RVec b = realify(rb, chi);
    if (b.size() == 0)
        return 0.0;
    const RVec z = op.solver.solve(b);
    const auto m = b.size();
    return ((RMat::Identity(m, m) - op.c_sigma) * z - b).norm();
}

Mat h_w_apply(const HwOperator& op, const Mat& chi, double tol)
{
    const RootBasis rb = root_basis(op.inst);
    const RVec b = realify(rb, chi);
    const auto m = b.size();
    const RVec z = m > 0 ? RVec(op.solver.solve(b)) : RVec(b);
    if (m > 0 && ((RMat::Identity(m, m) - op.c_sigma) * z - b).norm() > tol * std::max(1.0, b.norm()))
        throw Error("h_w_apply: outside domain D(H_w)");
    const RVec w = z + op.c_sigma * z;
    return -I_ * complexify(rb, w, op.inst.dim()) + I_ * upper(chi);
}

RealBasis h_w_ambiguity(const HwOperator& op)
{
    const RootBasis rb = root_basis(op.inst);
    const auto m = op.c_sigma.rows();
    std::vector<Mat> gens;
    if (m == 0)
        return gens;
    const RMat K = null_space(RMat::Identity(m, m) - op.c_sigma);
    for (Eigen::Index c = 0; c < K.cols(); ++c)
        gens.push_back(I_ * complexify(rb, K.col(c), op.inst.dim()));
    return orthonormal_span(gens);
}

Mat project_g0w(const SpaceInstance& inst, const Mat& w_hat, const Mat& Z)
{
    return 0.5 * (Z + ad(w_hat, sigma(inst, Z)));
}

Mat project_ig0w(const SpaceInstance& inst, const Mat& w_hat, const Mat& Z)
{
    return 0.5 * (Z - ad(w_hat, sigma(inst, Z)));
}

Mat z_operator(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& x)
{
    (void)inst;
    const auto f = iwasawa(w1 * g0);
    const Mat la = f.l * f.a;
    const Mat xu = ad(f.u, x);
    const Mat xw = ad(w1 * g0, x);
    return -(diagonal(xu) - diagonal(xw)) + lower(ad(la, diagonal(xu) + 2.0 * upper(xu)));
}

Mat z_operator_direct(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& x)
{
    (void)inst;
    const auto f = iwasawa(w1 * g0);
    const Mat la = f.l * f.a;
    const Mat chi = ad(w1 * g0, x);
    return -I_ * (ad(la, hilbert(ad_inv(la, chi))) - hilbert(chi));
}

double leaf_tangency_residual(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& x)
{
    const Mat ixg = ad(g0, I_ * x);
    double r = 0.0;
    for (const auto& b : stabilizer_algebra(inst, w1))
        r += std::norm(form(ixg, b).real());
    return std::sqrt(r);
}

double leaf_form(const HwOperator& op, const LeafParameter& leaf, const Mat& g0, const Mat& x, const Mat& y,
                 double tol)
{
    const SpaceInstance& inst = op.inst;
    if (leaf_tangency_residual(inst, leaf.w1, g0, x) > tol * std::max(1.0, frob(x)) ||
        leaf_tangency_residual(inst, leaf.w1, g0, y) > tol * std::max(1.0, frob(y)))
        throw Error("leaf_form: vector not tangent to the leaf");
    const Mat wg = leaf.w1 * g0;
    return form(h_w_apply(op, ad(wg, y), tol), ad(wg, x)).real();
}

double leaf_form_pinv(const SpaceInstance& inst, const Mat& u, const Mat& x, const Mat& y)
{
    const auto& ip = inst.basis(Space::ip);
    const RMat Minv = pinv(omega_compact_matrix(inst, u), 1e-10);
    return coords(ip, x).dot(Minv * coords(ip, y));
}

Mat group_leaf_w1(int n, const Word& word)
{
    Mat w1 = Mat::Identity(2 * n, 2 * n);
    w1.topLeftCorner(n, n) = representative(n, word);
    return w1;
}

Mat grass_leaf_w1(const SpaceInstance& inst, const std::vector<std::pair<int, int>>& matching)
{
    const int n = inst.dim();
    Mat X = Mat::Zero(n, n);
    for (const auto& [i, j] : matching) {
        if (i < 0 || i >= inst.p() || j < inst.p() || j >= n)
            throw Error("grass_leaf_w1: pair outside the p x q block");
        X += unit(n, i, j) - unit(n, j, i);
    }
    return expm(std::numbers::pi / 4.0 * X);
}

namespace {

void matchings(int p, int q, int i, std::vector<bool>& used, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out)
{
    if (i == p) {
        out.push_back(cur);
        return;
    }
    matchings(p, q, i + 1, used, cur, out);
    for (int j = 0; j < q; ++j) {
        if (used[static_cast<std::size_t>(j)])
            continue;
        used[static_cast<std::size_t>(j)] = true;
        cur.emplace_back(i, p + j);
        matchings(p, q, i + 1, used, cur, out);
        cur.pop_back();
        used[static_cast<std::size_t>(j)] = false;
    }
}

} // namespace

std::vector<Mat> leaf_representatives(const SpaceInstance& inst)
{
    std::vector<Mat> out;
    if (inst.is_group()) {
        Permutation perm = identity_permutation(inst.block_size());
        do
            out.push_back(group_leaf_w1(inst.block_size(), reduced_word(perm)));
        while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    std::vector<std::vector<std::pair<int, int>>> all;
    std::vector<bool> used(static_cast<std::size_t>(inst.q()), false);
    std::vector<std::pair<int, int>> cur;
    matchings(inst.p(), inst.q(), 0, used, cur, all);
    for (const auto& m : all)
        out.push_back(grass_leaf_w1(inst, m));
    return out;
}

} // namespace liepoisson
