#include "liepoisson/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "liepoisson/compact.hpp"
#include "liepoisson/group_case.hpp"
#include "liepoisson/noncompact.hpp"

namespace liepoisson {

namespace {

class Recorder {
public:
    explicit Recorder(const SuiteOptions& options) : options_(options) {}

    void add(const std::string& name, double residual, double tol)
    {
        auto it = std::find_if(records_.begin(), records_.end(), [&](const CheckRecord& r) { return r.name == name; });
        if (it == records_.end()) {
            CheckRecord r;
            r.name = name;
            const auto o = options_.tol_overrides.find(name);
            r.tol = (o != options_.tol_overrides.end() ? o->second : tol) * options_.tol_scale;
            records_.push_back(r);
            it = records_.end() - 1;
        }
        if (!(residual <= it->max_residual))
            it->max_residual = residual;
        it->pass = it->max_residual <= it->tol;
    }

    /// Runs f, recording a failure under name if it throws.
    template <class F>
    void guarded(const std::string& name, F&& f)
    {
        try {
            f();
        } catch (const std::exception&) {
            add(name + ".exceptions", 1.0, 0.0);
        }
    }

    std::vector<CheckRecord> take() { return std::move(records_); }

private:
    const SuiteOptions& options_;
    std::vector<CheckRecord> records_;
};

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Context {
    const SpaceInstance& inst;
    int samples;
    std::uint64_t seed;
    const SuiteOptions& options;
    Recorder& rec;
    std::vector<std::pair<std::string, double>>& measurements;

    Rng rng(std::uint64_t index, std::uint64_t stream = 0) const
    {
        return make_rng(splitmix(splitmix(seed) ^ index) ^ splitmix(stream));
    }
};

double normal(Rng& rng)
{
    return std::normal_distribution<double>()(rng);
}

Complex complex_normal(Rng& rng)
{
    return {normal(rng), normal(rng)};
}

/// Identity, then representatives of words of length 1 and 2 (GROUP) or every partial matching (GRASS).
std::vector<Mat> tested_leaves(const SpaceInstance& inst)
{
    if (!inst.is_group())
        return leaf_representatives(inst);
    std::vector<Mat> out;
    Permutation perm = identity_permutation(inst.block_size());
    std::vector<std::pair<std::size_t, Mat>> by_length;
    do {
        const Word w = reduced_word(perm);
        if (w.size() <= 2)
            by_length.emplace_back(w.size(), group_leaf_w1(inst.block_size(), w));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::stable_sort(by_length.begin(), by_length.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [len, w1] : by_length)
        out.push_back(w1);
    return out;
}

/// Identity, a generic unitary, and the longest tested nontrivial representative.
std::vector<Mat> closedness_leaves(const Context& c)
{
    const auto reps = tested_leaves(c.inst);
    Rng rng = c.rng(0, 99);
    std::vector<Mat> out = {identity(c.inst), sample(c.inst, GroupSpace::U, rng)};
    if (reps.size() > 1)
        out.push_back(reps.back());
    return out;
}

std::vector<Word> reduced_words_up_to(int n, std::size_t max_length)
{
    std::vector<Word> out, frontier = {Word{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int j = 1; j < n; ++j) {
                Word v = w;
                v.push_back(j);
                if (is_reduced(n, v)) {
                    next.push_back(v);
                    out.push_back(v);
                }
            }
        frontier = std::move(next);
    }
    return out;
}

Mat random_torus_element(const SpaceInstance& inst, const LeafParameter& leaf, Rng& rng)
{
    Mat X = Mat::Zero(inst.dim(), inst.dim());
    for (const auto& b : t_w_basis(inst, leaf))
        X += normal(rng) * b;
    return expm(X);
}

void core_suite(Context& c)
{
    const auto& inst = c.inst;
    const std::vector<Projector> orth = {Projector::orth_u, Projector::orth_iu, Projector::orth_p,
                                         Projector::orth_k, Projector::orth_g0, Projector::orth_a0};
    const std::vector<Projector> iwa = {Projector::iwasawa_u, Projector::iwasawa_na, Projector::iwasawa_g0,
                                        Projector::iwasawa_nih0};
    for (int s = 0; s < c.samples; ++s) {
        Rng rng = c.rng(static_cast<std::uint64_t>(s));
        const Mat A = sample(inst, Space::g, rng), B = sample(inst, Space::g, rng), Z = sample(inst, Space::g, rng);
        c.rec.add("core.nijenhuis", frob(nijenhuis(A, B)), 1e-10);
        c.rec.add("core.hilbert_skew", std::abs(form(hilbert(A), B) + form(A, hilbert(B))), 1e-12);
        c.rec.add("core.ad_invariance", std::abs(form(bracket(Z, A), B) + form(A, bracket(Z, B))), 1e-12);
        const Mat U = sample(inst, Space::u, rng), G = sample(inst, Space::g0, rng);
        c.rec.add("core.diagram_u", frob(pr_u(I_ * U) - hilbert(U)), 1e-13);
        c.rec.add("core.diagram_g0", frob(pr_g0(inst, I_ * G) - hilbert(G)), 1e-13);
        for (Projector P : orth) {
            const Mat PA = project(inst, P, A);
            c.rec.add("core.idempotent", frob(project(inst, P, PA) - PA), 1e-14);
            c.rec.add("core.orthogonal", std::abs(form(PA, B - project(inst, P, B)).real()), 1e-12);
        }
        for (Projector P : iwa) {
            const Mat PA = project(inst, P, A);
            c.rec.add("core.idempotent", frob(project(inst, P, PA) - PA), 1e-14);
        }
    }
}

Mat random_matrix(int n, Rng& rng)
{
    Mat m(n, n);
    for (auto& v : m.reshaped())
        v = complex_normal(rng);
    return m;
}

Mat random_permutation_matrix(int n, Rng& rng)
{
    Permutation perm = identity_permutation(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    Mat w = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        w(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    return w;
}

void factorization_suite(Context& c)
{
    const auto& inst = c.inst;
    const int n = inst.block_size();
    const auto leaves = tested_leaves(inst);
    for (int s = 0; s < c.samples; ++s) {
        Rng rng = c.rng(static_cast<std::uint64_t>(s), 1);
        const Mat g = sample(inst, GroupSpace::G, rng);
        const auto f = iwasawa(inst, g);
        c.rec.add("factorization.iwasawa_roundtrip", frob(f.l * f.a * f.u - g), 1e-10);
        const Mat k = sample(inst, GroupSpace::K, rng);
        c.rec.add("factorization.iwasawa_equivariance", frob(iwasawa(inst, g * k).u - f.u * k), 1e-12);

        const LeafParameter leaf = leaf_parameter(inst, leaves[static_cast<std::size_t>(s) % leaves.size()]);
        const Mat g0 = sample(inst, GroupSpace::G0, rng);
        const Mat t = random_torus_element(inst, leaf, rng);
        c.rec.add("factorization.dressing_identity",
                  frob(iwasawa(inst, leaf.w1 * torus_act(inst, leaf, t, g0)).u - t * iwasawa(inst, leaf.w1 * g0).u),
                  1e-12);

        Mat m = random_matrix(n, rng);
        if (s % 2 == 1) {
            const Mat l = lower(random_matrix(n, rng)) + Mat::Identity(n, n);
            const Mat b = upper(random_matrix(n, rng)) + 2.0 * Mat::Identity(n, n);
            m = l * random_permutation_matrix(n, rng) * b;
        }
        const BruhatCell cell = bruhat_cell(m);
        if (!cell.marginal) {
            bool factored = true;
            try {
                birkhoff(m);
            } catch (const OffTopStratum&) {
                factored = false;
            }
            c.rec.add("factorization.bruhat_birkhoff_agree", cell.is_identity() == factored ? 0.0 : 1.0, 0.0);
        }

        const Mat u = sample(inst, GroupSpace::U, rng);
        const BruhatCell before = layer_of(inst, u), after = layer_of(inst, u * k);
        if (!before.marginal && !after.marginal)
            c.rec.add("factorization.layer_k_invariance", before.perm == after.perm ? 0.0 : 1.0, 0.0);
    }
}

void hamiltonian_suite(Context& c)
{
    const auto& inst = c.inst;
    const double h = c.options.step;
    const auto leaves = closedness_leaves(c);
    for (std::size_t li = 0; li < leaves.size(); ++li) {
        const Mat& w1 = leaves[li];
        const LeafParameter leaf = leaf_parameter(inst, w1);
        const RealBasis tw = leaf.w ? t_w_basis(inst, leaf) : RealBasis{};
        for (int s = 0; s < c.samples; ++s) {
            Rng rng = c.rng(static_cast<std::uint64_t>(s), 10 + li);
            const Mat g0 = sample(inst, GroupSpace::G0, rng);
            const Mat X = sample(inst, Space::g0, rng), Y = sample(inst, Space::g0, rng),
                      Z = sample(inst, Space::g0, rng);
            c.rec.guarded("hamiltonian.closedness", [&] {
                const double d1 = d_omega_fd(inst, w1, g0, X, Y, Z, h);
                c.rec.add("hamiltonian.closedness", std::abs(d1), 1e-4);
                if (std::abs(d1) > 1e-9) {
                    const double ratio = std::abs(d1 / d_omega_fd(inst, w1, g0, X, Y, Z, h / 2.0));
                    c.rec.add("hamiltonian.richardson_outside_2.5_6", std::max({0.0, 2.5 - ratio, ratio - 6.0}), 0.0);
                }
            });

            c.rec.add("hamiltonian.kernel",
                      subspace_distance(omega_kernel(inst, w1, g0), predicted_kernel(inst, w1, g0)), 1e-8);

            const Mat x = sample(inst, Space::p, rng), y = sample(inst, Space::p, rng);
            const TangentVector v1{g0, x}, v2{g0, y};
            c.rec.add("hamiltonian.factored_path",
                      std::abs(omega(inst, w1, v1, v2) - omega_factored(inst, w1, v1, v2)), 1e-10);

            const Mat k = sample(inst, GroupSpace::K, rng);
            const Mat g0k = ad(k, g0);
            c.rec.add("hamiltonian.base_point_change",
                      std::abs(omega(inst, w1 * k, v1, v2) -
                               omega(inst, w1, {g0k, ad(k, x)}, {g0k, ad(k, y)})),
                      1e-10);

            if (!tw.empty()) {
                Mat T = Mat::Zero(inst.dim(), inst.dim());
                for (const auto& b : tw)
                    T += normal(rng) * b;
                const double lhs = omega(inst, w1, kappa_field(inst, ad_inv(w1, T), g0), v2);
                const double rhs = central_difference(
                    [&](double e) { return momentum_component(inst, w1, T, g0 * expm(e * y)); }, 1e-5);
                c.rec.add("hamiltonian.momentum", std::abs(lhs - rhs), 1e-6);
            }
        }
    }
}

void noncompact_suite(Context& c)
{
    const auto& inst = c.inst;
    const auto dim_p = static_cast<int>(inst.basis(Space::p).size());
    const auto dim_a0 = static_cast<int>(inst.basis(Space::a0).size());
    for (int s = 0; s < c.samples; ++s) {
        Rng rng = c.rng(static_cast<std::uint64_t>(s), 2);
        const Mat g0 = sample(inst, GroupSpace::G0, rng);
        const Mat L = big_l(inst, g0);

        const TangentVector v1{g0, omega_noncompact(inst, g0, sample(inst, Space::p, rng))};
        const TangentVector v2{g0, omega_noncompact(inst, g0, sample(inst, Space::p, rng))};
        c.rec.add("noncompact.leaf_tangent", std::max(leaf_tangent_test(inst, v1).residual,
                                                      leaf_tangent_test(inst, v2).residual), 1e-10);
        c.rec.add("noncompact.leaf_form",
                  std::abs(noncompact_leaf_form(inst, v1, v2) - omega(inst, identity(inst), v1, v2)), 1e-8);
        c.rec.add("noncompact.regularity",
                  std::abs(numerical_rank(omega_noncompact_matrix(inst, g0)) - (dim_p - dim_a0)), 0.0);

        const auto T = t_operator(inst, g0);
        const int rank = numerical_rank(T.as_matrix);
        c.rec.add("noncompact.t_kernel_dim", std::abs(static_cast<int>(T.as_matrix.cols()) - rank - dim_a0), 0.0);
        c.rec.add("noncompact.t_cokernel_dim", std::abs(static_cast<int>(T.as_matrix.rows()) - rank - dim_a0), 0.0);
        const Mat X = sample(inst, Space::u, rng), y = sample(inst, Space::g0, rng);
        c.rec.add("noncompact.t_paths", frob(t_apply(inst, L, X) - t_apply_composed(inst, L, X)), 1e-10);
        c.rec.add("noncompact.t_adjoint",
                  std::abs(form(t_apply(inst, L, X), y).real() - form(X, t_adjoint(inst, L, y)).real()), 1e-10);
        c.rec.add("noncompact.t_cokernel",
                  frob(t_adjoint(inst, L, t_cokernel_element(inst, L, sample(inst, Space::a0, rng)))), 1e-10);
        const Mat target = t_apply(inst, L, sample(inst, Space::u, rng));
        c.rec.guarded("noncompact.t_staged", [&] {
            c.rec.add("noncompact.t_staged", frob(t_apply(inst, L, t_solve_staged(inst, L, target).x) - target), 1e-9);
        });

        const Mat k = sample(inst, GroupSpace::K, rng);
        c.rec.add("noncompact.casimir_k_invariance", frob(casimir(inst, g0 * k) - casimir(inst, g0)), 1e-10);
        const double hh = 1e-5;
        const Mat d = (log_positive_diagonal(casimir(inst, g0 * expm(hh * v1.vec))) -
                       log_positive_diagonal(casimir(inst, g0 * expm(-hh * v1.vec)))) / (2.0 * hh);
        c.rec.add("noncompact.casimir_leaf_derivative", frob(d), 1e-6);

        const Mat a0 = expm(sample(inst, Space::a0, rng));
        c.rec.add("noncompact.section_well_defined",
                  frob(horizontal_section(inst, a0 * g0) - horizontal_section(inst, g0)), 1e-12);
        const Mat dir = sample(inst, Space::p, rng);
        const Mat tangent = curve_tangent(
            inst, [&](double e) { return horizontal_section(inst, g0 * expm(e * dir)); }, 1e-5);
        c.rec.add("noncompact.horizontality",
                  leaf_tangent_test(inst, {horizontal_section(inst, g0), tangent}).residual, 1e-8);
    }
}

void compact_suite(Context& c, bool structure, bool iso)
{
    const auto& inst = c.inst;
    const auto leaves = tested_leaves(inst);
    for (std::size_t li = 0; li < leaves.size(); ++li) {
        const Mat& w1 = leaves[li];
        const LeafParameter leaf = leaf_parameter(inst, w1);
        const HwOperator op = h_w_operator(inst, leaf.w_hat);
        const RealBasis ambiguity = h_w_ambiguity(op);
        for (int s = 0; s < c.samples; ++s) {
            Rng rng = c.rng(static_cast<std::uint64_t>(s), 20 + li);
            const Mat g0 = sample(inst, GroupSpace::G0, rng);
            const Mat u = u_tilde(inst, w1, g0);
            const Mat y1 = sample(inst, Space::p, rng), y2 = sample(inst, Space::p, rng);
            const TangentVector p1 = u_tilde_pushforward(inst, w1, {g0, y1});
            const TangentVector p2 = u_tilde_pushforward(inst, w1, {g0, y2});
            if (iso) {
                c.rec.guarded("iso.thm_4_1", [&] {
                    const double lf = leaf_form(op, leaf, g0, p1.vec, p2.vec);
                    c.rec.add("iso.thm_4_1", std::abs(lf - omega(inst, w1, {g0, y1}, {g0, y2})), 1e-7);
                    c.rec.add("iso.pinv_path", std::abs(leaf_form_pinv(inst, u, p1.vec, p2.vec) - lf), 1e-7);
                });
            }
            if (!structure)
                continue;
            c.rec.add("compact.kernel",
                      subspace_distance(pi_compact_kernel(inst, u), predicted_compact_kernel(inst, w1, g0)), 1e-8);
            const double hh = 1e-5;
            const Mat fd = project(inst, Space::ip,
                                   inverse(u) * (u_tilde(inst, w1, g0 * expm(hh * y1)) -
                                                 u_tilde(inst, w1, g0 * expm(-hh * y1))) / (2.0 * hh));
            c.rec.add("compact.pushforward_fd", frob(fd - p1.vec), 1e-6);
            const Mat phi = sample(inst, Space::ip, rng);
            c.rec.add("compact.pushforward_adjoint",
                      std::abs(form(p1.vec, phi).real() -
                               form(y1, u_tilde_pushforward_adjoint(inst, w1, g0, phi).vec).real()),
                      1e-10);
            const Mat x = sample(inst, Space::p, rng);
            c.rec.add("compact.z_paths", frob(z_operator(inst, w1, g0, x) - z_operator_direct(inst, w1, g0, x)), 1e-9);
            const auto f = iwasawa(w1 * g0);
            const Mat la = f.l * f.a;
            const Mat lhs = ad(w1 * g0, project(inst, Space::p, ad_inv(u, hilbert(ad(u, x)))));
            const Mat rhs = -I_ * project_ig0w(inst, leaf.w_hat, ad(la, pr_na(ad(u, x))));
            c.rec.add("compact.lemma_4_6", frob(lhs - rhs), 1e-9);
            const Mat chi = block_traceless(inst, lower(gaussian(inst, rng)) + diagonal(gaussian(inst, rng)));
            c.rec.guarded("compact.h_w_cayley", [&] {
                const Mat D = h_w_apply(op, project_ig0w(inst, leaf.w_hat, chi)) -
                              project_ig0w(inst, leaf.w_hat, -I_ * lower(chi));
                c.rec.add("compact.h_w_cayley", frob(D - project_onto(ambiguity, D)), 1e-9);
            });
            if (leaf.w) {
                const Mat t = random_torus_element(inst, leaf, rng);
                c.rec.add("compact.t_w_equivariance", frob(u_tilde(inst, w1, torus_act(inst, leaf, t, g0)) - t * u),
                          1e-10);
                const BruhatCell cell = layer_of(inst, u);
                if (!cell.marginal)
                    c.rec.add("compact.leaf_label", cell.perm == leaf.w->perm ? 0.0 : 1.0, 0.0);
            }
        }
    }
}

Mat su_tangent(const Mat& d, const Mat& k)
{
    const Mat x = d * k.adjoint();
    return 0.5 * (x - x.adjoint());
}

void su2_closed_form(Context& c)
{
    const double r = 1.0 / std::sqrt(2.0);
    Mat expected(2, 2);
    expected << r, -r, r, r;
    c.rec.add("group.su2_k_of_one", frob(su2_k_of_zeta(1.0) - expected), 1e-12);
    const auto datum = root_datum(2);
    for (int s = 0; s < c.samples; ++s) {
        Rng rng = c.rng(static_cast<std::uint64_t>(s), 3);
        const Complex z = complex_normal(rng);
        const Mat k = su2_k_of_zeta(z);
        c.rec.add("group.su2_unitary", frob(k.adjoint() * k - Mat::Identity(2, 2)) + std::abs(k.determinant() - 1.0),
                  1e-14);
        const auto b = birkhoff(k);
        c.rec.add("group.su2_reconstruction", frob(b.l * b.m * b.a * b.u_plus - k), 1e-12);
        Mat l = Mat::Identity(2, 2);
        l(1, 0) = z;
        c.rec.add("group.su2_birkhoff_l", frob(b.l - l), 1e-12);
        c.rec.add("group.su2_a", std::abs(b.a(0, 0) - 1.0 / std::sqrt(1.0 + std::norm(z))), 1e-12);
        c.rec.add("group.haar_su2", std::abs(haar_density(datum, {{1}, {z}}) - 1.0), 1e-12);
    }
}

void group_suite(Context& c)
{
    const int n = c.inst.block_size();
    const auto gi = SpaceInstance::group(n);
    const auto su = SpaceInstance::grass(1, n - 1);
    const auto datum = root_datum(n);

    for (int s = 0; s < c.samples; ++s) {
        Rng rng = c.rng(static_cast<std::uint64_t>(s), 4);
        const Mat k = sample(su, GroupSpace::U, rng);
        const Mat a = sample(su, Space::u, rng), b = sample(su, Space::u, rng);
        const Mat u = group_point(k);
        c.rec.add("group.pi_k_identification",
                  std::abs(pi_compact(gi, {u, group_cotangent(k, a)}, {u, group_cotangent(k, b)}) - big_pi_k(k, a, b)),
                  1e-9);
        const auto t = w0_translate_check(k, a, b);
        c.rec.add("group.w0_translation", std::abs(t.lhs - t.rhs), 1e-10);
        const Mat torus = expm(diagonal(sample(su, Space::u, rng)));
        c.rec.add("group.pi_k_vanishes_on_torus", std::abs(pi_k(torus, a, b)), 1e-12);
    }
    su2_closed_form(c);

    {
        const auto d2 = root_datum(2);
        const LeafCoordinates base{{1}, {Complex(0.0, 0.0)}};
        const double ratio = cell_pulled_back_coefficients(d2, base)(0, 1) / lu_form_coefficients(d2, base)[0];
        c.measurements.emplace_back("calibration_ratio_su2", ratio);
        c.rec.add("group.calibration", std::abs(ratio - 1.0), 1e-6);
    }

    const int form_samples = std::max(1, c.samples / 10);
    double factor = std::nan("");
    std::size_t wi = 0;
    for (const Word& word : reduced_words_up_to(n, 3)) {
        ++wi;
        const Mat w_hat = representative(n, word);
        const auto len = static_cast<int>(word.size());
        for (int s = 0; s < c.samples; ++s) {
            Rng rng = c.rng(static_cast<std::uint64_t>(s), 100 + wi);
            LeafCoordinates lc{word, {}};
            for (int j = 0; j < len; ++j)
                lc.zeta.push_back(complex_normal(rng));
            const Mat P = lu_product(datum, lc);
            const auto bf = birkhoff(P);
            const Mat& l = bf.l;
            const Mat conj = ad(w_hat, l);
            c.rec.add("group.lu_l_membership",
                      frob(upper(l)) + frob(diagonal(l) - Mat::Identity(n, n)) + frob(lower(conj)) +
                          frob(diagonal(conj) - Mat::Identity(n, n)),
                      1e-10);
            c.rec.add("group.lu_a_product", frob(bf.a - lu_a_product(datum, lc)), 1e-10);

            Mat tlog = diagonal(sample(su, Space::u, rng));
            const Mat t = expm(tlog);
            const LeafCoordinates rotated = torus_rotate(datum, lc, t);
            double torus = frob(lu_coordinates_to_l(datum, rotated) - ad(t, l));
            const auto c0 = lu_form_coefficients(datum, lc), c1 = lu_form_coefficients(datum, rotated);
            for (int j = 0; j < len; ++j)
                torus += std::abs(std::abs(rotated.zeta[j]) - std::abs(lc.zeta[j])) + std::abs(c0[j] - c1[j]);
            c.rec.add("group.lu_torus_invariance", torus, 1e-10);

            const Mat g0 = s1_g0(l);
            const auto mc = momentum_in_coordinates(datum, lc);
            for (int j = 0; j + 1 < n; ++j) {
                if (std::abs(mc[j]) < 1e-6)
                    continue;
                const Mat h = datum.coroots[j].cast<Complex>();
                Mat X = Mat::Zero(2 * n, 2 * n);
                X.topLeftCorner(n, n) = I_ * h;
                X.bottomRightCorner(n, n) = I_ * h;
                const double ratio = momentum_component(gi, identity(gi), X, g0) / mc[j];
                if (std::isnan(factor)) {
                    factor = ratio;
                    c.measurements.emplace_back("momentum_factor", factor);
                }
                c.rec.add("group.momentum_factor_constancy", std::abs(ratio - factor), 1e-8);
            }

            if (s >= form_samples)
                continue;
            const RMat W = cell_pulled_back_coefficients(datum, lc);
            for (Eigen::Index r = 0; r < W.rows(); ++r)
                for (Eigen::Index q = 0; q < W.cols(); ++q) {
                    const bool pair = r / 2 == q / 2 && r != q;
                    if (pair) {
                        const double sign = r % 2 == 0 ? 1.0 : -1.0;
                        c.rec.add("group.lu_form_diagonal",
                                  std::abs(W(r, q) - sign * c0[static_cast<std::size_t>(r / 2)]), 2e-5);
                    } else {
                        c.rec.add("group.lu_form_cross", std::abs(W(r, q)), 2e-5);
                    }
                }

            const Mat k = s1_point(l);
            const Mat kw = cell_point(datum, lc);
            c.rec.add("group.cell_translation_in_s1",
                      frob(group_to_k(u_tilde(gi, identity(gi), g0)) - w_hat.adjoint() * kw), 1e-10);
            c.rec.add("group.cell_rank", std::abs(numerical_rank(pi_k_matrix(kw), 1e-8) - 2 * len), 0.0);
            std::vector<Mat> xs;
            const double hh = 1e-6;
            for (int r = 0; r < 2 * len; ++r) {
                const Complex dz = r % 2 == 0 ? Complex(hh, 0.0) : Complex(0.0, hh);
                LeafCoordinates plus = lc, minus = lc;
                plus.zeta[static_cast<std::size_t>(r / 2)] += dz;
                minus.zeta[static_cast<std::size_t>(r / 2)] -= dz;
                xs.push_back(su_tangent(
                    (s1_point(lu_coordinates_to_l(datum, plus)) - s1_point(lu_coordinates_to_l(datum, minus))) /
                        (2.0 * hh),
                    k));
            }
            std::vector<Mat> moved;
            for (const auto& x : xs)
                moved.push_back(ad(w_hat, x));
            c.rec.add("group.cell_translation_form",
                      (pi_k_leaf_gram(kw, moved) + big_pi_k_leaf_gram(k, xs)).cwiseAbs().maxCoeff(), 1e-7);
        }
    }
}

using Clock = std::chrono::steady_clock;

} // namespace

std::string to_string(Suite s)
{
    switch (s) {
    case Suite::core: return "core";
    case Suite::factorization: return "factorization";
    case Suite::hamiltonian: return "hamiltonian";
    case Suite::noncompact: return "noncompact";
    case Suite::compact: return "compact";
    case Suite::iso: return "iso";
    case Suite::group: return "group";
    case Suite::all: return "all";
    }
    return "";
}

Suite suite_from_string(const std::string& s)
{
    for (Suite v : {Suite::core, Suite::factorization, Suite::hamiltonian, Suite::noncompact, Suite::compact,
                    Suite::iso, Suite::group, Suite::all})
        if (to_string(v) == s)
            return v;
    throw Error("unknown suite: " + s);
}

const CheckRecord* SuiteReport::find(const std::string& name) const
{
    for (const auto& r : checks)
        if (r.name == name)
            return &r;
    return nullptr;
}

std::string SuiteReport::to_json(int indent) const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["instance"] = instance;
    nlohmann::ordered_json params;
    params["n"] = n;
    params["samples"] = samples;
    params["seed"] = seed;
    params["step"] = options.step;
    params["tol_scale"] = options.tol_scale;
    nlohmann::ordered_json tols = nlohmann::ordered_json::object();
    for (const auto& r : checks)
        tols[r.name] = r.tol;
    params["tolerances"] = tols;
    j["params"] = params;
    nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
    for (const auto& r : checks)
        checks_json.push_back({{"name", r.name}, {"max_residual", r.max_residual}, {"tol", r.tol}, {"pass", r.pass}});
    j["checks"] = checks_json;
    nlohmann::ordered_json meas = nlohmann::ordered_json::object();
    for (const auto& [name, value] : measurements)
        meas[name] = value;
    j["measurements"] = meas;
    if (vacuous)
        j["warning"] = "zero samples: vacuous pass";
    j["pass"] = pass;
    j["seconds"] = seconds;
    return j.dump(indent);
}

double tol_scale_from_env()
{
    const char* v = std::getenv("LIEPOISSON_TOL_SCALE");
    if (v == nullptr || *v == '\0')
        return 1.0;
    char* end = nullptr;
    const double s = std::strtod(v, &end);
    if (end == v || *end != '\0' || !(s > 0.0) || !std::isfinite(s))
        throw Error(std::string("LIEPOISSON_TOL_SCALE must be a positive number, got '") + v + "'");
    return s;
}

SuiteReport run_suite(Suite suite, const SpaceInstance& inst, int samples, std::uint64_t seed,
                      const SuiteOptions& options)
{
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = to_string(suite);
    report.instance = inst.name();
    report.n = inst.block_size();
    report.samples = samples;
    report.seed = seed;
    report.options = options;
    if (samples <= 0) {
        report.vacuous = true;
        return report;
    }

    Recorder rec(options);
    Context c{inst, samples, seed, options, rec, report.measurements};
    auto wants = [&](Suite s) { return suite == s || suite == Suite::all; };
    auto guard = [&](const std::string& name, auto&& f) {
        try {
            f();
        } catch (const std::exception&) {
            rec.add(name + ".aborted", 1.0, 0.0);
        }
    };
    if (wants(Suite::core))
        guard("core", [&] { core_suite(c); });
    if (wants(Suite::factorization))
        guard("factorization", [&] { factorization_suite(c); });
    if (wants(Suite::hamiltonian))
        guard("hamiltonian", [&] { hamiltonian_suite(c); });
    if (wants(Suite::noncompact))
        guard("noncompact", [&] { noncompact_suite(c); });
    if (wants(Suite::compact) || wants(Suite::iso))
        guard("compact", [&] { compact_suite(c, wants(Suite::compact), wants(Suite::iso)); });
    if (wants(Suite::group))
        guard("group", [&] { group_suite(c); });

    report.checks = rec.take();
    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckRecord& r) { return r.pass; });
    if (options.timing)
        report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

} // namespace liepoisson
