#include "liepoisson/lie_core.hpp"

#include <cmath>
#include <regex>

#include <unsupported/Eigen/MatrixFunctions>

#include "liepoisson/linalg.hpp"

namespace liepoisson {

namespace {

const std::vector<std::pair<Space, std::string>>& space_names()
{
    static const std::vector<std::pair<Space, std::string>> names = {
        {Space::g, "g"},     {Space::u, "u"},       {Space::iu, "iu"},           {Space::g0, "g0"},
        {Space::ig0, "ig0"}, {Space::k, "k"},       {Space::ik, "ik"},           {Space::p, "p"},
        {Space::ip, "ip"},   {Space::n_minus, "n-"}, {Space::n_plus, "n+"},      {Space::h, "h"},
        {Space::t, "t"},     {Space::a, "a"},       {Space::t0, "t0"},           {Space::a0, "a0"},
        {Space::ia0, "ia0"}, {Space::h0, "h0"},     {Space::ih0, "ih0"}};
    return names;
}

std::map<Space, RealBasis> build_bases(const SpaceInstance& inst)
{
    const int N = inst.dim();
    std::vector<Mat> elementary;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (inst.allowed(i, j)) {
                Mat E = Mat::Zero(N, N);
                E(i, j) = 1.0;
                elementary.push_back(E);
                elementary.push_back(I_ * E);
            }
    std::map<Space, RealBasis> out;
    for (const auto& [s, name] : space_names()) {
        std::vector<Mat> gens;
        gens.reserve(elementary.size());
        for (const auto& E : elementary)
            gens.push_back(project(inst, s, E));
        out[s] = orthonormal_span(gens);
    }
    return out;
}

Mat theta_plus(const SpaceInstance& inst, const Mat& Z) { return 0.5 * (Z + theta(inst, Z)); }
Mat theta_minus(const SpaceInstance& inst, const Mat& Z) { return 0.5 * (Z - theta(inst, Z)); }
Mat sigma_plus(const SpaceInstance& inst, const Mat& Z) { return 0.5 * (Z + sigma(inst, Z)); }
Mat sigma_minus(const SpaceInstance& inst, const Mat& Z) { return 0.5 * (Z - sigma(inst, Z)); }

double det_residual(const SpaceInstance& inst, const Mat& g)
{
    const int b = inst.block_size();
    double r = 0.0;
    for (int k = 0; k < inst.blocks(); ++k)
        r += std::abs(g.block(k * b, k * b, b, b).determinant() - 1.0);
    return r;
}

double pattern_residual(const SpaceInstance& inst, const Mat& g)
{
    double r = 0.0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (!inst.allowed(i, j))
                r += std::norm(g(i, j));
    return std::sqrt(r);
}

} // namespace

std::string to_string(Space s)
{
    for (const auto& [t, name] : space_names())
        if (t == s)
            return name;
    return "?";
}

Space space_from_string(const std::string& s)
{
    for (const auto& [t, name] : space_names())
        if (name == s)
            return t;
    throw Error("unknown subspace tag: " + s);
}

Projector projector_from_string(const std::string& s)
{
    static const std::map<std::string, Projector> names = {
        {"orth_u", Projector::orth_u},         {"orth_iu", Projector::orth_iu},
        {"orth_p", Projector::orth_p},         {"orth_k", Projector::orth_k},
        {"orth_g0", Projector::orth_g0},       {"orth_a0", Projector::orth_a0},
        {"iwasawa_pr_u", Projector::iwasawa_u}, {"iwasawa_pr_na", Projector::iwasawa_na},
        {"iwasawa_pr_g0", Projector::iwasawa_g0}, {"iwasawa_pr_nih0", Projector::iwasawa_nih0}};
    auto it = names.find(s);
    if (it == names.end())
        throw Error("unknown projector tag: " + s);
    return it->second;
}

// SpaceInstance

SpaceInstance::SpaceInstance(Kind kind, int p, int q, int block)
    : kind_(kind), p_(p), q_(q), block_(block)
{
}

SpaceInstance SpaceInstance::grass(int p, int q)
{
    if (p < 1 || q < 1)
        throw Error("grass instance needs p, q >= 1");
    SpaceInstance inst(Kind::grass, p, q, p + q);
    inst.bases_ = std::make_shared<const std::map<Space, RealBasis>>(build_bases(inst));
    return inst;
}

SpaceInstance SpaceInstance::group(int n)
{
    if (n < 2)
        throw Error("group instance needs n >= 2");
    SpaceInstance inst(Kind::group, 0, 0, n);
    inst.bases_ = std::make_shared<const std::map<Space, RealBasis>>(build_bases(inst));
    return inst;
}

SpaceInstance SpaceInstance::parse(const std::string& text)
{
    static const std::regex grass_re(R"(\s*grass\s*:\s*(\d+)\s*,\s*(\d+)\s*)");
    static const std::regex group_re(R"(\s*group\s*:\s*(\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, grass_re))
        return grass(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(text, m, group_re))
        return group(std::stoi(m[1]));
    throw Error("bad instance string: " + text);
}

std::string SpaceInstance::name() const
{
    if (is_group())
        return "group:" + std::to_string(block_);
    return "grass:" + std::to_string(p_) + "," + std::to_string(q_);
}

const RealBasis& SpaceInstance::basis(Space s) const
{
    return bases_->at(s);
}

// Form and triangular parts

Complex form(const Mat& X, const Mat& Y)
{
    return X.cwiseProduct(Y.transpose()).sum();
}

double frob(const Mat& X) { return X.norm(); }

Mat bracket(const Mat& X, const Mat& Y) { return X * Y - Y * X; }

Mat lower(const Mat& X)
{
    Mat L = X.triangularView<Eigen::StrictlyLower>();
    return L;
}

Mat diagonal(const Mat& X)
{
    Mat D = X.diagonal().asDiagonal();
    return D;
}

Mat upper(const Mat& X)
{
    Mat U = X.triangularView<Eigen::StrictlyUpper>();
    return U;
}

TriangularParts triangular_parts(const Mat& X)
{
    return {lower(X), diagonal(X), upper(X)};
}

Mat hilbert(const Mat& X)
{
    return -I_ * lower(X) + I_ * upper(X);
}

Mat nijenhuis(const Mat& A, const Mat& B)
{
    const Mat HA = hilbert(A), HB = hilbert(B);
    return bracket(A, B) + hilbert(bracket(HA, B) + bracket(A, HB)) - bracket(HA, HB);
}

// Adjoint action

Mat inverse(const Mat& g)
{
    Eigen::PartialPivLU<Mat> lu(g);
    return lu.inverse();
}

Mat ad(const Mat& g, const Mat& X)
{
    return g * X * inverse(g);
}

Mat ad_inv(const Mat& g, const Mat& X)
{
    return inverse(g) * X * g;
}

// Involutions

Mat theta(const SpaceInstance& inst, const Mat& X)
{
    if (inst.is_group()) {
        const int n = inst.block_size();
        Mat Y = Mat::Zero(X.rows(), X.cols());
        Y.topLeftCorner(n, n) = X.bottomRightCorner(n, n);
        Y.bottomRightCorner(n, n) = X.topLeftCorner(n, n);
        Y.topRightCorner(n, n) = X.bottomLeftCorner(n, n);
        Y.bottomLeftCorner(n, n) = X.topRightCorner(n, n);
        return Y;
    }
    Mat Y = X;
    const int p = inst.p(), q = inst.q();
    Y.topRightCorner(p, q) *= -1.0;
    Y.bottomLeftCorner(q, p) *= -1.0;
    return Y;
}

Mat minus_star(const Mat& X) { return -X.adjoint(); }

Mat sigma(const SpaceInstance& inst, const Mat& X) { return theta(inst, minus_star(X)); }

Mat inverse_star(const Mat& g) { return inverse(g.adjoint()); }

Mat sigma_group(const SpaceInstance& inst, const Mat& g) { return theta(inst, inverse_star(g)); }

Mat involution(const SpaceInstance& inst, Involution which, const Mat& x, bool group_level)
{
    switch (which) {
    case Involution::theta:
        return theta(inst, x);
    case Involution::sigma:
        return group_level ? sigma_group(inst, x) : sigma(inst, x);
    case Involution::minus_star:
        return group_level ? inverse_star(x) : minus_star(x);
    }
    throw Error("unknown involution");
}

// Projections

Mat block_traceless(const SpaceInstance& inst, const Mat& Z)
{
    Mat Y = Z;
    const int b = inst.block_size();
    for (int k = 0; k < inst.blocks(); ++k) {
        const Complex tr = Y.block(k * b, k * b, b, b).trace() / static_cast<double>(b);
        for (int i = 0; i < b; ++i)
            Y(k * b + i, k * b + i) -= tr;
    }
    for (int i = 0; i < Y.rows(); ++i)
        for (int j = 0; j < Y.cols(); ++j)
            if (!inst.allowed(i, j))
                Y(i, j) = 0.0;
    return Y;
}

Mat project(const SpaceInstance& inst, Space s, const Mat& Z)
{
    const Mat X = block_traceless(inst, Z);
    switch (s) {
    case Space::g: return X;
    case Space::u: return 0.5 * (X - X.adjoint());
    case Space::iu: return 0.5 * (X + X.adjoint());
    case Space::g0: return sigma_plus(inst, X);
    case Space::ig0: return sigma_minus(inst, X);
    case Space::k: return theta_plus(inst, sigma_plus(inst, X));
    case Space::ik: return theta_plus(inst, sigma_minus(inst, X));
    case Space::p: return theta_minus(inst, sigma_plus(inst, X));
    case Space::ip: return theta_minus(inst, sigma_minus(inst, X));
    case Space::n_minus: return lower(X);
    case Space::n_plus: return upper(X);
    case Space::h: return diagonal(X);
    case Space::t: return project(inst, Space::u, diagonal(X));
    case Space::a: return project(inst, Space::iu, diagonal(X));
    case Space::t0: return project(inst, Space::k, diagonal(X));
    case Space::a0: return project(inst, Space::p, diagonal(X));
    case Space::ia0: return project(inst, Space::ip, diagonal(X));
    case Space::h0: return project(inst, Space::g0, diagonal(X));
    case Space::ih0: return project(inst, Space::ig0, diagonal(X));
    }
    throw Error("unknown subspace");
}

Mat pr_u(const Mat& Z)
{
    const Mat P = upper(Z);
    Mat D = Mat::Zero(Z.rows(), Z.cols());
    for (int i = 0; i < Z.rows(); ++i)
        D(i, i) = Complex(0.0, Z(i, i).imag());
    return P - P.adjoint() + D;
}

Mat pr_na(const Mat& Z) { return Z - pr_u(Z); }

Mat pr_g0(const SpaceInstance& inst, const Mat& Z)
{
    const Mat P = upper(Z), D = diagonal(Z);
    return sigma(inst, P) + 0.5 * (D + sigma(inst, D)) + P;
}

Mat pr_nih0(const SpaceInstance& inst, const Mat& Z) { return Z - pr_g0(inst, Z); }

Mat project(const SpaceInstance& inst, Projector which, const Mat& Z)
{
    switch (which) {
    case Projector::orth_u: return project(inst, Space::u, Z);
    case Projector::orth_iu: return project(inst, Space::iu, Z);
    case Projector::orth_p: return project(inst, Space::p, Z);
    case Projector::orth_k: return project(inst, Space::k, Z);
    case Projector::orth_g0: return project(inst, Space::g0, Z);
    case Projector::orth_a0: return project(inst, Space::a0, Z);
    case Projector::iwasawa_u: return pr_u(Z);
    case Projector::iwasawa_na: return pr_na(Z);
    case Projector::iwasawa_g0: return pr_g0(inst, Z);
    case Projector::iwasawa_nih0: return pr_nih0(inst, Z);
    }
    throw Error("unknown projector");
}

Mat iota_right(const SpaceInstance& inst, const Mat& X)
{
    return project(inst, Space::k, X) + I_ * project(inst, Space::p, X);
}

Mat iota_left(const SpaceInstance& inst, const Mat& X)
{
    return project(inst, Space::k, X) + I_ * project(inst, Space::ip, X);
}

// Membership

double residual(const SpaceInstance& inst, Space s, const Mat& X)
{
    if (X.rows() != inst.dim() || X.cols() != inst.dim())
        return std::numeric_limits<double>::infinity();
    return frob(X - project(inst, s, X)) + pattern_residual(inst, X);
}

double residual(const SpaceInstance& inst, GroupSpace s, const Mat& g)
{
    if (g.rows() != inst.dim() || g.cols() != inst.dim())
        return std::numeric_limits<double>::infinity();
    const int N = inst.dim();
    const Mat Id = Mat::Identity(N, N);
    const double base = det_residual(inst, g) + pattern_residual(inst, g);
    auto unitary = [&] { return frob(g.adjoint() * g - Id); };
    auto diag_off = [&] { return frob(g - diagonal(g)); };
    switch (s) {
    case GroupSpace::G:
        return base;
    case GroupSpace::U:
        return base + unitary();
    case GroupSpace::G0:
        return base + frob(sigma_group(inst, g) - g);
    case GroupSpace::K:
        return base + unitary() + frob(theta(inst, g) - g);
    case GroupSpace::T:
        return base + unitary() + diag_off();
    case GroupSpace::T0:
        return base + unitary() + diag_off() + frob(theta(inst, g) - g);
    case GroupSpace::N_minus:
        return base + frob(g - lower(g) - Id);
    case GroupSpace::N_plus:
        return base + frob(g - upper(g) - Id);
    case GroupSpace::A:
    case GroupSpace::A0: {
        double r = base + diag_off();
        for (int i = 0; i < N; ++i)
            r += std::abs(g(i, i).imag()) + (g(i, i).real() > 0 ? 0.0 : 1.0);
        if (s == GroupSpace::A0 && r < 1e-6) {
            Mat L = Mat::Zero(N, N);
            for (int i = 0; i < N; ++i)
                L(i, i) = std::log(g(i, i).real());
            r += residual(inst, Space::a0, L);
        }
        return r;
    }
    case GroupSpace::B_minus:
        return base + frob(upper(g));
    }
    throw Error("unknown group tag");
}

// Sampling

Rng make_rng(std::uint64_t seed)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
    return Rng(seq);
}

Mat gaussian(const SpaceInstance& inst, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    const int N = inst.dim();
    Mat Z = Mat::Zero(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (inst.allowed(i, j)) {
                const double re = normal(rng);
                const double im = normal(rng);
                Z(i, j) = Complex(re, im);
            }
    return Z;
}

Mat sample(const SpaceInstance& inst, Space s, Rng& rng)
{
    return project(inst, s, gaussian(inst, rng));
}

Mat expm(const Mat& X)
{
    Mat E = X.exp();
    return E;
}

Mat identity(const SpaceInstance& inst)
{
    return Mat::Identity(inst.dim(), inst.dim());
}

Mat sample(const SpaceInstance& inst, GroupSpace s, Rng& rng)
{
    switch (s) {
    case GroupSpace::G:
        return expm(0.4 * sample(inst, Space::g, rng));
    case GroupSpace::U:
        return expm(sample(inst, Space::u, rng));
    case GroupSpace::G0: {
        const Mat k = expm(sample(inst, Space::k, rng));
        return k * expm(0.5 * sample(inst, Space::p, rng));
    }
    case GroupSpace::K:
        return expm(sample(inst, Space::k, rng));
    case GroupSpace::T:
        return expm(sample(inst, Space::t, rng));
    case GroupSpace::T0:
        return expm(sample(inst, Space::t0, rng));
    case GroupSpace::N_minus:
        return identity(inst) + 0.5 * sample(inst, Space::n_minus, rng);
    case GroupSpace::N_plus:
        return identity(inst) + 0.5 * sample(inst, Space::n_plus, rng);
    case GroupSpace::A:
        return expm(0.5 * sample(inst, Space::a, rng));
    case GroupSpace::A0:
        return expm(0.5 * sample(inst, Space::a0, rng));
    case GroupSpace::B_minus: {
        const Mat n = identity(inst) + 0.5 * sample(inst, Space::n_minus, rng);
        return n * expm(0.5 * sample(inst, Space::h, rng));
    }
    }
    throw Error("unknown group tag");
}

Mat sample(const SpaceInstance& inst, Space s, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return sample(inst, s, rng);
}

Mat sample(const SpaceInstance& inst, GroupSpace s, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return sample(inst, s, rng);
}

} // namespace liepoisson
