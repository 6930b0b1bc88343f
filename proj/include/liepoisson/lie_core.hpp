#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace liepoisson {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Real subspace of the ambient matrix space, orthonormal for Re tr(X^* Y).
using RealBasis = std::vector<Mat>;

inline constexpr Complex I_{0.0, 1.0};

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Real subspaces of the complexified algebra.
enum class Space {
    g, u, iu, g0, ig0, k, ik, p, ip,
    n_minus, n_plus, h, t, a, t0, a0, ia0, h0, ih0
};

/// Subgroups of the complex group.
enum class GroupSpace { G, U, G0, K, T, T0, N_minus, N_plus, A, A0, B_minus };

enum class Involution { theta, sigma, minus_star };

/// Projections named by the tags used throughout the verification code.
enum class Projector {
    orth_u, orth_iu, orth_p, orth_k, orth_g0, orth_a0,
    iwasawa_u, iwasawa_na, iwasawa_g0, iwasawa_nih0
};

std::string to_string(Space s);
Space space_from_string(const std::string& s);
Projector projector_from_string(const std::string& s);

/// One of the two concrete symmetric spaces; immutable after construction.
class SpaceInstance {
public:
    enum class Kind { grass, group };

    static SpaceInstance grass(int p, int q);
    static SpaceInstance group(int n);
    /// Parses "grass:p,q" or "group:n".
    static SpaceInstance parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_group() const { return kind_ == Kind::group; }
    int p() const { return p_; }
    int q() const { return q_; }
    /// Size of one block: p+q for GRASS, n for GROUP.
    int block_size() const { return block_; }
    int blocks() const { return is_group() ? 2 : 1; }
    /// Size of the stored matrices.
    int dim() const { return block_ * blocks(); }
    /// Canonical instance string.
    std::string name() const;

    bool allowed(int i, int j) const { return i / block_ == j / block_; }
    const RealBasis& basis(Space s) const;

private:
    SpaceInstance(Kind kind, int p, int q, int block);
    Kind kind_;
    int p_ = 0, q_ = 0, block_ = 0;
    std::shared_ptr<const std::map<Space, RealBasis>> bases_;
};

// Form, triangular parts and the Hilbert transform.

Complex form(const Mat& X, const Mat& Y);
double frob(const Mat& X);
Mat bracket(const Mat& X, const Mat& Y);

Mat lower(const Mat& X);
Mat diagonal(const Mat& X);
Mat upper(const Mat& X);

struct TriangularParts {
    Mat minus, zero, plus;
};
TriangularParts triangular_parts(const Mat& X);

Mat hilbert(const Mat& X);
Mat nijenhuis(const Mat& A, const Mat& B);

// Adjoint action.

Mat inverse(const Mat& g);
/// g X g^{-1}.
Mat ad(const Mat& g, const Mat& X);
/// g^{-1} X g.
Mat ad_inv(const Mat& g, const Mat& X);

// Involutions.

Mat theta(const SpaceInstance& inst, const Mat& X);
/// -X^* on the algebra.
Mat minus_star(const Mat& X);
Mat sigma(const SpaceInstance& inst, const Mat& X);
/// (g^*)^{-1} on the group.
Mat inverse_star(const Mat& g);
Mat sigma_group(const SpaceInstance& inst, const Mat& g);
Mat involution(const SpaceInstance& inst, Involution which, const Mat& x, bool group_level);

// Projections.

Mat block_traceless(const SpaceInstance& inst, const Mat& Z);
/// Orthogonal projection onto one of the tagged subspaces.
Mat project(const SpaceInstance& inst, Space s, const Mat& Z);
Mat project(const SpaceInstance& inst, Projector which, const Mat& Z);
Mat pr_u(const Mat& Z);
Mat pr_na(const Mat& Z);
Mat pr_g0(const SpaceInstance& inst, const Mat& Z);
Mat pr_nih0(const SpaceInstance& inst, const Mat& Z);
/// Identity on k, multiplication by i on p.
Mat iota_right(const SpaceInstance& inst, const Mat& X);
/// Identity on k, multiplication by i on ip.
Mat iota_left(const SpaceInstance& inst, const Mat& X);

// Membership.

double residual(const SpaceInstance& inst, Space s, const Mat& X);
double residual(const SpaceInstance& inst, GroupSpace s, const Mat& g);
inline bool in_space(const SpaceInstance& inst, Space s, const Mat& X, double tol = 1e-10)
{
    return residual(inst, s, X) < tol;
}
inline bool in_group(const SpaceInstance& inst, GroupSpace s, const Mat& g, double tol = 1e-10)
{
    return residual(inst, s, g) < tol;
}

// Sampling.

Rng make_rng(std::uint64_t seed);
Mat gaussian(const SpaceInstance& inst, Rng& rng);
Mat sample(const SpaceInstance& inst, Space s, Rng& rng);
Mat sample(const SpaceInstance& inst, GroupSpace s, Rng& rng);
Mat sample(const SpaceInstance& inst, Space s, std::uint64_t seed);
Mat sample(const SpaceInstance& inst, GroupSpace s, std::uint64_t seed);

Mat expm(const Mat& X);
Mat identity(const SpaceInstance& inst);

} // namespace liepoisson
