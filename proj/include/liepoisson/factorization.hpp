#pragma once

#include "liepoisson/lie_core.hpp"
#include "liepoisson/weyl.hpp"

namespace liepoisson {

/// g = l a u with l in N-, a in A, u in U; a = a0 a1 with log a0 in a0.
struct IwasawaFactors {
    Mat l, a, u, a0, a1;
};

IwasawaFactors iwasawa(const SpaceInstance& inst, const Mat& g);
IwasawaFactors iwasawa(const Mat& g);

/// Stratum label of g in N- w H N+.
struct BruhatCell {
    Permutation perm;
    bool marginal = false;
    bool is_identity() const;
};

BruhatCell bruhat_cell(const Mat& g);

/// k = l m a u_plus for k in the top stratum.
struct BirkhoffFactors {
    Permutation w;
    Mat l, m, a, u_plus;
};

class OffTopStratum : public Error {
public:
    explicit OffTopStratum(Permutation cell);
    const Permutation& cell() const { return cell_; }

private:
    Permutation cell_;
};

BirkhoffFactors birkhoff(const Mat& k);

/// u Theta(u)^{-1}.
Mat cartan_embed(const SpaceInstance& inst, const Mat& u);
BruhatCell layer_of(const SpaceInstance& inst, const Mat& u);

/// Elementwise log of a positive diagonal matrix.
Mat log_positive_diagonal(const Mat& a);
Mat exp_diagonal(const Mat& d);

} // namespace liepoisson
