#pragma once

#include "liepoisson/lie_core.hpp"

namespace liepoisson {

/// Permutation in one-line notation, 0-based: row i of the monomial matrix is nonzero in column perm[i].
using Permutation = std::vector<int>;
/// Simple-reflection indices, 1-based; a word lists factors left to right.
using Word = std::vector<int>;

/// Root datum of sl(n) on the diagonal Cartan.
struct RootDatum {
    int n = 0;
    std::vector<RMat> coroots;    ///< h_j = E_jj - E_{j+1,j+1}
    RMat delta_check;             ///< trace-form representer of the half sum of positive roots
    RMat cartan;                  ///< gamma_i(h_j)
    std::vector<int> norms;       ///< <gamma_j, gamma_j>
};

RootDatum root_datum(int n);

enum class Functional { gamma, delta_check };

/// gamma_j(h) (j 1-based) or delta_check(h) for diagonal h.
Complex evaluate_functional(const RootDatum& datum, Functional f, const Mat& h, int j = 0);

struct WeylElement {
    Permutation perm;
    Word word;
    Mat rep;
};

Permutation identity_permutation(int n);
int inversions(const Permutation& perm);
Permutation inverse(const Permutation& perm);
bool is_permutation(const Permutation& perm);
/// Permutation pattern of a monomial matrix; throws if the matrix is not monomial.
Permutation monomial_pattern(const Mat& m, double tol = 1e-10);
bool normalizes_torus(const Mat& w, double tol = 1e-10);
/// Permutation of the product of simple reflections in the word.
Permutation word_permutation(int n, const Word& word);
bool is_reduced(int n, const Word& word);
Word reduced_word(const Permutation& perm);

/// i_gamma_j(m) for a 2x2 matrix m, embedded at rows/cols (j-1, j) of an n x n identity.
Mat embed_root(int n, int j, const Mat& m);
/// r_gamma_j = i_gamma_j([[0,i],[i,0]]).
Mat simple_reflection(int n, int j);
/// Ordered product of the r over the word.
Mat representative(const RootDatum& datum, const Word& word);
Mat representative(int n, const Word& word);
WeylElement weyl_element(const Permutation& perm);
WeylElement weyl_element(int n, const Word& word);
Permutation longest_permutation(int n);

/// Reduced word for the longest element ending with the given reduced word of w.
Word minimal_prefix_extension(const WeylElement& w, int n);

std::string word_to_string(const Word& word);
Word word_from_string(const std::string& s);

} // namespace liepoisson
