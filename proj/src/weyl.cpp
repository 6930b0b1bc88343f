#include "liepoisson/weyl.hpp"

#include <numeric>
#include <sstream>

namespace liepoisson {

RootDatum root_datum(int n)
{
    if (n < 1)
        throw Error("root datum needs n >= 1");
    RootDatum d;
    d.n = n;
    for (int j = 0; j + 1 < n; ++j) {
        RMat h = RMat::Zero(n, n);
        h(j, j) = 1.0;
        h(j + 1, j + 1) = -1.0;
        d.coroots.push_back(h);
        d.norms.push_back(static_cast<int>((h * h).trace()));
    }
    d.delta_check = RMat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        d.delta_check(i, i) = 0.5 * (n + 1) - (i + 1);
    const int r = n - 1;
    d.cartan = RMat::Zero(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            d.cartan(i, j) = d.coroots[j](i, i) - d.coroots[j](i + 1, i + 1);
    return d;
}

Complex evaluate_functional(const RootDatum& datum, Functional f, const Mat& h, int j)
{
    if (h.rows() != datum.n || h.cols() != datum.n)
        throw Error("evaluate_functional: size mismatch");
    if ((h - diagonal(h)).norm() > 1e-12)
        throw Error("evaluate_functional: non-diagonal input");
    const RMat& rep = f == Functional::delta_check ? datum.delta_check
                                                   : datum.coroots.at(static_cast<std::size_t>(j - 1));
    return form(rep.cast<Complex>(), h);
}

Permutation identity_permutation(int n)
{
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

int inversions(const Permutation& perm)
{
    int c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            c += perm[i] > perm[j];
    return c;
}

Permutation inverse(const Permutation& perm)
{
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    return inv;
}

bool is_permutation(const Permutation& perm)
{
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Permutation monomial_pattern(const Mat& m, double tol)
{
    const int n = static_cast<int>(m.rows());
    Permutation perm(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(m(i, j)) > tol) {
                if (perm[static_cast<std::size_t>(i)] != -1)
                    throw Error("matrix is not monomial");
                perm[static_cast<std::size_t>(i)] = j;
            }
    if (!is_permutation(perm))
        throw Error("matrix is not monomial");
    return perm;
}

bool normalizes_torus(const Mat& w, double tol)
{
    try {
        monomial_pattern(w, tol);
    } catch (const Error&) {
        return false;
    }
    return (w.adjoint() * w - Mat::Identity(w.rows(), w.cols())).norm() < tol;
}

Permutation word_permutation(int n, const Word& word)
{
    Permutation perm = identity_permutation(n);
    for (int j : word) {
        if (j < 1 || j >= n)
            throw Error("simple reflection index out of range");
        // right multiplication by r_j swaps the values j-1 and j
        for (int& v : perm) {
            if (v == j - 1)
                v = j;
            else if (v == j)
                v = j - 1;
        }
    }
    return perm;
}

bool is_reduced(int n, const Word& word)
{
    return inversions(word_permutation(n, word)) == static_cast<int>(word.size());
}

Word reduced_word(const Permutation& perm)
{
    if (!is_permutation(perm))
        throw Error("reduced_word: not a permutation");
    Permutation p = perm;
    Word reversed;
    const int n = static_cast<int>(p.size());
    for (;;) {
        const Permutation pos = inverse(p);
        int j = -1;
        for (int v = 0; v + 1 < n; ++v)
            if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v + 1)]) {
                j = v;
                break;
            }
        if (j < 0)
            break;
        std::swap(p[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])],
                  p[static_cast<std::size_t>(pos[static_cast<std::size_t>(j + 1)])]);
        reversed.push_back(j + 1);
    }
    return Word(reversed.rbegin(), reversed.rend());
}

Mat embed_root(int n, int j, const Mat& m)
{
    if (j < 1 || j >= n)
        throw Error("simple root index out of range");
    Mat g = Mat::Identity(n, n);
    g.block(j - 1, j - 1, 2, 2) = m;
    return g;
}

Mat simple_reflection(int n, int j)
{
    Mat r(2, 2);
    r << 0.0, I_, I_, 0.0;
    return embed_root(n, j, r);
}

Mat representative(int n, const Word& word)
{
    Mat w = Mat::Identity(n, n);
    for (int j : word)
        w = w * simple_reflection(n, j);
    return w;
}

Mat representative(const RootDatum& datum, const Word& word)
{
    return representative(datum.n, word);
}

WeylElement weyl_element(const Permutation& perm)
{
    WeylElement w;
    w.perm = perm;
    w.word = reduced_word(perm);
    w.rep = representative(static_cast<int>(perm.size()), w.word);
    return w;
}

WeylElement weyl_element(int n, const Word& word)
{
    WeylElement w;
    w.word = word;
    w.perm = word_permutation(n, word);
    w.rep = representative(n, word);
    return w;
}

Permutation longest_permutation(int n)
{
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = n - 1 - i;
    return p;
}

Word minimal_prefix_extension(const WeylElement& w, int n)
{
    // w0 = v w with lengths adding up; v = w0 w^{-1}
    const Mat v = representative(n, reduced_word(longest_permutation(n))) * inverse(w.rep);
    Word word = reduced_word(monomial_pattern(v));
    word.insert(word.end(), w.word.begin(), w.word.end());
    if (!is_reduced(n, word) || word_permutation(n, word) != longest_permutation(n))
        throw Error("minimal_prefix_extension: inconsistent word");
    return word;
}

std::string word_to_string(const Word& word)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i)
        os << (i ? " " : "") << word[i];
    return os.str();
}

Word word_from_string(const std::string& s)
{
    Word word;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int j = 0;
        try {
            j = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw Error("bad word letter: " + tok);
        }
        if (used != tok.size())
            throw Error("bad word letter: " + tok);
        word.push_back(j);
    }
    return word;
}

} // namespace liepoisson
