#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "helpers.hpp"
#include "liepoisson/weyl.hpp"

using namespace liepoisson;
using testing::I;
using testing::mat;

namespace {

// All reduced words of a permutation by exhaustive descent search.
std::set<Word> all_reduced_words(int n, const Permutation& target)
{
    std::set<Word> out;
    const int len = inversions(target);
    std::function<void(Word&)> grow = [&](Word& w) {
        if (static_cast<int>(w.size()) == len) {
            if (word_permutation(n, w) == target)
                out.insert(w);
            return;
        }
        for (int j = 1; j < n; ++j) {
            w.push_back(j);
            if (is_reduced(n, w))
                grow(w);
            w.pop_back();
        }
    };
    Word w;
    grow(w);
    return out;
}

} // namespace

TEST_CASE("root datum")
{
    for (int n = 2; n <= 5; ++n) {
        const auto d = root_datum(n);
        for (int j = 1; j < n; ++j) {
            CHECK(d.norms[static_cast<std::size_t>(j - 1)] == 2);
            const Mat h = d.coroots[static_cast<std::size_t>(j - 1)].cast<Complex>();
            CHECK(std::abs(evaluate_functional(d, Functional::delta_check, h) - 1.0) < 1e-15);
        }
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) {
                const double c = d.cartan(i, j);
                CHECK((c == 2.0 || c == -1.0 || c == 0.0));
                CHECK(c == (i == j ? 2.0 : (std::abs(i - j) == 1 ? -1.0 : 0.0)));
            }
    }
    const auto d2 = root_datum(2);
    CHECK(std::abs(evaluate_functional(d2, Functional::gamma, mat({{0.7, 0}, {0, -0.7}}), 1) - 1.4) < 1e-15);
    CHECK_THROWS_AS(evaluate_functional(d2, Functional::gamma, mat({{0, 1}, {0, 0}}), 1), Error);

    // delta_check(w^{-1} h_gamma w) for w = s2 in sl(3): h_1 becomes diag(1,0,-1)
    const auto d3 = root_datum(3);
    const Mat w = representative(d3, {2});
    const Mat h1 = d3.coroots[0].cast<Complex>();
    const Mat conj = w.adjoint() * h1 * w;
    CHECK(frob(conj - mat({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}})) < 1e-15);
    CHECK(std::abs(evaluate_functional(d3, Functional::delta_check, conj) - 2.0) < 1e-15);
}

TEST_CASE("reduced words")
{
    CHECK(reduced_word(identity_permutation(3)).empty());
    CHECK(reduced_word({1, 0}) == Word{1});
    const Word w0 = reduced_word(longest_permutation(3));
    CHECK(w0.size() == 3);
    CHECK(word_permutation(3, w0) == longest_permutation(3));
    CHECK(all_reduced_words(3, longest_permutation(3)).count(w0) == 1);

    Permutation p = identity_permutation(5);
    int checked = 0;
    do {
        const Word w = reduced_word(p);
        CHECK(static_cast<int>(w.size()) == inversions(p));
        CHECK(word_permutation(5, w) == p);
        CHECK(monomial_pattern(representative(5, w)) == p);
        ++checked;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(checked == 120);
    CHECK(!is_reduced(3, {1, 1}));
    CHECK(is_reduced(3, {1, 2, 1}));
}

TEST_CASE("representatives")
{
    CHECK(frob(representative(3, {}) - Mat::Identity(3, 3)) == 0.0);
    CHECK(frob(representative(2, {1}) - mat({{0, I}, {I, 0}})) == 0.0);
    const Mat w0 = representative(3, {1, 2, 1});
    const Mat D = mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    const Mat conj = w0 * D * w0.adjoint();
    CHECK(frob(conj - mat({{3, 0, 0}, {0, 2, 0}, {0, 0, 1}})) < 1e-12);
    CHECK(std::abs(w0.determinant() - 1.0) < 1e-14);
    CHECK(frob(w0.adjoint() * w0 - Mat::Identity(3, 3)) < 1e-14);

    // every word up to length 6 normalizes the torus
    Rng rng = make_rng(1);
    std::uniform_int_distribution<int> letter(1, 3);
    for (int len = 0; len <= 6; ++len)
        for (int rep = 0; rep < 10; ++rep) {
            Word w;
            for (int i = 0; i < len; ++i)
                w.push_back(letter(rng));
            const Mat r = representative(4, w);
            CHECK(normalizes_torus(r));
            const Mat t = Eigen::VectorXcd::Random(4).asDiagonal();
            const Mat c = r * t * r.adjoint();
            CHECK(frob(c - diagonal(c)) < 1e-14);
        }
}

TEST_CASE("minimal prefix extension")
{
    const auto e = weyl_element(identity_permutation(3));
    const Word we = minimal_prefix_extension(e, 3);
    CHECK(word_permutation(3, we) == longest_permutation(3));

    const auto s1 = weyl_element(2, {1});
    CHECK(minimal_prefix_extension(s1, 2) == Word{1});

    for (int n = 3; n <= 4; ++n) {
        Permutation p = identity_permutation(n);
        const int N = inversions(longest_permutation(n));
        do {
            const auto w = weyl_element(p);
            const Word ext = minimal_prefix_extension(w, n);
            CHECK(static_cast<int>(ext.size()) == N);
            CHECK(std::equal(w.word.begin(), w.word.end(), ext.end() - static_cast<long>(w.word.size())));
            // length additivity N(w0) = N(w0 w^{-1}) + N(w)
            const Word head(ext.begin(), ext.end() - static_cast<long>(w.word.size()));
            CHECK(inversions(word_permutation(n, head)) + inversions(p) == N);
            CHECK(all_reduced_words(n, longest_permutation(n)).count(ext) == 1);
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("word strings")
{
    CHECK(word_from_string("1 2 1") == Word{1, 2, 1});
    CHECK(word_from_string("") == Word{});
    CHECK(word_to_string({2, 1}) == "2 1");
    CHECK_THROWS_AS(word_from_string("1 x"), Error);
}
