#include "oracles.hpp"

#include "symderiv/free_lie.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>

using namespace symderiv;

TEST_CASE("Witt numbers count Lyndon words")
{
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 6; ++d) {
            CHECK(witt_number(n, d) == oracle::lyndon_count(n, d));
            const auto words = lyndon_words(n, d);
            CHECK(words.size() == witt_number(n, d));
            CHECK(std::is_sorted(words.begin(), words.end()));
        }
    CHECK(witt_number(2, 4) == 3);
}

TEST_CASE("Lyndon brackets span the Lie elements")
{
    const Space h = Space::plain(3);
    for (int d = 1; d <= 4; ++d) {
        const auto basis = lyndon_basis(h, d);
        std::vector<oracle::Terms> terms;
        for (const auto& t : basis) terms.push_back(oracle::terms_of(t));
        CHECK(oracle::rank_of(terms) == witt_number(3, d));
        const LieElementTest test(h, d);
        CHECK(test.dim() == witt_number(3, d));
        for (const auto& t : basis) CHECK(test.contains(t));
    }
    const Tensor e1 = Tensor::generator(h, h.e(1)), e2 = Tensor::generator(h, h.e(2));
    CHECK(is_lie_element(lie_bracket_tensor(e1, lie_bracket_tensor(e1, e2))));
    CHECK_FALSE(is_lie_element(product(e1, e1)));
    CHECK_FALSE(is_lie_element(product(e1, e2)));
    const Space s = Space::symplectic(1);
    const std::array<Generator, 2> xx{s.x(1), s.x(1)};
    CHECK_FALSE(is_lie_element(Tensor::word(s, xx)));
}

TEST_CASE("symplectic Lie derivations")
{
    const auto l21 = basis_l(2, 1);
    CHECK(l21.size() == 4);
    for (const auto& d : l21) {
        CHECK(kills_omega0(d));
        for (const auto& img : d.images()) CHECK(is_lie_element(img));
    }
    const LieDimension dim = lie_derivation_dimension(2, 2);
    CHECK(dim.certified);
    CHECK(dim.dim() == basis_l(2, 2).size());
    CHECK(lie_derivation_dimension(3, 2).dim() == 105);
}

TEST_CASE("averaging symmetrizer is a projection and trace vanishes on brackets")
{
    const Space h = Space::plain(2);
    const std::array<Generator, 3> w{0, 1, 1};
    const Tensor s = symmetrize_average(Tensor::word(h, w));
    CHECK(symmetrize_average(s) == s);
    CHECK(s.coefficient(w) == Scalar(1, 3));
    const auto d1 = basis_der_lie(h, 1);
    CHECK(d1.size() == 2 * witt_number(2, 2));
    for (std::size_t a = 0; a < d1.size(); ++a)
        for (std::size_t b = 0; b < d1.size(); ++b) CHECK(trace_k(bracket(d1[a], d1[b])).is_zero());
}
