#pragma once

#include "symderiv/derivation.hpp"
#include "symderiv/subspace.hpp"
#include "symderiv/tensor.hpp"

#include <cstdint>
#include <vector>

namespace symderiv {

/// [t, u] = t (x) u - u (x) t.
Tensor lie_bracket_tensor(const Tensor& t, const Tensor& u);

/// Witt number (1/d) sum_{e | d} mu(e) n^{d/e}: dim of the degree-d part of
/// the free Lie algebra on n generators.
std::uint64_t witt_number(int n, int d);

/// Lyndon words of length d over the alphabet 0 .. n-1, in lexicographic order.
std::vector<Word> lyndon_words(int n, int d);

/// Standard bracketing of a Lyndon word, expanded in T(H).
Tensor lyndon_bracket(const Space& space, const Word& lyndon);

/// Basis of L(d) as tensors: the standard bracketings of the Lyndon words.
std::vector<Tensor> lyndon_basis(const Space& space, int d);

/// Membership test for the Lie elements of T(H) (span of lyndon_basis).
class LieElementTest {
public:
    LieElementTest(const Space& space, int degree);
    bool contains(const Tensor& t) const;
    std::size_t dim() const noexcept { return span_.dim(); }

private:
    Space space_;
    int degree_;
    SubspaceBasis span_;
};

bool is_lie_element(const Tensor& t);

/// Basis of l_g(k): derivations with Lie-element images that kill omega_0,
/// computed as the kernel of the bracket H (x) L(k+1) -> L(k+2).
/// rank_out (if given) receives the rank of that bracket map.
std::vector<Derivation> basis_l(int genus, int degree, std::size_t* rank_out = nullptr);

/// Dimension of l_g(k) from rank of the bracket map modulo a 62-bit prime.
/// Exact whenever the modular rank equals Witt(k+2) (the map is onto).
struct LieDimension {
    std::size_t source_dim;  ///< n * Witt(k+1)
    std::size_t target_dim;  ///< Witt(k+2)
    std::size_t rank;        ///< rank of the bracket map mod p
    bool certified;          ///< rank == target_dim
    std::size_t dim() const { return source_dim - rank; }
};
LieDimension lie_derivation_dimension(int genus, int degree);

/// Standard basis e_j^* (x) (Lyndon element) of Der(L(H))(k) on any space,
/// ordered by (j, Lyndon word).
std::vector<Derivation> basis_der_lie(const Space& space, int degree);

/// trace(k): contract the dual factor of D = sum_j e_j^* (x) D(e_j) with the
/// first tensor slot, then apply the averaging symmetrizer (1/k!) sum_{pi}.
/// The result is a symmetric tensor of degree k.
Tensor trace_k(const Derivation& d);

/// Averaging symmetrizer on H^{(x)k}.
Tensor symmetrize_average(const Tensor& t);

} // namespace symderiv
