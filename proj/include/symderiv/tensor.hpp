#pragma once

#include "symderiv/space.hpp"
#include "symderiv/sparse_vector.hpp"
#include "symderiv/subspace.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symderiv {

/// Letters of a basis word of H^{(x)d}, slot 1 first.
using Word = std::vector<Generator>;

/// n^d, throwing std::overflow_error when it does not fit an Index.
Index word_count(int n, int degree);
/// Base-n positional code, first letter most significant, so index order is
/// lexicographic word order.
Index encode_word(std::span<const Generator> word, int n);
Word decode_word(Index index, int n, int degree);

/// Homogeneous element of H^{(x)d} over a fixed space. Degree 0 tensors are
/// scalars (single index 0).
class Tensor {
public:
    Tensor(Space space, int degree);
    Tensor(Space space, int degree, SparseVector coefficients);

    static Tensor word(const Space& space, std::span<const Generator> letters, const Scalar& c = 1);
    static Tensor generator(const Space& space, Generator a) { return word(space, std::span(&a, 1)); }
    static Tensor scalar(const Space& space, const Scalar& c);

    const Space& space() const noexcept { return space_; }
    int degree() const noexcept { return degree_; }
    const SparseVector& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    Index index_of(std::span<const Generator> letters) const;
    Word word_at(Index i) const { return decode_word(i, space_.dim(), degree_); }
    Scalar coefficient(std::span<const Generator> letters) const { return coeffs_.coefficient(index_of(letters)); }
    /// Value of a degree-0 tensor.
    Scalar scalar_value() const;

    template <class F>
    void for_each_term(F&& f) const
    {
        for (const auto& [i, c] : coeffs_.entries()) f(word_at(i), c);
    }

    /// "2 x1⊗y1 - y1⊗x1"; "0" for the zero tensor.
    std::string to_string() const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Scalar& c)
    {
        coeffs_.scale(c);
        return *this;
    }
    Tensor operator-() const { return Tensor(space_, degree_, -coeffs_); }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Scalar& c, Tensor t) { return t *= c; }
    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        return a.space_ == b.space_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_compatible(const Tensor& o) const;

    Space space_;
    int degree_;
    SparseVector coeffs_;
};

Tensor add(const Tensor& t, const Tensor& u);
Tensor scale(const Scalar& c, const Tensor& t);
/// t (x) u; degrees add.
Tensor product(const Tensor& t, const Tensor& u);

/// The symplectic class sum_i (x_i (x) y_i - y_i (x) x_i).
Tensor omega0(const Space& space);

/// Moves the letter in slot i to slot perm[i-1] (1-based slots). With
/// `signed_action` the result is multiplied by the sign of the permutation.
Tensor permute_slots(const Tensor& t, std::span<const int> perm, bool signed_action = false);
/// u_1 (x) u_2 (x) ... (x) u_m  ->  u_2 (x) ... (x) u_m (x) u_1.
Tensor cyclic_shift(const Tensor& t);
/// Moves slot i to the front: u_i (x) u_1 (x) ... (omit u_i) ... (x) u_d, 2 <= i <= d.
Tensor front_insert(const Tensor& t, int slot);
/// Inverse of front_insert: moves slot 1 to slot i, i.e. the cyclic shift of
/// the first i slots. cycle_prefix(t, d) == cyclic_shift(t).
Tensor cycle_prefix(const Tensor& t, int slot);
/// For degree-2 s and t: s's letters go to slots i < j, t's letters fill the
/// two remaining slots in order.
Tensor otimes_ij(const Tensor& s, const Tensor& t, int i, int j);
/// Pairs slots p < q with the intersection form and deletes them.
Tensor contract(const Tensor& t, int p, int q);

/// sum over tau of sgn(tau) * letters[tau(1)] (x) ... (x) letters[tau(k)].
Tensor antisymmetrize(const Space& space, std::span<const Generator> letters);
/// Sum of the distinct rearrangements of a word, each with coefficient 1.
Tensor symmetrize_embed(const Space& space, std::span<const Generator> letters);

/// Necklace count (1/m) sum_{d|m} phi(d) n^{m/d}.
std::uint64_t necklace_count(int n, int m);

/// Orbits of the cyclic shift on basis words of H^{(x)m}. Orbit o is named by
/// its smallest word (its representative); orbits are ordered by it.
class CyclicOrbitIndex {
public:
    CyclicOrbitIndex(const Space& space, int degree);

    const Space& space() const noexcept { return space_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return reps_.size(); }
    Index representative(std::size_t orbit) const { return reps_[orbit]; }
    /// Orbit containing an arbitrary word index.
    std::size_t orbit_of(Index word) const;
    Tensor orbit_sum(std::size_t orbit) const;

    /// Coordinates of a cyclic-invariant tensor in the orbit-sum basis
    /// (coefficient at each representative). No invariance check.
    SparseVector coordinates(const Tensor& invariant) const;
    Tensor from_coordinates(const SparseVector& coords) const;

private:
    Space space_;
    int degree_;
    std::vector<Index> reps_;
};

/// Smallest word index among the rotations of `word`.
Index canonical_rotation(Index word, int n, int degree);

/// Echelon basis of the fixed space of the cyclic shift on H^{(x)m}.
SubspaceBasis invariant_subspace(const Space& space, int degree);

bool is_cyclic_invariant(const Tensor& t);

} // namespace symderiv
