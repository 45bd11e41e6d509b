#pragma once

#include "symderiv/sparse_vector.hpp"
#include "symderiv/subspace.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace symderiv {

/// The modular and exact ranks of the same instance differ.
class RankDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic in Z/p for a prime p < 2^63.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept
    {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;

    /// Image of a rational in Z/p. Throws std::domain_error if p divides the
    /// denominator.
    std::uint64_t reduce(const Scalar& q) const;

private:
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// `count` distinct primes in [2^61, 2^62), drawn from a generator seeded
/// with `seed`. Same seed, same primes.
std::vector<std::uint64_t> random_primes_62bit(std::size_t count, std::uint64_t seed);

/// Default primes used by the rank filters.
const std::vector<std::uint64_t>& default_primes();

/// Reduced row-echelon basis over Z/p with dense rows of fixed length.
class ModularSubspace {
public:
    ModularSubspace(std::uint64_t prime, std::size_t ambient_dim);

    /// Returns true iff v (reduced mod p) is already in the span. All indices
    /// of v must be below the ambient dimension.
    bool insert(const SparseVector& v);
    bool contains(const SparseVector& v) const;

    std::size_t dim() const noexcept { return rows_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::uint64_t prime() const noexcept { return field_.modulus(); }
    /// Pivot columns in insertion order.
    const std::vector<std::size_t>& pivots() const noexcept { return pivot_cols_; }
    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

private:
    std::vector<std::uint64_t> residual(const SparseVector& v) const;

    PrimeField field_;
    std::size_t ambient_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::int64_t> pivot_row_;
    std::vector<std::size_t> pivot_cols_;
};

std::size_t modular_rank(std::span<const SparseVector> vectors, std::size_t ambient_dim, std::uint64_t prime);

/// Exact rank, cross-checked against the rank modulo every default prime.
/// Throws RankDisagreement if any modular rank differs from the exact one.
std::size_t checked_rank(std::span<const SparseVector> vectors, std::size_t ambient_dim);

} // namespace symderiv
