#pragma once

#include "symderiv/scalar.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace symderiv {

/// Coordinate index. For tensors this is the base-(dim H) encoding of a word.
using Index = std::uint64_t;

/// Finitely supported vector over Q. Entries are kept sorted by index and no
/// stored coefficient is ever zero.
class SparseVector {
public:
    using Entry = std::pair<Index, Scalar>;

    SparseVector() = default;

    /// Sorts, merges repeated indices and drops zeros.
    static SparseVector from_entries(std::vector<Entry> entries);
    static SparseVector unit(Index i, const Scalar& c = 1);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }

    Scalar coefficient(Index i) const;
    /// Smallest index with a nonzero coefficient. Precondition: !is_zero().
    Index leading_index() const { return entries_.front().first; }

    SparseVector& scale(const Scalar& c);
    /// this += c * other
    SparseVector& add_scaled(const Scalar& c, const SparseVector& other);

    SparseVector& operator+=(const SparseVector& o) { return add_scaled(1, o); }
    SparseVector& operator-=(const SparseVector& o) { return add_scaled(-1, o); }
    SparseVector operator-() const;

    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(const Scalar& c, SparseVector v) { return v.scale(c); }
    friend bool operator==(const SparseVector& a, const SparseVector& b);

private:
    std::vector<Entry> entries_;
};

/// Unordered scratch space for building a SparseVector term by term.
class SparseAccumulator {
public:
    void add(Index i, const Scalar& c);
    void add_scaled(const Scalar& c, const SparseVector& v);
    bool empty() const noexcept { return terms_.empty(); }
    SparseVector take();

private:
    std::unordered_map<Index, Scalar> terms_;
};

} // namespace symderiv
