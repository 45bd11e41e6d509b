#pragma once

#include "symderiv/sparse_vector.hpp"

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symderiv {

/// Raised when a claimed subspace inclusion does not hold.
class SubspaceViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Subspace of Q^(Index) kept in reduced row-echelon form.
///
/// Every stored vector has coefficient 1 at its pivot (its smallest index)
/// and coefficient 0 at every other vector's pivot. The RREF of a subspace is
/// unique, so the stored basis depends only on the span, never on the order
/// in which vectors were inserted.
class SubspaceBasis {
public:
    SubspaceBasis() = default;

    /// Reduces v and adds it if it enlarges the span. Returns true iff v was
    /// already in the span (absorbed).
    bool insert(const SparseVector& v);

    /// Residual of v after elimination against the basis; zero iff v is in
    /// the span. Nonzero entries only occur at non-pivot indices.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_pivot(Index i) const { return rows_.count(i) != 0; }

    /// Basis vectors ordered by pivot.
    std::vector<SparseVector> vectors() const;
    std::vector<Index> pivots() const;
    const SparseVector& row(Index pivot) const { return rows_.at(pivot); }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) { return a.rows_ == b.rows_; }

private:
    std::map<Index, SparseVector> rows_; // pivot -> row
};

/// Functional form of SubspaceBasis::insert.
std::pair<SubspaceBasis, bool> insert_reduce(SubspaceBasis basis, const SparseVector& v);

/// Rank over Q of a list of vectors.
std::size_t span_dim(std::span<const SparseVector> vectors);

/// Column action of a linear map on the standard basis e_0 .. e_{dim-1}.
using LinearAction = std::function<SparseVector(Index)>;

/// Kernel of a linear map Q^dim -> Q^(Index), as an echelon basis in the
/// source coordinates. rank (if requested) receives dim - dim(kernel).
SubspaceBasis kernel_of_map(const LinearAction& action, std::size_t dim, std::size_t* rank = nullptr);

/// Same as kernel_of_map for an endomorphism of Q^dim.
SubspaceBasis kernel_of_endomorphism(const LinearAction& action, std::size_t dim);

/// dim(ambient) - dim(sub). Throws SubspaceViolation unless sub is contained
/// in ambient.
std::size_t quotient_dim(const SubspaceBasis& ambient, const SubspaceBasis& sub);

} // namespace symderiv
