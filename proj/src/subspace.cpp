#include "symderiv/subspace.hpp"

namespace symderiv {

SparseVector SubspaceBasis::reduce(const SparseVector& v) const
{
    // Rows vanish at each other's pivots, so the coefficients of v at pivot
    // positions are exactly the multiples to subtract.
    SparseAccumulator acc;
    bool touched = false;
    for (const auto& [i, c] : v.entries()) {
        auto it = rows_.find(i);
        if (it == rows_.end()) continue;
        if (!touched) {
            acc.add_scaled(1, v);
            touched = true;
        }
        acc.add_scaled(-c, it->second);
    }
    return touched ? acc.take() : v;
}

bool SubspaceBasis::insert(const SparseVector& v)
{
    SparseVector r = reduce(v);
    if (r.is_zero()) return true;
    Index pivot = r.leading_index();
    Scalar lead = r.entries().front().second;
    if (lead != 1) r.scale(1 / lead);
    for (auto& [p, row] : rows_) {
        Scalar c = row.coefficient(pivot);
        if (!is_zero(c)) row.add_scaled(-c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return false;
}

std::vector<SparseVector> SubspaceBasis::vectors() const
{
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

std::vector<Index> SubspaceBasis::pivots() const
{
    std::vector<Index> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
}

std::pair<SubspaceBasis, bool> insert_reduce(SubspaceBasis basis, const SparseVector& v)
{
    bool absorbed = basis.insert(v);
    return {std::move(basis), absorbed};
}

std::size_t span_dim(std::span<const SparseVector> vectors)
{
    SubspaceBasis b;
    for (const auto& v : vectors) b.insert(v);
    return b.dim();
}

SubspaceBasis kernel_of_map(const LinearAction& action, std::size_t dim, std::size_t* rank)
{
    // Row-reduce the transposed matrix: each output coordinate contributes a
    // row over the source coordinates. Free columns of the RREF parametrize
    // the kernel.
    std::map<Index, std::vector<SparseVector::Entry>> rows;
    for (Index j = 0; j < dim; ++j) {
        const SparseVector image = action(j);
        for (const auto& [o, c] : image.entries()) rows[o].emplace_back(j, c);
    }

    SubspaceBasis rowspace;
    for (auto& [o, entries] : rows) rowspace.insert(SparseVector::from_entries(std::move(entries)));
    if (rank) *rank = rowspace.dim();

    std::map<Index, std::vector<SparseVector::Entry>> free_terms;
    for (Index p : rowspace.pivots()) {
        for (const auto& [col, c] : rowspace.row(p).entries()) {
            if (col == p) continue;
            free_terms[col].emplace_back(p, -c);
        }
    }
    SubspaceBasis kernel;
    for (Index f = 0; f < dim; ++f) {
        if (rowspace.is_pivot(f)) continue;
        auto entries = std::move(free_terms[f]);
        entries.emplace_back(f, 1);
        kernel.insert(SparseVector::from_entries(std::move(entries)));
    }
    return kernel;
}

SubspaceBasis kernel_of_endomorphism(const LinearAction& action, std::size_t dim)
{
    return kernel_of_map(action, dim);
}

std::size_t quotient_dim(const SubspaceBasis& ambient, const SubspaceBasis& sub)
{
    for (const auto& v : sub.vectors())
        if (!ambient.contains(v))
            throw SubspaceViolation("quotient_dim: subspace is not contained in the ambient span");
    return ambient.dim() - sub.dim();
}

} // namespace symderiv
