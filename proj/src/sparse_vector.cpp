#include "symderiv/sparse_vector.hpp"

#include <algorithm>

namespace symderiv {

SparseVector SparseVector::from_entries(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector out;
    out.entries_.reserve(entries.size());
    for (auto& e : entries) {
        e.second.canonicalize();
        if (!out.entries_.empty() && out.entries_.back().first == e.first)
            out.entries_.back().second += e.second;
        else
            out.entries_.push_back(std::move(e));
        if (symderiv::is_zero(out.entries_.back().second)) out.entries_.pop_back();
    }
    return out;
}

SparseVector SparseVector::unit(Index i, const Scalar& c)
{
    SparseVector v;
    if (!symderiv::is_zero(c)) {
        v.entries_.emplace_back(i, c);
        v.entries_.back().second.canonicalize();
    }
    return v;
}

Scalar SparseVector::coefficient(Index i) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return 0;
}

SparseVector& SparseVector::scale(const Scalar& c)
{
    if (symderiv::is_zero(c)) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= c;
    return *this;
}

SparseVector& SparseVector::add_scaled(const Scalar& c, const SparseVector& other)
{
    if (symderiv::is_zero(c) || other.is_zero()) return *this;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar s = a->second + c * b->second;
            if (!symderiv::is_zero(s)) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
    return *this;
}

SparseVector SparseVector::operator-() const
{
    SparseVector v = *this;
    for (auto& e : v.entries_) e.second = -e.second;
    return v;
}

bool operator==(const SparseVector& a, const SparseVector& b)
{
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i].first != b.entries_[i].first || a.entries_[i].second != b.entries_[i].second)
            return false;
    return true;
}

void SparseAccumulator::add(Index i, const Scalar& c)
{
    if (symderiv::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (symderiv::is_zero(it->second)) terms_.erase(it);
    }
}

void SparseAccumulator::add_scaled(const Scalar& c, const SparseVector& v)
{
    if (symderiv::is_zero(c)) return;
    for (const auto& [i, x] : v.entries()) add(i, c * x);
}

SparseVector SparseAccumulator::take()
{
    std::vector<SparseVector::Entry> entries;
    entries.reserve(terms_.size());
    for (auto& [i, c] : terms_) entries.emplace_back(i, std::move(c));
    terms_.clear();
    return SparseVector::from_entries(std::move(entries));
}

} // namespace symderiv
