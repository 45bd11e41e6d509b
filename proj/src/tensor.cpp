#include "symderiv/tensor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace symderiv {

Index word_count(int n, int degree)
{
    if (n < 1 || degree < 0) throw std::invalid_argument("word_count: bad arguments");
    Index total = 1;
    for (int i = 0; i < degree; ++i) {
        if (total > std::numeric_limits<Index>::max() / static_cast<Index>(n))
            throw std::overflow_error("tensor power too large for 64-bit word indices");
        total *= static_cast<Index>(n);
    }
    return total;
}

Index encode_word(std::span<const Generator> word, int n)
{
    Index idx = 0;
    for (Generator a : word) idx = idx * static_cast<Index>(n) + static_cast<Index>(a);
    return idx;
}

Word decode_word(Index index, int n, int degree)
{
    Word w(static_cast<std::size_t>(degree));
    for (int s = degree - 1; s >= 0; --s) {
        w[s] = static_cast<Generator>(index % static_cast<Index>(n));
        index /= static_cast<Index>(n);
    }
    return w;
}

// ---------------------------------------------------------------------------

Tensor::Tensor(Space space, int degree) : space_(space), degree_(degree)
{
    if (degree < 0) throw std::invalid_argument("negative tensor degree");
    word_count(space.dim(), degree);
}

Tensor::Tensor(Space space, int degree, SparseVector coefficients)
    : space_(space), degree_(degree), coeffs_(std::move(coefficients))
{
    if (degree < 0) throw std::invalid_argument("negative tensor degree");
    Index bound = word_count(space.dim(), degree);
    if (!coeffs_.is_zero() && coeffs_.entries().back().first >= bound)
        throw std::out_of_range("tensor coefficient index outside H^{(x)d}");
}

Tensor Tensor::word(const Space& space, std::span<const Generator> letters, const Scalar& c)
{
    for (Generator a : letters)
        if (a < 0 || a >= space.dim()) throw std::out_of_range("letter outside the space");
    int d = static_cast<int>(letters.size());
    return Tensor(space, d, SparseVector::unit(encode_word(letters, space.dim()), c));
}

Tensor Tensor::scalar(const Space& space, const Scalar& c) { return Tensor(space, 0, SparseVector::unit(0, c)); }

Index Tensor::index_of(std::span<const Generator> letters) const
{
    if (static_cast<int>(letters.size()) != degree_) throw std::invalid_argument("word length differs from degree");
    for (Generator a : letters)
        if (a < 0 || a >= space_.dim()) throw std::out_of_range("letter outside the space");
    return encode_word(letters, space_.dim());
}

Scalar Tensor::scalar_value() const
{
    if (degree_ != 0) throw std::logic_error("scalar_value of a tensor of positive degree");
    return coeffs_.coefficient(0);
}

std::string Tensor::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for_each_term([&](const Word& w, const Scalar& c) {
        Scalar mag = abs(c);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        if (mag != 1 || w.empty()) out += mag.get_str() + (w.empty() ? "" : " ");
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (s) out += "⊗";
            out += space_.label(w[s]);
        }
    });
    return out;
}

void Tensor::check_compatible(const Tensor& o) const
{
    if (!(space_ == o.space_)) throw std::invalid_argument("tensors live over different spaces");
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in tensor addition");
}

Tensor& Tensor::operator+=(const Tensor& o)
{
    check_compatible(o);
    coeffs_ += o.coeffs_;
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o)
{
    check_compatible(o);
    coeffs_ -= o.coeffs_;
    return *this;
}

Tensor add(const Tensor& t, const Tensor& u) { return t + u; }
Tensor scale(const Scalar& c, const Tensor& t) { return c * t; }

Tensor product(const Tensor& t, const Tensor& u)
{
    if (!(t.space() == u.space())) throw std::invalid_argument("product of tensors over different spaces");
    const Index shift = word_count(t.space().dim(), u.degree());
    word_count(t.space().dim(), t.degree() + u.degree());
    std::vector<SparseVector::Entry> entries;
    entries.reserve(t.term_count() * u.term_count());
    for (const auto& [i, a] : t.coefficients().entries())
        for (const auto& [j, b] : u.coefficients().entries()) entries.emplace_back(i * shift + j, a * b);
    return Tensor(t.space(), t.degree() + u.degree(), SparseVector::from_entries(std::move(entries)));
}

Tensor omega0(const Space& space)
{
    const int g = space.genus();
    std::vector<SparseVector::Entry> entries;
    for (int i = 1; i <= g; ++i) {
        Generator xy[2] = {space.x(i), space.y(i)};
        Generator yx[2] = {space.y(i), space.x(i)};
        entries.emplace_back(encode_word(xy, space.dim()), 1);
        entries.emplace_back(encode_word(yx, space.dim()), -1);
    }
    return Tensor(space, 2, SparseVector::from_entries(std::move(entries)));
}

namespace {

int permutation_sign(std::span<const int> perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

// new_word[perm[s]-1] = old_word[s]
Tensor relabel_slots(const Tensor& t, std::span<const int> perm, int sign)
{
    const int d = t.degree();
    const int n = t.space().dim();
    std::vector<SparseVector::Entry> entries;
    entries.reserve(t.term_count());
    Word moved(static_cast<std::size_t>(d));
    for (const auto& [i, c] : t.coefficients().entries()) {
        Word w = decode_word(i, n, d);
        for (int s = 0; s < d; ++s) moved[perm[s] - 1] = w[s];
        entries.emplace_back(encode_word(moved, n), sign < 0 ? Scalar(-c) : c);
    }
    return Tensor(t.space(), d, SparseVector::from_entries(std::move(entries)));
}

} // namespace

Tensor permute_slots(const Tensor& t, std::span<const int> perm, bool signed_action)
{
    const int d = t.degree();
    if (static_cast<int>(perm.size()) != d) throw std::invalid_argument("permutation size differs from degree");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int p : perm) {
        if (p < 1 || p > d || seen[p - 1]) throw std::invalid_argument("not a permutation of the slots");
        seen[p - 1] = true;
    }
    return relabel_slots(t, perm, signed_action ? permutation_sign(perm) : 1);
}

Tensor cyclic_shift(const Tensor& t)
{
    const int d = t.degree();
    if (d == 0) return t;
    std::vector<int> perm(static_cast<std::size_t>(d));
    perm[0] = d;
    for (int s = 1; s < d; ++s) perm[s] = s;
    return relabel_slots(t, perm, 1);
}

Tensor front_insert(const Tensor& t, int slot)
{
    const int d = t.degree();
    if (slot < 2 || slot > d) throw std::out_of_range("front_insert: slot must satisfy 2 <= i <= degree");
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int s = 1; s <= d; ++s) perm[s - 1] = s < slot ? s + 1 : (s == slot ? 1 : s);
    return relabel_slots(t, perm, 1);
}

Tensor cycle_prefix(const Tensor& t, int slot)
{
    const int d = t.degree();
    if (slot < 2 || slot > d) throw std::out_of_range("cycle_prefix: slot must satisfy 2 <= i <= degree");
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int s = 1; s <= d; ++s) perm[s - 1] = s == 1 ? slot : (s <= slot ? s - 1 : s);
    return relabel_slots(t, perm, 1);
}

Tensor otimes_ij(const Tensor& s, const Tensor& t, int i, int j)
{
    if (s.degree() != 2 || t.degree() != 2) throw std::invalid_argument("otimes_ij needs two degree-2 tensors");
    if (!(1 <= i && i < j && j <= 4)) throw std::invalid_argument("otimes_ij needs 1 <= i < j <= 4");
    int perm[4];
    perm[0] = i;
    perm[1] = j;
    int next = 2;
    for (int slot = 1; slot <= 4; ++slot)
        if (slot != i && slot != j) perm[next++] = slot;
    return relabel_slots(product(s, t), perm, 1);
}

Tensor contract(const Tensor& t, int p, int q)
{
    const Space& space = t.space();
    if (!space.is_symplectic()) throw std::logic_error("contract needs a symplectic space");
    const int d = t.degree();
    if (p == q || p < 1 || q < 1 || p > d || q > d) throw std::out_of_range("contract: invalid slot pair");
    if (p > q) std::swap(p, q);
    const int n = space.dim();
    std::vector<SparseVector::Entry> entries;
    Word rest;
    rest.reserve(static_cast<std::size_t>(d - 2));
    for (const auto& [i, c] : t.coefficients().entries()) {
        Word w = decode_word(i, n, d);
        int sign = space.pairing_sign(w[p - 1], w[q - 1]);
        if (sign == 0) continue;
        rest.clear();
        for (int s = 0; s < d; ++s)
            if (s != p - 1 && s != q - 1) rest.push_back(w[s]);
        entries.emplace_back(encode_word(rest, n), sign > 0 ? c : Scalar(-c));
    }
    return Tensor(space, d - 2, SparseVector::from_entries(std::move(entries)));
}

Tensor antisymmetrize(const Space& space, std::span<const Generator> letters)
{
    const int k = static_cast<int>(letters.size());
    std::vector<int> tau(static_cast<std::size_t>(k));
    std::iota(tau.begin(), tau.end(), 0);
    std::vector<SparseVector::Entry> entries;
    Word w(static_cast<std::size_t>(k));
    do {
        for (int s = 0; s < k; ++s) w[s] = letters[tau[s]];
        entries.emplace_back(encode_word(w, space.dim()), permutation_sign(tau));
    } while (std::next_permutation(tau.begin(), tau.end()));
    return Tensor(space, k, SparseVector::from_entries(std::move(entries)));
}

Tensor symmetrize_embed(const Space& space, std::span<const Generator> letters)
{
    Word w(letters.begin(), letters.end());
    std::sort(w.begin(), w.end());
    std::vector<SparseVector::Entry> entries;
    do {
        entries.emplace_back(encode_word(w, space.dim()), 1);
    } while (std::next_permutation(w.begin(), w.end()));
    return Tensor(space, static_cast<int>(w.size()), SparseVector::from_entries(std::move(entries)));
}

// ---------------------------------------------------------------------------

std::uint64_t necklace_count(int n, int m)
{
    if (m < 1) throw std::invalid_argument("necklace_count: m >= 1 required");
    auto phi = [](int x) {
        int result = x;
        for (int p = 2; p * p <= x; ++p) {
            if (x % p) continue;
            while (x % p == 0) x /= p;
            result -= result / p;
        }
        if (x > 1) result -= result / x;
        return result;
    };
    std::uint64_t total = 0;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) total += static_cast<std::uint64_t>(phi(d)) * word_count(n, m / d);
    return total / static_cast<std::uint64_t>(m);
}

Index canonical_rotation(Index word, int n, int degree)
{
    if (degree <= 1) return word;
    const Index top = word_count(n, degree - 1);
    Index best = word;
    Index cur = word;
    for (int r = 1; r < degree; ++r) {
        // move the leading letter to the end
        Index lead = cur / top;
        cur = (cur % top) * static_cast<Index>(n) + lead;
        best = std::min(best, cur);
    }
    return best;
}

CyclicOrbitIndex::CyclicOrbitIndex(const Space& space, int degree) : space_(space), degree_(degree)
{
    if (degree < 1) throw std::invalid_argument("cyclic orbits need degree >= 1");
    const Index total = word_count(space.dim(), degree);
    for (Index w = 0; w < total; ++w)
        if (canonical_rotation(w, space.dim(), degree) == w) reps_.push_back(w);
}

std::size_t CyclicOrbitIndex::orbit_of(Index word) const
{
    Index rep = canonical_rotation(word, space_.dim(), degree_);
    auto it = std::lower_bound(reps_.begin(), reps_.end(), rep);
    return static_cast<std::size_t>(it - reps_.begin());
}

Tensor CyclicOrbitIndex::orbit_sum(std::size_t orbit) const
{
    const int n = space_.dim();
    const Index top = word_count(n, degree_ - 1);
    std::vector<SparseVector::Entry> entries;
    Index cur = reps_.at(orbit);
    for (int r = 0; r < degree_; ++r) {
        if (std::none_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == cur; }))
            entries.emplace_back(cur, 1);
        Index lead = cur / top;
        cur = (cur % top) * static_cast<Index>(n) + lead;
    }
    return Tensor(space_, degree_, SparseVector::from_entries(std::move(entries)));
}

SparseVector CyclicOrbitIndex::coordinates(const Tensor& invariant) const
{
    if (!(invariant.space() == space_) || invariant.degree() != degree_)
        throw std::invalid_argument("coordinates: tensor does not match the orbit index");
    std::vector<SparseVector::Entry> entries;
    for (const auto& [i, c] : invariant.coefficients().entries()) {
        auto it = std::lower_bound(reps_.begin(), reps_.end(), i);
        if (it != reps_.end() && *it == i) entries.emplace_back(static_cast<Index>(it - reps_.begin()), c);
    }
    return SparseVector::from_entries(std::move(entries));
}

Tensor CyclicOrbitIndex::from_coordinates(const SparseVector& coords) const
{
    Tensor out(space_, degree_);
    for (const auto& [o, c] : coords.entries()) out += c * orbit_sum(static_cast<std::size_t>(o));
    return out;
}

SubspaceBasis invariant_subspace(const Space& space, int degree)
{
    CyclicOrbitIndex orbits(space, degree);
    SubspaceBasis basis;
    for (std::size_t o = 0; o < orbits.size(); ++o) basis.insert(orbits.orbit_sum(o).coefficients());
    return basis;
}

bool is_cyclic_invariant(const Tensor& t) { return cyclic_shift(t) == t; }

} // namespace symderiv
