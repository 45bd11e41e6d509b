#include "symderiv/free_lie.hpp"

#include "symderiv/modular.hpp"

#include <algorithm>
#include <numeric>

namespace symderiv {

Tensor lie_bracket_tensor(const Tensor& t, const Tensor& u) { return product(t, u) - product(u, t); }

std::uint64_t witt_number(int n, int d)
{
    if (d < 1) throw std::invalid_argument("witt_number: d >= 1 required");
    auto mobius = [](int x) {
        int result = 1;
        for (int p = 2; p * p <= x; ++p) {
            if (x % p) continue;
            x /= p;
            if (x % p == 0) return 0;
            result = -result;
        }
        if (x > 1) result = -result;
        return result;
    };
    std::int64_t total = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) total += mobius(e) * static_cast<std::int64_t>(word_count(n, d / e));
    return static_cast<std::uint64_t>(total / d);
}

std::vector<Word> lyndon_words(int n, int d)
{
    // Duval's generation of Lyndon words of length <= d in lexicographic order
    std::vector<Word> out;
    Word w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == d) out.push_back(w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n - 1) w.pop_back();
    }
    return out;
}

namespace {

bool is_lyndon(const Word& w)
{
    for (std::size_t r = 1; r < w.size(); ++r)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + r, w.end())) return false;
    return true;
}

} // namespace

Tensor lyndon_bracket(const Space& space, const Word& lyndon)
{
    if (lyndon.size() == 1) return Tensor::generator(space, lyndon[0]);
    // standard factorization w = uv with v the longest proper Lyndon suffix
    for (std::size_t split = 1; split < lyndon.size(); ++split) {
        Word v(lyndon.begin() + split, lyndon.end());
        if (is_lyndon(v)) {
            Word u(lyndon.begin(), lyndon.begin() + split);
            return lie_bracket_tensor(lyndon_bracket(space, u), lyndon_bracket(space, v));
        }
    }
    throw std::logic_error("lyndon_bracket: input is not a Lyndon word");
}

std::vector<Tensor> lyndon_basis(const Space& space, int d)
{
    std::vector<Tensor> out;
    for (const auto& w : lyndon_words(space.dim(), d)) out.push_back(lyndon_bracket(space, w));
    return out;
}

LieElementTest::LieElementTest(const Space& space, int degree) : space_(space), degree_(degree)
{
    for (const auto& t : lyndon_basis(space, degree)) span_.insert(t.coefficients());
}

bool LieElementTest::contains(const Tensor& t) const
{
    if (!(t.space() == space_) || t.degree() != degree_) throw std::invalid_argument("LieElementTest: wrong space or degree");
    return span_.contains(t.coefficients());
}

bool is_lie_element(const Tensor& t)
{
    if (t.degree() == 0) return t.is_zero();
    return LieElementTest(t.space(), t.degree()).contains(t);
}

namespace {

// Source basis of H (x) L(k+1): generator a (x) Lyndon element j, as a tensor.
struct BracketSource {
    Space space;
    std::vector<Tensor> lie;

    std::size_t size() const { return static_cast<std::size_t>(space.dim()) * lie.size(); }
    Tensor element(Index i) const
    {
        auto a = static_cast<Generator>(i / lie.size());
        return product(Tensor::generator(space, a), lie[i % lie.size()]);
    }
    // a (x) l  ->  [a, l] = (a (x) l) - sigma(a (x) l)
    SparseVector image(Index i) const
    {
        Tensor t = element(i);
        return (t - cyclic_shift(t)).coefficients();
    }
};

} // namespace

std::vector<Derivation> basis_l(int genus, int degree, std::size_t* rank_out)
{
    if (degree < 1) throw std::invalid_argument("basis_l needs degree >= 1");
    BracketSource src{Space::symplectic(genus), lyndon_basis(Space::symplectic(genus), degree + 1)};
    SubspaceBasis kernel = kernel_of_map([&](Index i) { return src.image(i); }, src.size(), rank_out);
    std::vector<Derivation> out;
    out.reserve(kernel.dim());
    for (const auto& v : kernel.vectors()) {
        Tensor dual(src.space, degree + 2);
        for (const auto& [i, c] : v.entries()) dual += c * src.element(i);
        out.push_back(from_dual_tensor(dual));
    }
    return out;
}

LieDimension lie_derivation_dimension(int genus, int degree)
{
    BracketSource src{Space::symplectic(genus), lyndon_basis(Space::symplectic(genus), degree + 1)};
    LieDimension out{};
    out.source_dim = src.size();
    out.target_dim = witt_number(src.space.dim(), degree + 2);
    // coordinates: words of degree k+2, compressed to the ones that occur
    std::vector<SparseVector> images;
    std::vector<Index> seen;
    for (Index i = 0; i < src.size(); ++i) {
        images.push_back(src.image(i));
        for (const auto& e : images.back().entries()) seen.push_back(e.first);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto& v : images) {
        std::vector<SparseVector::Entry> entries;
        for (const auto& [w, c] : v.entries())
            entries.emplace_back(static_cast<Index>(std::lower_bound(seen.begin(), seen.end(), w) - seen.begin()), c);
        v = SparseVector::from_entries(std::move(entries));
    }
    out.rank = modular_rank(images, seen.size(), default_primes().front());
    out.certified = out.rank == out.target_dim;
    return out;
}

std::vector<Derivation> basis_der_lie(const Space& space, int degree)
{
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Tensor> lie = lyndon_basis(space, degree + 1);
    std::vector<Derivation> out;
    for (Generator j = 0; j < space.dim(); ++j) {
        for (const auto& l : lie) {
            std::vector<Tensor> images(static_cast<std::size_t>(space.dim()), Tensor(space, degree + 1));
            images[j] = l;
            out.emplace_back(space, degree, std::move(images));
        }
    }
    return out;
}

Tensor symmetrize_average(const Tensor& t)
{
    const int k = t.degree();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    Tensor out(t.space(), k);
    Scalar count = 0;
    do {
        out += permute_slots(t, perm);
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out *= 1 / count;
    return out;
}

Tensor trace_k(const Derivation& d)
{
    const Space& space = d.space();
    const int n = space.dim();
    const int k = d.degree();
    if (k < 1) throw std::invalid_argument("trace_k needs degree >= 1");
    const Index tail = word_count(n, k);
    SparseAccumulator acc;
    for (Generator j = 0; j < n; ++j)
        for (const auto& [idx, c] : d.image(j).coefficients().entries())
            if (static_cast<Generator>(idx / tail) == j) acc.add(idx % tail, c);
    return symmetrize_average(Tensor(space, k, acc.take()));
}

} // namespace symderiv
