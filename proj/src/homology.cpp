#include "symderiv/homology.hpp"

#include "symderiv/cache.hpp"
#include "symderiv/free_lie.hpp"
#include "symderiv/modular.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace symderiv {

// --- algebra handles --------------------------------------------------------

AlgebraHandle AlgebraHandle::a(int genus)
{
    if (genus < 1) throw std::invalid_argument("a_g needs g >= 1");
    return {AlgebraKind::SymplecticAssociative, genus};
}

AlgebraHandle AlgebraHandle::l(int genus)
{
    if (genus < 1) throw std::invalid_argument("l_g needs g >= 1");
    return {AlgebraKind::SymplecticLie, genus};
}

AlgebraHandle AlgebraHandle::der(int n)
{
    if (n < 2) throw std::invalid_argument("Der(T(H_n)) needs n >= 2");
    return {AlgebraKind::PlainAssociative, n};
}

Space AlgebraHandle::space() const
{
    return kind == AlgebraKind::PlainAssociative ? Space::plain(parameter) : Space::symplectic(parameter);
}

std::string AlgebraHandle::name() const
{
    const std::string p = std::to_string(parameter);
    switch (kind) {
    case AlgebraKind::SymplecticAssociative: return "a_" + p;
    case AlgebraKind::SymplecticLie: return "l_" + p;
    case AlgebraKind::PlainAssociative: return "Der(T(H_" + p + "))";
    }
    return {};
}

std::string AlgebraHandle::key() const
{
    const std::string p = std::to_string(parameter);
    switch (kind) {
    case AlgebraKind::SymplecticAssociative: return "a-sympl" + p;
    case AlgebraKind::SymplecticLie: return "l-sympl" + p;
    case AlgebraKind::PlainAssociative: return "der-plain" + p;
    }
    return {};
}

std::vector<Tensor> degree_basis(const AlgebraHandle& alg, int degree)
{
    if (degree < 1) throw std::invalid_argument("degree_basis: degree >= 1 required");
    const Space h = alg.space();
    std::vector<Tensor> out;
    switch (alg.kind) {
    case AlgebraKind::SymplecticAssociative: {
        CyclicOrbitIndex orbits(h, degree + 2);
        out.reserve(orbits.size());
        for (std::size_t o = 0; o < orbits.size(); ++o) out.push_back(orbits.orbit_sum(o));
        break;
    }
    case AlgebraKind::SymplecticLie:
        for (const auto& d : basis_l(alg.parameter, degree)) out.push_back(dual_tensor(d));
        break;
    case AlgebraKind::PlainAssociative: {
        const Index count = word_count(h.dim(), degree + 2);
        out.reserve(count);
        for (Index i = 0; i < count; ++i) out.emplace_back(h, degree + 2, SparseVector::unit(i));
        break;
    }
    }
    return out;
}

Derivation element_derivation(const AlgebraHandle& alg, const Tensor& element)
{
    if (alg.kind == AlgebraKind::PlainAssociative)
        return from_plain_coordinates(element.space(), element.degree() - 2, element.coefficients());
    return from_dual_tensor_unchecked(element);
}

Tensor derivation_element(const AlgebraHandle& alg, const Derivation& d)
{
    if (alg.kind == AlgebraKind::PlainAssociative) return Tensor(d.space(), d.degree() + 2, plain_coordinates(d));
    return dual_tensor(d);
}

Tensor bracket_element(const AlgebraHandle& alg, const Tensor& a, const Tensor& b)
{
    return derivation_element(alg, bracket(element_derivation(alg, a), element_derivation(alg, b)));
}

// --- bracket generation -----------------------------------------------------

namespace {

struct PairRef {
    int left_degree;
    std::size_t left;
    int right_degree;
    std::size_t right;
};

std::vector<std::pair<int, int>> degree_splits(int weight, PairSelection sel)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; 2 * i <= weight; ++i) {
        if (sel == PairSelection::DegreeOneLeft && i != 1) continue;
        out.emplace_back(i, weight - i);
    }
    return out;
}

// Evaluates f(i) for i in [0, count) on `threads` workers; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F&& f)
{
    std::vector<std::optional<T>> slots(count);
    if (threads <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(f(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) slots[i].emplace(f(i));
            });
        for (auto& th : pool) th.join();
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

// Ambient coordinates: orbit coordinates for a_g, word codes otherwise.
class Coordinates {
public:
    Coordinates(const AlgebraHandle& alg, int weight) : alg_(alg)
    {
        if (alg.kind == AlgebraKind::SymplecticAssociative) orbits_.emplace(alg.space(), weight + 2);
    }
    SparseVector operator()(const Tensor& t) const { return orbits_ ? orbits_->coordinates(t) : t.coefficients(); }
    Tensor tensor(const SparseVector& v, int weight) const
    {
        return orbits_ ? orbits_->from_coordinates(v) : Tensor(alg_.space(), weight + 2, v);
    }
    std::size_t ambient_size(int weight) const
    {
        return orbits_ ? orbits_->size() : word_count(alg_.space().dim(), weight + 2);
    }

private:
    AlgebraHandle alg_;
    std::optional<CyclicOrbitIndex> orbits_;
};

struct BracketBatch {
    std::vector<PairRef> pairs;
    std::vector<Tensor> brackets;
};

BracketBatch all_brackets(const AlgebraHandle& alg, int weight, const BracketOptions& opts)
{
    if (weight < 2) throw std::invalid_argument("brackets need weight >= 2");
    BracketBatch batch;
    std::map<int, std::vector<Tensor>> bases;
    for (auto [i, j] : degree_splits(weight, opts.pairs)) {
        for (int d : {i, j})
            if (!bases.count(d)) bases.emplace(d, degree_basis(alg, d));
        const auto& left = bases.at(i);
        const auto& right = bases.at(j);
        for (std::size_t a = 0; a < left.size(); ++a)
            for (std::size_t b = (i == j ? a + 1 : 0); b < right.size(); ++b) batch.pairs.push_back({i, a, j, b});
    }
    batch.brackets = parallel_map<Tensor>(batch.pairs.size(), opts.threads, [&](std::size_t k) {
        const auto& p = batch.pairs[k];
        return bracket_element(alg, bases.at(p.left_degree)[p.left], bases.at(p.right_degree)[p.right]);
    });
    return batch;
}

// Exact echelon span in ambient coordinates, cross-checked modulo a prime.
SubspaceBasis exact_span(const std::vector<SparseVector>& vectors, std::size_t ambient)
{
    SubspaceBasis basis;
    ModularSubspace modular(default_primes().front(), ambient);
    for (const auto& v : vectors) {
        basis.insert(v);
        modular.insert(v);
    }
    if (basis.dim() != modular.dim())
        throw RankDisagreement("bracket image: exact rank " + std::to_string(basis.dim()) + " but rank " +
                               std::to_string(modular.dim()) + " modulo " + std::to_string(modular.prime()));
    return basis;
}

SubspaceBasis to_tensor_coordinates(const SubspaceBasis& coords, const Coordinates& map, int weight)
{
    // orbit representatives are the smallest words of their orbits, so the
    // expansion of an echelon basis is again echelon with the same pivots
    SubspaceBasis out;
    for (const auto& v : coords.vectors()) out.insert(map.tensor(v, weight).coefficients());
    return out;
}

} // namespace

SubspaceBasis bracket_image(const AlgebraHandle& alg, int weight, const BracketOptions& opts)
{
    Coordinates coords(alg, weight);
    BracketBatch batch = all_brackets(alg, weight, opts);
    std::vector<SparseVector> vs;
    vs.reserve(batch.brackets.size());
    for (const auto& t : batch.brackets) vs.push_back(coords(t));
    return to_tensor_coordinates(exact_span(vs, coords.ambient_size(weight)), coords, weight);
}

H1Result h1_weight(const AlgebraHandle& alg, int weight, const BracketOptions& opts)
{
    if (weight < 1) throw std::invalid_argument("h1_weight: weight >= 1 required");
    H1Result r;
    r.algebra = alg;
    r.weight = weight;
    r.method = "exact";
    std::vector<Tensor> ambient = degree_basis(alg, weight);
    r.ambient_dim = ambient.size();
    if (alg.kind == AlgebraKind::SymplecticAssociative && weight == 2 && alg.parameter >= 4) {
        ExactSequenceOptions eopts;
        eopts.threads = opts.threads;
        eopts.random_pairs = 0;
        const ExactSequenceReport rep = verify_exact_sequence(alg.parameter, eopts);
        r.image_dim = rep.image_dim;
        r.quotient_dim = r.ambient_dim - r.image_dim;
        r.method = rep.method;
        for (std::size_t o : rep.complement_orbits) r.representatives.push_back(ambient[o]);
        return r;
    }
    if (weight == 1) {
        r.representatives = ambient;
        r.quotient_dim = r.ambient_dim;
        return r;
    }
    SubspaceBasis image = bracket_image(alg, weight, opts);
    r.image_dim = image.dim();
    // extend the image by ambient basis elements until the ambient is spanned
    SubspaceBasis span = image;
    for (const auto& t : ambient)
        if (!span.insert(t.coefficients())) r.representatives.push_back(t);
    if (span.dim() != r.ambient_dim)
        throw SubspaceViolation("h1_weight: bracket image is not contained in " + alg.name());
    r.quotient_dim = r.ambient_dim - r.image_dim;
    return r;
}

// --- exact sequence ---------------------------------------------------------

Tensor c13(const Tensor& t)
{
    if (t.degree() != 4) throw std::invalid_argument("c13 needs a degree-4 tensor");
    return contract(t, 1, 3);
}

Tensor c11(const Tensor& t)
{
    if (t.degree() != 4) throw std::invalid_argument("c11 needs a degree-4 tensor");
    return contract(t, 1, 2);
}

std::size_t c13_quotient_rank(const std::vector<Tensor>& tensors)
{
    if (tensors.empty()) return 0;
    const Space& h = tensors.front().space();
    const std::array<int, 2> swap{2, 1};
    std::vector<SparseVector> vs{omega0(h).coefficients()};
    for (const auto& t : tensors) {
        Tensor c = c13(t);
        vs.push_back((c - permute_slots(c, swap)).coefficients());
    }
    return span_dim(vs) - 1;
}

namespace {

Tensor word3(const Space& h, Generator a, Generator b, Generator c)
{
    const std::array<Generator, 3> w{a, b, c};
    return Tensor::word(h, w);
}

Tensor word4(const Space& h, Generator a, Generator b, Generator c, Generator d)
{
    const std::array<Generator, 4> w{a, b, c, d};
    return Tensor::word(h, w);
}

} // namespace

BracketWitnesses bracket_witnesses(int genus)
{
    if (genus < 3) throw std::invalid_argument("bracket witnesses need genus >= 3");
    const Space h = Space::symplectic(genus);
    const AlgebraHandle alg = AlgebraHandle::a(genus);
    const Generator x1 = h.x(1), x2 = h.x(2), x3 = h.x(3), y1 = h.y(1), y2 = h.y(2), y3 = h.y(3);
    auto wedge3 = [&](Generator a, Generator b, Generator c) {
        const std::array<Generator, 3> w{a, b, c};
        return antisymmetrize(h, w);
    };
    auto sym3 = [&](Generator a, Generator b, Generator c) {
        const std::array<Generator, 3> w{a, b, c};
        return symmetrize_embed(h, w);
    };
    BracketWitnesses w{Tensor(h, 4), Tensor(h, 4), Tensor(h, 4), Tensor(h, 4), Tensor(h, 4), Tensor(h, 4)};
    const Tensor cube_y1 = sym3(x1, x1, y1);
    w.trace_pair_bracket = bracket_element(alg, wedge3(x2, y2, x3), sym3(x1, x1, y3));
    w.trace_pair_reversed = bracket_element(alg, sym3(x1, x1, y3), wedge3(x2, y2, x3));
    w.wedge_pair_bracket = bracket_element(alg, wedge3(x1, x2, x3), cube_y1);
    w.cube_pair_bracket = bracket_element(alg, word3(h, x1, x1, x1), cube_y1);
    w.wedge_pair_expected = word4(h, x1, x1, x2, x3) - word4(h, x1, x1, x3, x2) - word4(h, x1, x2, x3, x1) +
                            word4(h, x1, x3, x2, x1) - word4(h, x2, x1, x1, x3) + word4(h, x2, x3, x1, x1) +
                            word4(h, x3, x1, x1, x2) - word4(h, x3, x2, x1, x1);
    const std::array<Generator, 2> xy{x2, y2}, yx{y2, x2}, xx{x1, x1};
    const Tensor form = Tensor::word(h, xy) - Tensor::word(h, yx);
    const Tensor pair11 = Tensor::word(h, xx), one = Tensor::generator(h, x1);
    w.trace_pair_expected = -product(pair11, form) - product(form, pair11) - product(product(one, form), one) +
                            word4(h, x2, x1, x1, y2) - word4(h, y2, x1, x1, x2);
    return w;
}

ExactSequenceReport verify_exact_sequence(int genus, const ExactSequenceOptions& opts)
{
    if (genus < 2) throw std::invalid_argument("verify_exact_sequence needs genus >= 2");
    const AlgebraHandle alg = AlgebraHandle::a(genus);
    const Space h = alg.space();
    ExactSequenceReport rep;
    rep.genus = genus;
    rep.expected_c13_rank = static_cast<std::size_t>(2 * genus * genus - genus - 1);

    const std::vector<Tensor> degree1 = degree_basis(alg, 1);
    const std::vector<Tensor> degree2 = degree_basis(alg, 2);
    const CyclicOrbitIndex orbits(h, 4);
    rep.ambient_dim = degree2.size();
    rep.c13_rank = c13_quotient_rank(degree2);
    rep.image_upper_bound = rep.ambient_dim - rep.c13_rank;

    auto check_c13 = [&](const Tensor& bracket_dual) {
        ++rep.pairs_checked;
        if (!c13(bracket_dual).is_zero()) ++rep.c13_nonzero;
    };
    if (genus >= 3) {
        const BracketWitnesses w = bracket_witnesses(genus);
        for (const Tensor* t : {&w.trace_pair_bracket, &w.wedge_pair_bracket, &w.cube_pair_bracket}) check_c13(*t);
    }

    const std::uint64_t p0 = default_primes()[0], p1 = default_primes()[1];
    const std::size_t ambient = orbits.size();
    const std::string cache_key = alg.key() + "-w2-bracket-independent";

    auto random_pair_check = [&](std::size_t count) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, degree1.size() - 1);
        for (std::size_t done = 0; done < count;) {
            std::size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            check_c13(bracket_element(alg, degree1[a], degree1[b]));
            ++done;
        }
    };

    if (opts.cache) {
        if (auto cached = opts.cache->load(cache_key, h, 4)) {
            // stored vectors are brackets; they must be independent mod p and
            // killed by c13, and their count must meet the upper bound
            ModularSubspace lower(p0, ambient);
            bool in_kernel = true;
            for (const auto& t : *cached) {
                in_kernel = in_kernel && c13(t).is_zero() && is_cyclic_invariant(t);
                lower.insert(orbits.coordinates(t));
            }
            if (in_kernel && lower.dim() == cached->size()) {
                for (std::size_t o = 0; o < ambient; ++o)
                    if (!lower.is_pivot(o)) rep.complement_orbits.push_back(o);
                random_pair_check(opts.random_pairs.value_or(1000));
                rep.image_dim = lower.dim();
                rep.certified = rep.image_dim == rep.image_upper_bound;
                rep.method = "modular-certified (cached)";
                rep.cache_hit = true;
                return rep;
            }
        }
    }

    // all pairs of the degree-1 basis, bracketed in parallel
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < degree1.size(); ++a)
        for (std::size_t b = a + 1; b < degree1.size(); ++b) pairs.emplace_back(a, b);
    std::vector<Tensor> brackets = parallel_map<Tensor>(pairs.size(), opts.threads, [&](std::size_t k) {
        return bracket_element(alg, degree1[pairs[k].first], degree1[pairs[k].second]);
    });
    if (opts.random_pairs) random_pair_check(*opts.random_pairs);
    else
        for (const auto& t : brackets) check_c13(t);

    std::vector<SparseVector> coords;
    coords.reserve(brackets.size());
    for (const auto& t : brackets) coords.push_back(orbits.coordinates(t));

    // lower bound: rank mod p0 of the vectors, stopping at the upper bound
    ModularSubspace first(p0, ambient);
    std::vector<Tensor> independent;
    for (std::size_t k = 0; k < coords.size() && first.dim() < rep.image_upper_bound; ++k)
        if (!first.insert(coords[k])) independent.push_back(brackets[k]);
    // a full pass modulo a second prime must agree
    ModularSubspace second(p1, ambient);
    for (const auto& v : coords) {
        second.insert(v);
        if (second.dim() == ambient) break;
    }
    const bool reached = first.dim() == rep.image_upper_bound;
    if (!reached) {
        // the bound was not met: finish the pass so the reported rank is complete
        for (std::size_t k = 0; k < coords.size(); ++k) first.insert(coords[k]);
    }
    if (second.dim() != first.dim())
        throw RankDisagreement("bracket image rank differs modulo " + std::to_string(p0) + " and " + std::to_string(p1));
    rep.image_dim = first.dim();
    rep.method = "modular-certified";
    for (std::size_t o = 0; o < ambient; ++o)
        if (!first.is_pivot(o)) rep.complement_orbits.push_back(o);
    rep.certified = reached;

    if (genus <= 3) {
        SubspaceBasis exact;
        for (const auto& v : coords) exact.insert(v);
        if (exact.dim() != rep.image_dim)
            throw RankDisagreement("bracket image: exact rank " + std::to_string(exact.dim()) +
                                   " differs from the modular rank " + std::to_string(rep.image_dim));
        rep.method = "exact";
        rep.certified = true;
    }
    if (opts.cache && rep.certified && reached) opts.cache->store(cache_key, h, 4, independent);
    return rep;
}

// --- free Lie side ----------------------------------------------------------

HainResult hain_surjectivity(int genus)
{
    if (genus < 2) throw std::invalid_argument("hain_surjectivity needs genus >= 2");
    const std::vector<Derivation> l1 = basis_l(genus, 1);
    SubspaceBasis target;
    for (const auto& d : basis_l(genus, 2)) target.insert(dual_tensor(d).coefficients());
    HainResult r;
    r.target_dim = target.dim();
    r.closed = true;
    SubspaceBasis image;
    for (std::size_t a = 0; a < l1.size(); ++a) {
        for (std::size_t b = a + 1; b < l1.size(); ++b) {
            const SparseVector v = dual_tensor(bracket(l1[a], l1[b])).coefficients();
            ++r.pairs;
            if (!target.contains(v)) r.closed = false;
            image.insert(v);
        }
    }
    r.image_dim = image.dim();
    return r;
}

// --- polygon contractions ---------------------------------------------------

namespace {

struct Factor {
    Generator a, b;  // the factor is a (x) b -/+ b (x) a
};

std::vector<Factor> polygon_factors(int k, int genus)
{
    if (k < 2) throw std::invalid_argument("polygon: k >= 2 required");
    if (k > genus) throw std::invalid_argument("polygon: k must not exceed the genus");
    const Space h = Space::symplectic(genus);
    std::vector<Factor> f;
    for (int i = 1; i <= k; ++i) f.push_back({h.x(i), h.y(i % k + 1)});
    return f;
}

int permutation_sign(const std::vector<int>& perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

} // namespace

Tensor polygon_lift(int k, int genus, FactorKind kind)
{
    const auto factors = polygon_factors(k, genus);
    const Space h = Space::symplectic(genus);
    const Scalar second_sign = kind == FactorKind::Wedge ? -1 : 1;
    std::vector<Tensor> two_slot;
    for (const auto& f : factors) {
        const std::array<Generator, 2> ab{f.a, f.b}, ba{f.b, f.a};
        two_slot.push_back(Tensor::word(h, ab) + second_sign * Tensor::word(h, ba));
    }
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    Tensor out(h, 2 * k);
    do {
        Tensor term = Tensor::scalar(h, permutation_sign(perm));
        for (int s : perm) term = product(term, two_slot[s]);
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Scalar cycle_contract(int genus, const std::vector<int>& cycle_lengths, FactorKind kind)
{
    const int k = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
    const auto factors = polygon_factors(k, genus);
    const Space h = Space::symplectic(genus);
    for (int len : cycle_lengths)
        if (len < 1) throw std::invalid_argument("cycle_contract: cycle lengths must be positive");

    // next[s]: position whose slot 1 pairs with slot 2 of position s
    std::vector<int> next(static_cast<std::size_t>(k));
    for (int start = 0, c = 0; c < static_cast<int>(cycle_lengths.size()); start += cycle_lengths[c], ++c)
        for (int s = 0; s < cycle_lengths[c]; ++s) next[start + s] = start + (s + 1) % cycle_lengths[c];

    const std::int64_t second_sign = kind == FactorKind::Wedge ? -1 : 1;
    // orientation o of a factor: 0 -> (a, b, +1), 1 -> (b, a, second_sign)
    auto first = [&](const Factor& f, int o) { return o == 0 ? f.a : f.b; };
    auto second = [&](const Factor& f, int o) { return o == 0 ? f.b : f.a; };

    using Mat = std::array<std::array<std::int64_t, 2>, 2>;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0;
    do {
        std::int64_t value = permutation_sign(perm);
        for (int start = 0, c = 0; value != 0 && c < static_cast<int>(cycle_lengths.size());
             start += cycle_lengths[c], ++c) {
            Mat acc{{{1, 0}, {0, 1}}};
            for (int s = start; s < start + cycle_lengths[c]; ++s) {
                const Factor& here = factors[perm[s]];
                const Factor& there = factors[perm[next[s]]];
                Mat step{};
                for (int o = 0; o < 2; ++o)
                    for (int o2 = 0; o2 < 2; ++o2)
                        step[o][o2] = (o == 0 ? 1 : second_sign) * h.pairing_sign(second(here, o), first(there, o2));
                Mat prod{};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) prod[i][j] = acc[i][0] * step[0][j] + acc[i][1] * step[1][j];
                acc = prod;
            }
            value *= acc[0][0] + acc[1][1];
        }
        total += value;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Scalar(static_cast<long>(total));
}

Scalar polygon_contract(int k, int genus, FactorKind kind) { return cycle_contract(genus, {k}, kind); }

Scalar disconnected_contract(int k1, int k2, int genus)
{
    if (k1 < 2 || k2 < 2) throw std::invalid_argument("disconnected_contract: both cycles need length >= 2");
    return cycle_contract(genus, {k1, k2});
}

// --- conjecture probe -------------------------------------------------------

ConjectureProbe conjecture_probe(int n)
{
    const AlgebraHandle alg = AlgebraHandle::der(n);
    ConjectureProbe p{h1_weight(alg, 2)};
    p.prediction = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

    std::vector<SparseVector> images;
    for (const auto& d : basis_der_plain(n, 2)) images.push_back(c13_plain(d).coefficients());
    p.c13_onto = span_dim(images) == p.prediction;

    p.c13_kills_brackets = true;
    const std::vector<Derivation> deg1 = basis_der_plain(n, 1);
    for (std::size_t a = 0; a < deg1.size() && p.c13_kills_brackets; ++a)
        for (std::size_t b = a + 1; b < deg1.size(); ++b)
            if (!c13_plain(bracket_plain(deg1[a], deg1[b])).is_zero()) {
                p.c13_kills_brackets = false;
                break;
            }
    return p;
}

} // namespace symderiv
