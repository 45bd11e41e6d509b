#include "symderiv/commands.hpp"

#include "symderiv/free_lie.hpp"
#include "symderiv/rep_theory.hpp"

#include <cmath>
#include <iostream>
#include <random>

namespace symderiv {

using nlohmann::json;

int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

namespace {

json scalar_json(const Scalar& s)
{
    if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
    return to_fraction_string(s);
}

json tensor_json(const Tensor& t) { return t.to_string(); }

std::size_t lie_part_dim(int genus, int degree)
{
    const int n = 2 * genus;
    return static_cast<std::size_t>(n) * witt_number(n, degree + 1) - witt_number(n, degree + 2);
}

void require(bool ok, const std::string& message)
{
    if (!ok) throw UsageError(message);
}

json h1_json(const H1Result& r)
{
    json reps = json::array();
    for (const auto& t : r.representatives) reps.push_back(tensor_json(t));
    return {{"ambient_dim", r.ambient_dim}, {"image_dim", r.image_dim}, {"quotient_dim", r.quotient_dim},
            {"method", r.method}, {"representatives", reps}};
}

Space sympl(int g) { return Space::symplectic(g); }

Tensor x1_wedge_x2(int g)
{
    const Space h = sympl(g);
    const std::array<Generator, 2> a{h.x(1), h.x(2)}, b{h.x(2), h.x(1)};
    return Tensor::word(h, a) - Tensor::word(h, b);
}

// --- battery pieces shared by verify-paper ---------------------------------

void dimension_checks(Report& rep, int max_genus)
{
    for (int g = 1; g <= max_genus; ++g) {
        for (int k = 1; k <= 3; ++k) {
            Stopwatch sw;
            const std::size_t dim = CyclicOrbitIndex(sympl(g), k + 2).size();
            rep.expect("dim a_" + std::to_string(g) + "(" + std::to_string(k) + ")", "derivations/dimension-count", dim,
                       necklace_count(2 * g, k + 2), sw.ms());
        }
    }
    // a_2(1) is spanned by S^3 H and Lambda^3 H
    Stopwatch sw;
    const Space h = sympl(2);
    SubspaceBasis sym, alt, both;
    for (Generator a = 0; a < 4; ++a)
        for (Generator b = a; b < 4; ++b)
            for (Generator c = b; c < 4; ++c) {
                const std::array<Generator, 3> w{a, b, c};
                sym.insert(symmetrize_embed(h, w).coefficients());
                both.insert(symmetrize_embed(h, w).coefficients());
                if (a < b && b < c) {
                    alt.insert(antisymmetrize(h, w).coefficients());
                    both.insert(antisymmetrize(h, w).coefficients());
                }
            }
    rep.expect("a_2(1) = S^3 H + Lambda^3 H", "derivations/degree-one-split",
               {{"symmetric", sym.dim()}, {"alternating", alt.dim()}, {"total", both.dim()}},
               {{"symmetric", 20}, {"alternating", 4}, {"total", 24}}, sw.ms());
}

void dual_checks(Report& rep)
{
    Stopwatch sw;
    std::size_t checked = 0, failed = 0;
    for (int g = 1; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k) {
            const CyclicOrbitIndex orbits(sympl(g), k + 2);
            for (std::size_t o = 0; o < orbits.size(); ++o) {
                const Tensor t = orbits.orbit_sum(o);
                const Derivation d = from_dual_tensor(t);
                ++checked;
                if (!(dual_tensor(d) == t) || !kills_omega0(d)) ++failed;
            }
        }
    rep.expect("dual tensor round trip on invariant basis, g <= 3, k <= 3", "derivations/dual-correspondence",
               {{"checked", checked}, {"failed", failed}}, {{"checked", checked}, {"failed", 0}}, sw.ms());

    sw.reset();
    std::mt19937_64 rng(0x6b1d3f2a55e07c19ULL);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const Space h = sympl(2);
    const std::vector<Derivation> invariant_basis = basis_a(2, 1);
    std::size_t agree = 0, invariant_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Derivation d = Derivation::zero(h, 1);
        if (trial % 2 == 0) {
            for (const auto& b : invariant_basis) d += Scalar(coeff(rng)) * b;
        } else {
            std::vector<Tensor> images;
            for (Generator a = 0; a < h.dim(); ++a) {
                Tensor img(h, 2);
                for (Index w = 0; w < 16; ++w)
                    if (int c = coeff(rng); c != 0 && rng() % 3 == 0) img += Tensor(h, 2, SparseVector::unit(w, c));
                images.push_back(std::move(img));
            }
            d = Derivation(h, 1, std::move(images));
        }
        const bool kills = kills_omega0(d), inv = is_cyclic_invariant(dual_tensor(d));
        invariant_seen += inv;
        agree += kills == inv;
    }
    rep.expect("D(omega_0) = 0 iff dual tensor invariant, 100 random derivations", "derivations/dual-correspondence",
               {{"agree", agree}, {"invariant", invariant_seen}}, {{"agree", 100}, {"invariant", invariant_seen}},
               sw.ms());
}

void named_vector_checks(Report& rep)
{
    Stopwatch sw;
    const NamedVectorSet set = named_vectors(4);
    const double build_ms = sw.ms();
    for (const auto& id : named_vector_identities(set))
        rep.expect_that(id.name, "invariant-decomposition/" + id.group, id.holds, true, id.holds, build_ms);
}

void decomposition_checks(Report& rep, int genus)
{
    Stopwatch sw;
    const DecompositionSums s = decomposition_sums(genus);
    json dims = json::object();
    for (const auto& [label, d] : s.weyl_dims) dims[label] = d;
    rep.reported("Weyl dimensions, g = " + std::to_string(genus), "invariant-decomposition/weyl-dimensions", dims,
                 sw.ms());
    rep.expect("sum over H^(x)4 of multiplicity * dim", "invariant-decomposition/dimension-sums", s.fourth_power_sum,
               s.fourth_power_dim, sw.ms());
    rep.expect("sum over a_g(2) of multiplicity * dim", "invariant-decomposition/dimension-sums", s.invariant_sum,
               s.invariant_dim, sw.ms());
}

void witness_checks(Report& rep)
{
    constexpr int g = 4;
    Stopwatch sw;
    const NamedVectorSet set = named_vectors(g);
    const Tensor w12 = x1_wedge_x2(g);
    const std::vector<std::pair<std::string, Scalar>> contraction = {
        {"alpha12", 1}, {"alpha13", 0}, {"alpha14", 1}, {"alpha23", 1}, {"alpha24", 2 * g}, {"alpha34", 1},
        {"alpha1", -2 * g}, {"alpha2", 0}};
    for (const auto& [key, factor] : contraction) {
        const Tensor got = c13(set.at(key));
        const Tensor want = factor * w12;
        rep.expect("c13(" + key + ")", "main-theorem/contraction-values", tensor_json(got), tensor_json(want), sw.ms());
    }
    sw.reset();
    const BracketWitnesses w = bracket_witnesses(g);
    const Space h = sympl(g);
    const std::array<Generator, 2> x11{h.x(1), h.x(1)};
    const std::array<Generator, 4> x1111{h.x(1), h.x(1), h.x(1), h.x(1)};
    rep.expect("c11 of the [2] witness bracket", "main-theorem/commutator-witnesses", tensor_json(c11(w.trace_pair_bracket)),
               tensor_json(Scalar(-2) * Tensor::word(h, x11)), sw.ms());
    rep.expect("[4] witness bracket", "main-theorem/commutator-witnesses", tensor_json(w.cube_pair_bracket),
               tensor_json(Scalar(4) * Tensor::word(h, x1111)), sw.ms());
    rep.expect("[21^2] witness bracket expansion", "main-theorem/commutator-witnesses",
               tensor_json(w.wedge_pair_bracket), tensor_json(w.wedge_pair_expected), sw.ms());
    rep.reported("[2] witness bracket against its displayed expansion", "main-theorem/commutator-witnesses",
                 {{"computed", tensor_json(w.trace_pair_bracket)},
                  {"matches_display", w.trace_pair_bracket == w.trace_pair_expected},
                  {"matches_negated_display", w.trace_pair_bracket == -w.trace_pair_expected},
                  {"c11_reversed_order", tensor_json(c11(w.trace_pair_reversed))}},
                 sw.ms());
    rep.reported("displayed [21^2] expansion", "main-theorem/commutator-witnesses",
                 {{"cyclic_invariant", is_cyclic_invariant(w.wedge_pair_expected)},
                  {"difference", tensor_json(w.wedge_pair_bracket - w.wedge_pair_expected)}},
                 sw.ms());
    const auto weight = weight_of(w.wedge_pair_bracket);
    const bool hw = weight && *weight == IrrepLabel({2, 1, 1}).weight(g) && is_highest_weight(w.wedge_pair_bracket);
    rep.expect_that("[21^2] witness is a highest weight vector", "main-theorem/commutator-witnesses", hw, true, hw,
                    sw.ms());
}

json sequence_json(const ExactSequenceReport& r)
{
    return {{"pairs_checked", r.pairs_checked}, {"c13_nonzero", r.c13_nonzero}, {"c13_rank", r.c13_rank},
            {"ambient_dim", r.ambient_dim},     {"image_dim", r.image_dim},     {"certified", r.certified},
            {"method", r.method}};
}

void exact_sequence_checks(Report& rep, int genus, const CommandContext& ctx, bool assert_result)
{
    Stopwatch sw;
    ExactSequenceOptions opts;
    opts.threads = ctx.threads;
    opts.cache = ctx.cache;
    const ExactSequenceReport r = verify_exact_sequence(genus, opts);
    const double ms = sw.ms();
    const std::string gs = std::to_string(genus);
    const std::size_t target = r.expected_c13_rank;
    if (assert_result) {
        rep.expect("c13 kills brackets of a_" + gs + "(1)", "main-theorem/exactness", r.c13_nonzero, 0, ms);
        rep.expect("c13 onto Lambda^2 H / Q omega_0, g = " + gs, "main-theorem/exactness", r.c13_rank, target, ms);
        rep.expect_that("bracket image of a_" + gs + "(2)", "main-theorem/exactness", sequence_json(r),
                        {{"image_dim", r.ambient_dim - target}, {"certified", true}},
                        r.image_dim == r.ambient_dim - target && r.certified, ms);
        rep.expect("H_1 weight 2 of a_" + gs, "main-theorem/exactness", r.ambient_dim - r.image_dim, target, ms);
    } else {
        json computed = sequence_json(r);
        computed["quotient_dim"] = r.ambient_dim - r.image_dim;
        computed["expected_if_theorem_extends"] = target;
        rep.reported("weight 2 abelianization of a_" + gs, "main-theorem/low-genus", computed, ms);
    }
}

void plain_checks(Report& rep)
{
    const AlgebraHandle der2 = AlgebraHandle::der(2);
    Stopwatch sw;
    const H1Result h = h1_weight(der2, 2);
    std::vector<SparseVector> images;
    for (const auto& t : h.representatives) images.push_back(c13_plain(element_derivation(der2, t)).coefficients());
    const bool bijective = images.size() == 4 && span_dim(images) == 4;
    rep.expect("H_1 weight 2 of Der(T(H_2))", "tensor-algebra/abelianization", h.quotient_dim, 4, sw.ms());
    rep.expect_that("quotient representatives map to a basis of H_2^(x)2", "tensor-algebra/abelianization", bijective,
                    true, bijective, sw.ms());
    BracketOptions first;
    first.pairs = PairSelection::DegreeOneLeft;
    for (int k : {2, 3}) {
        sw.reset();
        const std::size_t dim = bracket_image(der2, k + 1, first).dim();
        rep.expect("[Der(1), Der(" + std::to_string(k) + ")] spans Der(" + std::to_string(k + 1) + ")",
                   "tensor-algebra/abelianization", dim, word_count(2, k + 3), sw.ms());
        rep.expect("H_1 weight " + std::to_string(k + 1) + " of Der(T(H_2))", "tensor-algebra/abelianization",
                   word_count(2, k + 3) - dim, 0, sw.ms());
    }
    for (int n : {2, 3}) {
        sw.reset();
        const auto deg1 = basis_der_plain(n, 1);
        std::size_t pairs = 0, nonzero = 0;
        for (std::size_t a = 0; a < deg1.size(); ++a)
            for (std::size_t b = a + 1; b < deg1.size(); ++b, ++pairs)
                nonzero += !c13_plain(bracket_plain(deg1[a], deg1[b])).is_zero();
        rep.expect("c13 kills brackets of Der(T(H_" + std::to_string(n) + "))(1)", "tensor-algebra/commutator-contraction",
                   {{"pairs", pairs}, {"nonzero", nonzero}}, {{"pairs", deg1.size() * (deg1.size() - 1) / 2}, {"nonzero", 0}},
                   sw.ms());
    }
}

void polygon_checks(Report& rep, int k_min, int k_max, FactorKind kind)
{
    const bool wedge = kind == FactorKind::Wedge;
    for (int k = k_min; k <= k_max; ++k) {
        Stopwatch sw;
        const Scalar v = polygon_contract(k, k, kind);
        const bool nonzero_expected = wedge ? (k % 4 == 1) : (k % 4 == 3);
        const std::string name = std::string(wedge ? "polygon" : "symmetric polygon") + " k = " + std::to_string(k);
        const char* anchor = wedge ? "polygon/parity" : "polygon/symmetric-parity";
        if (nonzero_expected)
            rep.expect_that(name, anchor, scalar_json(v), "nonzero", v != 0, sw.ms());
        else
            rep.expect(name, anchor, scalar_json(v), 0, sw.ms());
    }
}

void disconnected_checks(Report& rep)
{
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        Stopwatch sw;
        const Scalar v = disconnected_contract(a, b, a + b);
        rep.expect("disconnected (" + std::to_string(a) + "," + std::to_string(b) + ")", "polygon/disconnected",
                   scalar_json(v), 0, sw.ms());
    }
}

void trace_checks(Report& rep)
{
    for (int n : {2, 3}) {
        Stopwatch sw;
        std::size_t agree = 0, total = 0;
        for (const auto& d : basis_der_lie(Space::plain(n), 2)) {
            ++total;
            agree += c13_plain(d) == Scalar(-2) * trace_k(d);
        }
        rep.expect("c13 = -2 trace(2) on Der(L(H_" + std::to_string(n) + "))(2)", "trace/relation",
                   {{"agree", agree}, {"basis", total}}, {{"agree", total}, {"basis", total}}, sw.ms());
    }
    Stopwatch sw;
    const Space h4 = Space::plain(4);
    const auto d1 = basis_der_lie(h4, 1), d2 = basis_der_lie(h4, 2);
    std::size_t bad2 = 0, bad3 = 0, pairs2 = 0, pairs3 = 0;
    for (std::size_t a = 0; a < d1.size(); ++a) {
        for (std::size_t b = a + 1; b < d1.size(); ++b, ++pairs2) bad2 += !trace_k(bracket(d1[a], d1[b])).is_zero();
        for (const auto& e : d2) {
            ++pairs3;
            bad3 += !trace_k(bracket(d1[a], e)).is_zero();
        }
    }
    rep.expect("trace(2) vanishes on [Der(1), Der(1)], n = 4", "trace/commutator-vanishing",
               {{"pairs", pairs2}, {"nonzero", bad2}}, {{"pairs", pairs2}, {"nonzero", 0}}, sw.ms());
    rep.expect("trace(3) vanishes on [Der(1), Der(2)], n = 4", "trace/commutator-vanishing",
               {{"pairs", pairs3}, {"nonzero", bad3}}, {{"pairs", pairs3}, {"nonzero", 0}}, sw.ms());
    sw.reset();
    std::vector<SparseVector> images;
    for (const auto& d : basis_l(2, 3)) images.push_back(trace_k(d).coefficients());
    rep.expect("trace(3) on l_2(3) onto S^3 H", "trace/odd-symmetric-image", span_dim(images), 20, sw.ms());
}

void free_lie_checks(Report& rep)
{
    Stopwatch sw;
    std::size_t mismatches = 0;
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 5; ++d) mismatches += lyndon_words(n, d).size() != witt_number(n, d);
    rep.expect("Lyndon word counts equal Witt numbers, n <= 8, d <= 5", "free-lie/witt", mismatches, 0, sw.ms());

    sw.reset();
    rep.expect("dim l_2(1)", "free-lie/derivation-dims", basis_l(2, 1).size(), 4, sw.ms());
    sw.reset();
    const std::size_t l32 = basis_l(3, 2).size();
    const std::uint64_t split = 1 + weyl_dim(IrrepLabel({1, 1}), 3) + weyl_dim(IrrepLabel({2, 2}), 3);
    rep.expect("dim l_3(2) = 1 + dim[1^2] + dim[2^2]", "free-lie/derivation-dims", {{"dim", l32}, {"split", split}},
               {{"dim", 105}, {"split", 105}}, sw.ms());

    sw.reset();
    const HainResult h3 = hain_surjectivity(3);
    rep.expect_that("Lambda^2 l_3(1) -> l_3(2) onto", "free-lie/hain-surjectivity",
                    {{"image_dim", h3.image_dim}, {"target_dim", h3.target_dim}, {"closed", h3.closed}},
                    {{"image_dim", 105}, {"target_dim", 105}, {"closed", true}}, h3.surjective() && h3.target_dim == 105,
                    sw.ms());
    sw.reset();
    const HainResult h2 = hain_surjectivity(2);
    rep.reported("Lambda^2 l_2(1) -> l_2(2)", "free-lie/hain-surjectivity",
                 {{"image_dim", h2.image_dim}, {"target_dim", h2.target_dim}, {"closed", h2.closed}}, sw.ms());
}

void conjecture_checks(Report& rep, int n)
{
    Stopwatch sw;
    const ConjectureProbe p = conjecture_probe(n);
    const double ms = sw.ms();
    const std::string ns = std::to_string(n);
    rep.expect_that("c13 onto H_" + ns + "^(x)2", "tensor-algebra/conjecture", p.c13_onto, true, p.c13_onto, ms);
    rep.expect_that("c13 kills brackets, n = " + ns, "tensor-algebra/conjecture", p.c13_kills_brackets, true,
                    p.c13_kills_brackets, ms);
    json computed = h1_json(p.h1);
    computed["prediction"] = p.prediction;
    if (n == 2)
        rep.expect_that("H_1 weight 2 of Der(T(H_2))", "tensor-algebra/conjecture", computed, p.prediction,
                        p.h1.quotient_dim == p.prediction, ms);
    else
        rep.reported("H_1 weight 2 of Der(T(H_" + ns + "))", "tensor-algebra/conjecture", computed, ms);
}

void finish(Report& rep, const CommandContext& ctx)
{
    if (ctx.cache) rep.set_cache_counts(ctx.cache->hits(), ctx.cache->misses());
}

} // namespace

// --- commands ---------------------------------------------------------------

Report cmd_dims(const DimsParams& p, const CommandContext& ctx)
{
    require(p.genus.has_value() != p.plain.has_value(), "dims: give exactly one of --genus or --plain");
    require(p.min_degree >= 1 && p.max_degree >= p.min_degree, "dims: need 1 <= min degree <= max degree");
    json params = {{"min_degree", p.min_degree}, {"max_degree", p.max_degree}};
    if (p.genus) {
        require(*p.genus >= 1, "dims: genus >= 1 required");
        params["genus"] = *p.genus;
    } else {
        require(*p.plain >= 2, "dims: plain dimension >= 2 required");
        params["plain"] = *p.plain;
    }
    Report rep("dims", params);
    for (int k = p.min_degree; k <= p.max_degree; ++k) {
        const std::string ks = std::to_string(k);
        if (p.genus) {
            const int g = *p.genus, n = 2 * g;
            require(std::pow(n, k + 2) <= 2e7, "dims: degree too large for an orbit enumeration");
            Stopwatch sw;
            rep.expect("dim a_" + std::to_string(g) + "(" + ks + ")", "derivations/dimension-count",
                       CyclicOrbitIndex(sympl(g), k + 2).size(), necklace_count(n, k + 2), sw.ms());
            sw.reset();
            const LieDimension ld = lie_derivation_dimension(g, k);
            rep.expect_that("dim l_" + std::to_string(g) + "(" + ks + ")", "free-lie/derivation-dims",
                            {{"dim", ld.dim()}, {"bracket_rank", ld.rank}}, lie_part_dim(g, k), ld.certified, sw.ms());
        } else {
            const int n = *p.plain;
            require(std::pow(n, k + 2) <= 2e7, "dims: degree too large");
            Stopwatch sw;
            const std::size_t count = degree_basis(AlgebraHandle::der(n), k).size();
            rep.expect("dim Der(T(H_" + std::to_string(n) + "))(" + ks + ")", "tensor-algebra/dimension-count", count,
                       word_count(n, k + 2), sw.ms());
        }
    }
    finish(rep, ctx);
    return rep;
}

Report cmd_abelianize(const AlgebraHandle& alg, int weight, bool allow_heavy, const CommandContext& ctx)
{
    require(weight >= 1, "abelianize: weight >= 1 required");
    Report rep("abelianize", {{"algebra", alg.name()}, {"weight", weight}});
    const int par = alg.parameter;
    switch (alg.kind) {
    case AlgebraKind::SymplecticAssociative:
        require(par >= 1, "abelianize: genus >= 1 required");
        if (weight >= 3) {
            require(allow_heavy, "abelianize: weight >= 3 on a_g is expensive and unproven territory; pass --heavy");
            std::cerr << "warning: weight " << weight << " abelianization of a_" << par
                      << " enumerates every bracket pair and may take very long\n";
        }
        if (weight == 2) require(par >= 2, "abelianize: weight 2 needs genus >= 2");
        break;
    case AlgebraKind::SymplecticLie:
        require(weight <= 2 && par <= 3, "abelianize: l_g is supported for weight <= 2 and genus <= 3");
        break;
    case AlgebraKind::PlainAssociative:
        require(std::pow(par, weight + 2) <= 5000, "abelianize: Der(T(H_n)) weight too large");
        break;
    }
    Stopwatch sw;
    BracketOptions opts;
    opts.threads = ctx.threads;
    const H1Result h = h1_weight(alg, weight, opts);
    const double ms = sw.ms();
    const std::string name = "H_1 weight " + std::to_string(weight) + " of " + alg.name();
    json computed = h1_json(h);
    if (weight == 1) {
        rep.expect(name, "derivations/dimension-count", h.quotient_dim, h.ambient_dim, ms);
    } else if (alg.kind == AlgebraKind::SymplecticAssociative && weight == 2) {
        const std::size_t target = static_cast<std::size_t>(2 * par * par - par - 1);
        if (par >= 4) {
            rep.expect(name, "main-theorem/exactness", h.quotient_dim, target, ms);
        } else {
            computed["expected_if_theorem_extends"] = target;
            rep.reported(name, "main-theorem/low-genus", computed, ms);
            finish(rep, ctx);
            return rep;
        }
    } else if (alg.kind == AlgebraKind::PlainAssociative && par == 2 && weight <= 4) {
        rep.expect(name, "tensor-algebra/abelianization", h.quotient_dim, weight == 2 ? 4 : 0, ms);
    } else {
        if (alg.kind == AlgebraKind::PlainAssociative && weight == 2)
            computed["prediction"] = static_cast<std::size_t>(par) * static_cast<std::size_t>(par);
        rep.reported(name, "tensor-algebra/abelianization", computed, ms);
        finish(rep, ctx);
        return rep;
    }
    rep.reported(name + " (details)", "tensor-algebra/abelianization", computed, 0);
    finish(rep, ctx);
    return rep;
}

Report cmd_verify_paper(const CommandContext& ctx)
{
    const bool full = ctx.tier == Tier::Full;
    Report rep("verify-paper", {{"tier", full ? "full" : "fast"}});
    dimension_checks(rep, full ? 4 : 3);
    dual_checks(rep);
    named_vector_checks(rep);
    decomposition_checks(rep, 4);
    witness_checks(rep);
    for (int g : {2, 3}) exact_sequence_checks(rep, g, ctx, false);
    if (full) exact_sequence_checks(rep, 4, ctx, true);
    plain_checks(rep);
    polygon_checks(rep, 2, full ? 9 : 8, FactorKind::Wedge);
    disconnected_checks(rep);
    polygon_checks(rep, 2, 7, FactorKind::Symmetric);
    trace_checks(rep);
    free_lie_checks(rep);
    conjecture_checks(rep, 2);
    conjecture_checks(rep, 3);
    finish(rep, ctx);
    return rep;
}

Report cmd_polygon(int k_min, int k_max, FactorKind kind, const CommandContext& ctx)
{
    require(k_min >= 2 && k_max >= k_min, "polygon: need 2 <= k_min <= k_max");
    require(k_max <= 10, "polygon: k <= 10 supported (the sum runs over all k! permutations)");
    Report rep("polygon", {{"k_min", k_min}, {"k_max", k_max}, {"factors", kind == FactorKind::Wedge ? "wedge" : "symmetric"}});
    polygon_checks(rep, k_min, k_max, kind);
    finish(rep, ctx);
    return rep;
}

Report cmd_conjecture(int n, const CommandContext& ctx)
{
    require(n >= 2 && n <= 4, "conjecture: 2 <= n <= 4 supported");
    Report rep("conjecture", {{"n", n}});
    conjecture_checks(rep, n);
    finish(rep, ctx);
    return rep;
}

Report cmd_decompose(int genus, const CommandContext& ctx)
{
    require(genus >= 4, "decompose: genus >= 4 required");
    Report rep("decompose", {{"genus", genus}});
    decomposition_checks(rep, genus);
    finish(rep, ctx);
    return rep;
}

} // namespace symderiv
