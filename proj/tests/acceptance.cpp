// End-to-end acceptance run: one PASS/FAIL line per criterion. Reference
// values come from the brute-force routines in oracles.hpp or are literal
// constants; library results are never compared with themselves.

#include "oracles.hpp"

#include "symderiv/cache.hpp"
#include "symderiv/commands.hpp"
#include "symderiv/derivation.hpp"
#include "symderiv/free_lie.hpp"
#include "symderiv/homology.hpp"
#include "symderiv/modular.hpp"
#include "symderiv/report.hpp"
#include "symderiv/rep_theory.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace symderiv;
using oracle::Q;
using oracle::Terms;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what)
    {
        if (got == want) return;
        std::ostringstream os;
        os << what << ": got " << got << ", expected " << want;
        failures.push_back(os.str());
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string show(const Terms& t, const Space& h)
{
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : t) {
        if (!out.empty()) out += " ";
        out += (c > 0 ? "+" : "") + c.get_str() + "*";
        for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "." : "") + h.label(w[i]);
    }
    return out;
}

Tensor word(const Space& h, std::initializer_list<Generator> letters)
{
    const std::vector<Generator> w(letters);
    return Tensor::word(h, w);
}

Tensor from_terms(const Space& h, int degree, const Terms& t)
{
    Tensor out(h, degree);
    for (const auto& [w, c] : t) out += Tensor::word(h, w, c);
    return out;
}

int total_failures = 0;

void run(int id, const std::string& title, double budget_ms, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    Stopwatch sw;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = sw.ms();
    if (ms > budget_ms) out.failures.push_back("runtime " + std::to_string(ms) + " ms over budget");
    const bool pass = out.failures.empty();
    total_failures += !pass;
    std::printf("%s criterion %d: %s (%.0f ms, budget %.0f ms)\n", pass ? "PASS" : "FAIL", id, title.c_str(), ms,
                budget_ms);
    for (const auto& f : out.failures) std::printf("    failed: %s\n", f.c_str());
    for (const auto& n : out.notes) std::printf("    note: %s\n", n.c_str());
    std::fflush(stdout);
}

// --- criterion bodies --------------------------------------------------------

void dimensions(Outcome& out)
{
    for (int g = 1; g <= 4; ++g)
        for (int k = 1; k <= 3; ++k) {
            const std::size_t dim = CyclicOrbitIndex(Space::symplectic(g), k + 2).size();
            const std::string tag = "dim a_" + std::to_string(g) + "(" + std::to_string(k) + ")";
            out.equal(dim, oracle::necklaces(2 * g, k + 2), tag + " vs orbit count");
            out.equal(dim, necklace_count(2 * g, k + 2), tag + " vs closed formula");
        }
    out.equal(CyclicOrbitIndex(Space::symplectic(2), 3).size(), 24u, "dim a_2(1)");
    out.equal(CyclicOrbitIndex(Space::symplectic(2), 4).size(), 70u, "dim a_2(2)");
    out.equal(CyclicOrbitIndex(Space::symplectic(3), 4).size(), 336u, "dim a_3(2)");
    out.equal(CyclicOrbitIndex(Space::symplectic(4), 4).size(), 1044u, "dim a_4(2)");

    // a_2(1) = S^3 H + Lambda^3 H, both inside the invariant part
    std::vector<Terms> sym, alt, both;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b)
            for (int c = b; c < 4; ++c) {
                sym.push_back(oracle::symmetrized({a, b, c}));
                if (a < b && b < c) alt.push_back(oracle::antisymmetrized({a, b, c}));
            }
    both = sym;
    both.insert(both.end(), alt.begin(), alt.end());
    bool invariant = true;
    for (const auto& t : both) invariant = invariant && oracle::cyclic_invariant(t);
    out.equal(oracle::rank_of(sym), 20u, "rank S^3 H");
    out.equal(oracle::rank_of(alt), 4u, "rank Lambda^3 H");
    out.equal(oracle::rank_of(both), 24u, "rank S^3 H + Lambda^3 H");
    out.check(invariant, "symmetric and alternating tensors are cyclic-invariant");
    std::size_t inside = 0;
    const SubspaceBasis inv = invariant_subspace(Space::symplectic(2), 3);
    for (const auto& t : both) inside += inv.contains(from_terms(Space::symplectic(2), 3, t).coefficients());
    out.equal(inside, both.size(), "split lies in the library invariant subspace");
}

void dual_round_trip(Outcome& out)
{
    std::size_t checked = 0;
    for (int g = 1; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k) {
            const CyclicOrbitIndex orbits(Space::symplectic(g), k + 2);
            for (std::size_t o = 0; o < orbits.size(); ++o) {
                const Tensor t = orbits.orbit_sum(o);
                ++checked;
                if (!(dual_tensor(from_dual_tensor(t)) == t))
                    out.check(false, "round trip fails for orbit " + std::to_string(o) + " g=" + std::to_string(g));
            }
        }
    out.note("round trip checked on " + std::to_string(checked) + " invariant basis vectors");

    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const Space h = Space::symplectic(2);
    const std::vector<Derivation> basis = basis_a(2, 1);
    std::size_t invariant = 0, agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Derivation d = Derivation::zero(h, 1);
        if (trial % 2 == 0) {
            for (const auto& b : basis) d += Scalar(coeff(rng)) * b;
        } else {
            std::vector<Tensor> images;
            for (Generator a = 0; a < h.dim(); ++a) {
                Tensor img(h, 2);
                for (Index w = 0; w < 16; ++w)
                    if (rng() % 4 == 0) img += Tensor(h, 2, SparseVector::unit(w, coeff(rng)));
                images.push_back(std::move(img));
            }
            d = Derivation(h, 1, std::move(images));
        }
        const bool kills = apply_derivation(d, omega0(h)).is_zero();
        const bool inv = oracle::cyclic_invariant(oracle::terms_of(dual_tensor(d)));
        invariant += inv;
        agree += kills == inv && kills_omega0(d) == kills;
    }
    out.equal(agree, 100u, "D(omega_0) = 0 iff invariant dual tensor, agreeing trials");
    out.check(invariant > 0 && invariant < 100, "random trials exercise both directions");
}

void invariant_battery(Outcome& out)
{
    const NamedVectorSet set = named_vectors(4);
    std::size_t cyclic = 0;
    for (const auto& id : named_vector_identities(set)) {
        cyclic += id.group == "cyclic-action";
        out.check(id.holds, id.group + ": " + id.name);
    }
    out.equal(cyclic, 15u, "number of cyclic-action identities");

    const std::vector<std::pair<std::string, std::uint64_t>> weyl = {
        {"[1^2]", 27}, {"[2]", 36}, {"[2^2]", 308}, {"[31]", 594}, {"[21^2]", 315}, {"[1^4]", 42}, {"[4]", 330}};
    for (const auto& [label, dim] : weyl) {
        const IrrepLabel l = IrrepLabel::parse(label);
        out.equal(weyl_dim(l, 4), dim, "Weyl dim " + label);
        out.equal(oracle::weyl_dim_c(l.parts(), 4), dim, "oracle Weyl dim " + label);
    }
    std::uint64_t full = 0, inv = 0;
    for (const auto& m : fourth_power_decomposition()) full += m.count * oracle::weyl_dim_c(m.label.parts(), 4);
    for (const auto& m : invariant_fourth_power_decomposition()) inv += m.count * oracle::weyl_dim_c(m.label.parts(), 4);
    out.equal(full, 4096u, "H^(x)4 decomposition sum");
    out.equal(inv, 1044u, "invariant decomposition sum");
    const DecompositionSums s = decomposition_sums(4);
    out.check(s.holds() && s.fourth_power_sum == 4096 && s.invariant_sum == 1044, "library decomposition sums");
}

void witnesses(Outcome& out)
{
    constexpr int g = 4;
    const Space h = Space::symplectic(g);
    const NamedVectorSet set = named_vectors(g);
    const Generator x1 = h.x(1), x2 = h.x(2), x3 = h.x(3), y1 = h.y(1), y2 = h.y(2), y3 = h.y(3);
    const Terms w12{{{x1, x2}, 1}, {{x2, x1}, -1}};
    const std::vector<std::pair<std::string, int>> factors = {{"alpha12", 1}, {"alpha13", 0}, {"alpha24", 2 * g},
                                                              {"alpha1", -2 * g}, {"alpha2", 0}};
    for (const auto& [key, f] : factors) {
        const Terms got = oracle::contract(g, oracle::terms_of(set.at(key)), 1, 3);
        const Terms want = oracle::scaled(w12, f);
        out.check(got == want, "c13(" + key + ") = " + show(got, h) + ", expected " + show(want, h));
        out.check(oracle::terms_of(c13(set.at(key))) == got, "library c13(" + key + ") agrees with oracle");
    }

    const AlgebraHandle alg = AlgebraHandle::a(g);
    const Terms xi1 = oracle::antisymmetrized({x2, y2, x3}), eta1 = oracle::symmetrized({x1, x1, y3});
    const Terms xi2 = oracle::antisymmetrized({x1, x2, x3}), eta2 = oracle::symmetrized({x1, x1, y1});
    const Terms xi3{{{x1, x1, x1}, 1}};
    auto lib_bracket = [&](const Terms& a, const Terms& b) {
        return oracle::terms_of(bracket_element(alg, from_terms(h, 3, a), from_terms(h, 3, b)));
    };
    const Terms b1 = oracle::four_term_bracket(g, xi1, eta1);
    const Terms b2 = oracle::four_term_bracket(g, xi2, eta2);
    const Terms b3 = oracle::four_term_bracket(g, xi3, eta2);
    out.check(lib_bracket(xi1, eta1) == b1 && lib_bracket(xi2, eta2) == b2 && lib_bracket(xi3, eta2) == b3,
              "library bracket agrees with the four-term formula on the witnesses");

    const Terms c11 = oracle::contract(g, b1, 1, 2);
    const Terms want11{{{x1, x1}, -2}};
    out.check(c11 == want11, "c11(dual[xi1,eta1]) = " + show(c11, h) + ", expected " + show(want11, h));
    if (c11 != want11)
        out.note("reversed order c11(dual[eta1,xi1]) = " + show(oracle::contract(g, oracle::four_term_bracket(g, eta1, xi1), 1, 2), h));

    const Terms want3{{{x1, x1, x1, x1}, 4}};
    out.check(b3 == want3, "dual[xi3,eta2] = " + show(b3, h) + ", expected 4*x1.x1.x1.x1");

    Terms displayed;
    for (const auto& [w, c] : std::vector<std::pair<oracle::Letters, int>>{
             {{x1, x1, x2, x3}, 1}, {{x1, x1, x3, x2}, -1}, {{x1, x2, x3, x1}, -1}, {{x1, x3, x2, x1}, 1},
             {{x2, x1, x1, x3}, -1}, {{x2, x3, x1, x1}, 1}, {{x3, x1, x1, x2}, 1}, {{x3, x2, x1, x1}, -1}})
        oracle::add(displayed, w, c);
    out.check(b2 == displayed, "dual[xi2,eta2] matches the displayed expansion");
    if (b2 != displayed) {
        out.note("displayed expansion cyclic-invariant: " + std::string(oracle::cyclic_invariant(displayed) ? "yes" : "no"));
        out.note("computed minus displayed = " + show(oracle::plus(b2, oracle::scaled(displayed, -1)), h));
    }
    const Tensor t2 = from_terms(h, 4, b2);
    const auto wt = weight_of(t2);
    out.check(wt && *wt == std::vector<int>{2, 1, 1, 0} && is_highest_weight(t2), "dual[xi2,eta2] is a [21^2] highest weight vector");

    for (const Terms* b : {&b1, &b2, &b3})
        out.check(oracle::contract(g, *b, 1, 3).empty(), "c13 kills a witness bracket");
}

void exactness_g4(Outcome& out)
{
    const auto dir = std::filesystem::temp_directory_path() / ("symderiv-acceptance-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    Cache cache(dir);
    ExactSequenceOptions opts;
    opts.cache = &cache;
    Stopwatch cold_sw;
    const ExactSequenceReport cold = verify_exact_sequence(4, opts);
    const double cold_ms = cold_sw.ms();
    out.equal(cold.c13_nonzero, 0u, "pairs with nonzero c13 o bracket");
    out.check(cold.pairs_checked >= 1000, "at least 1000 bracket pairs checked");
    out.equal(cold.c13_rank, 27u, "rank of c13 onto Lambda^2 H / Q omega_0");
    out.equal(cold.ambient_dim, 1044u, "dim a_4(2)");
    out.equal(cold.image_dim, 1017u, "bracket image dimension");
    out.check(cold.certified && cold.exact(), "image certified and sequence exact");
    out.note("cold: " + std::to_string(cold.pairs_checked) + " pairs, " + cold.method + ", " +
             std::to_string(static_cast<long>(cold_ms)) + " ms");

    // random pairs only, independent of the full pass
    ExactSequenceOptions sampled;
    sampled.random_pairs = 1000;
    const ExactSequenceReport r = verify_exact_sequence(4, sampled);
    out.check(r.c13_nonzero == 0 && r.pairs_checked >= 1000 && r.image_dim == 1017, "sampled run agrees");

    Stopwatch warm_sw;
    const ExactSequenceReport warm = verify_exact_sequence(4, opts);
    const double warm_ms = warm_sw.ms();
    out.check(warm.cache_hit, "second run hits the cache");
    out.check(warm.image_dim == cold.image_dim && warm.c13_rank == cold.c13_rank && warm.certified, "warm run reproduces");
    out.check(cold_ms >= 5 * warm_ms, "warm cache at least 5x faster (" + std::to_string(cold_ms) + " vs " +
                                          std::to_string(warm_ms) + " ms)");
    std::filesystem::remove_all(dir);

    for (int g : {2, 3}) {
        const ExactSequenceReport low = verify_exact_sequence(g);
        out.note("g = " + std::to_string(g) + ": weight 2 quotient " + std::to_string(low.ambient_dim - low.image_dim) +
                 " (" + std::to_string(2 * g * g - g - 1) + " if the statement extends), c13 kills brackets: " +
                 (low.c13_vanishes() ? "yes" : "no"));
    }
}

Terms c13_plain_oracle(const Derivation& d)
{
    Terms out;
    for (Generator j = 0; j < d.space().dim(); ++j)
        for (const auto& [w, c] : oracle::terms_of(d.image(j)))
            if (w[1] == j) oracle::add(out, {w[0], w[2]}, c);
    return out;
}

void plain_abelianization(Outcome& out)
{
    const AlgebraHandle der2 = AlgebraHandle::der(2);
    const H1Result h = h1_weight(der2, 2);
    out.equal(h.quotient_dim, 4u, "H_1 weight 2 of Der(T(H_2))");
    out.equal(h.ambient_dim, 16u, "dim Der(T(H_2))(2)");
    out.equal(h.image_dim + h.quotient_dim, h.ambient_dim, "ambient = image + quotient");
    std::vector<Terms> images;
    for (const auto& t : h.representatives) images.push_back(c13_plain_oracle(element_derivation(der2, t)));
    out.check(images.size() == 4 && oracle::rank_of(images) == 4, "representatives map to a basis of H_2^(x)2");

    BracketOptions first;
    first.pairs = PairSelection::DegreeOneLeft;
    out.equal(bracket_image(der2, 3, first).dim(), 32u, "[Der(1), Der(2)] span");
    out.equal(bracket_image(der2, 4, first).dim(), 64u, "[Der(1), Der(3)] span");
    out.equal(h1_weight(der2, 3).quotient_dim, 0u, "H_1 weight 3");
    out.equal(h1_weight(der2, 4).quotient_dim, 0u, "H_1 weight 4");
}

void plain_contraction(Outcome& out)
{
    for (auto [n, expected] : {std::pair{2, 28u}, std::pair{3, 351u}}) {
        const auto deg1 = basis_der_plain(n, 1);
        std::size_t pairs = 0, nonzero = 0;
        for (std::size_t a = 0; a < deg1.size(); ++a)
            for (std::size_t b = a + 1; b < deg1.size(); ++b, ++pairs) {
                const Derivation br = bracket_plain(deg1[a], deg1[b]);
                const Terms c = c13_plain_oracle(br);
                nonzero += !c.empty();
                out.check(oracle::terms_of(c13_plain(br)) == c, "library c13 agrees with oracle");
            }
        out.equal(pairs, expected, "pairs for n = " + std::to_string(n));
        out.equal(nonzero, 0u, "brackets with nonzero c13, n = " + std::to_string(n));
    }
}

void polygons(Outcome& out)
{
    for (int k = 2; k <= 7; ++k) {
        for (FactorKind kind : {FactorKind::Wedge, FactorKind::Symmetric}) {
            const bool sym = kind == FactorKind::Symmetric;
            const Scalar lib = polygon_contract(k, k, kind);
            out.check(lib == oracle::polygon(k, sym), std::string(sym ? "symmetric " : "") + "polygon k = " +
                                                          std::to_string(k) + " disagrees with brute-force expansion");
        }
    }
    std::string values;
    for (int k = 2; k <= 9; ++k) {
        const Scalar v = polygon_contract(k, k);
        values += " k=" + std::to_string(k) + ":" + v.get_str();
        if (k == 5 || k == 9)
            out.check(v != 0, "polygon k = " + std::to_string(k) + " nonzero");
        else
            out.check(v == 0, "polygon k = " + std::to_string(k) + " vanishes");
    }
    out.note("wedge values" + values);
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}})
        out.check(disconnected_contract(a, b, a + b) == 0,
                  "disconnected (" + std::to_string(a) + "," + std::to_string(b) + ") vanishes");
    for (int k = 2; k <= 7; ++k) {
        const Scalar v = polygon_contract(k, k, FactorKind::Symmetric);
        if (k == 3 || k == 7)
            out.check(v != 0, "symmetric polygon k = " + std::to_string(k) + " nonzero");
        else
            out.check(v == 0, "symmetric polygon k = " + std::to_string(k) + " vanishes");
    }
}

// contract the dual index with slot 1 of the image, then average over S_k
Terms trace_oracle(const Derivation& d)
{
    Terms contracted;
    for (Generator j = 0; j < d.space().dim(); ++j)
        for (const auto& [w, c] : oracle::terms_of(d.image(j)))
            if (w[0] == j) oracle::add(contracted, oracle::Letters(w.begin() + 1, w.end()), c);
    Terms out;
    for (const auto& [w, c] : contracted) {
        std::vector<int> p(w.size());
        std::iota(p.begin(), p.end(), 0);
        Q fact = 1;
        for (std::size_t i = 2; i <= w.size(); ++i) fact *= static_cast<unsigned long>(i);
        do {
            oracle::Letters v;
            for (int i : p) v.push_back(w[i]);
            oracle::add(out, v, c / fact);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

void trace_relation(Outcome& out)
{
    for (int n : {2, 3}) {
        std::size_t agree = 0, total = 0;
        for (const auto& d : basis_der_lie(Space::plain(n), 2)) {
            ++total;
            const Terms tr = trace_oracle(d);
            agree += c13_plain_oracle(d) == oracle::scaled(tr, -2) && oracle::terms_of(trace_k(d)) == tr;
        }
        out.equal(agree, total, "c13 = -2 trace(2), n = " + std::to_string(n));
    }
    const Space h4 = Space::plain(4);
    const auto d1 = basis_der_lie(h4, 1), d2 = basis_der_lie(h4, 2);
    std::size_t bad2 = 0, bad3 = 0;
    for (std::size_t a = 0; a < d1.size(); ++a) {
        for (std::size_t b = a + 1; b < d1.size(); ++b) bad2 += !trace_oracle(bracket(d1[a], d1[b])).empty();
        for (const auto& e : d2) bad3 += !trace_oracle(bracket(d1[a], e)).empty();
    }
    out.equal(bad2, 0u, "trace(2) on [Der(1), Der(1)], n = 4");
    out.equal(bad3, 0u, "trace(3) on [Der(1), Der(2)], n = 4");
}

void free_lie(Outcome& out)
{
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 5; ++d) {
            const std::uint64_t brute = oracle::lyndon_count(n, d);
            out.equal(witt_number(n, d), brute, "Witt(" + std::to_string(n) + "," + std::to_string(d) + ")");
            out.equal(lyndon_words(n, d).size(), brute, "Lyndon words (" + std::to_string(n) + "," + std::to_string(d) + ")");
        }
    out.equal(basis_l(2, 1).size(), 4u, "dim l_2(1)");
    const LieDimension l32 = lie_derivation_dimension(3, 2);
    out.check(l32.certified, "dim l_3(2) certified by full-rank bracket map");
    out.equal(l32.dim(), 105u, "dim l_3(2)");
    out.equal(oracle::weyl_dim_c({}, 3) + oracle::weyl_dim_c({1, 1}, 3) + oracle::weyl_dim_c({2, 2}, 3), 105u,
              "1 + 14 + 90");
    const HainResult hain = hain_surjectivity(3);
    out.check(hain.closed, "brackets of l_3(1) stay in l_3(2)");
    out.equal(hain.image_dim, 105u, "rank of Lambda^2 l_3(1) -> l_3(2)");
}

void conjecture(Outcome& out)
{
    const ConjectureProbe p = conjecture_probe(3);
    out.equal(p.h1.image_dim + p.h1.quotient_dim, p.h1.ambient_dim, "ambient = image + quotient");
    out.note("n = 3 weight 2 quotient " + std::to_string(p.h1.quotient_dim) + ", prediction " +
             std::to_string(p.prediction) + " (reported, not asserted)");
    CommandContext ctx;
    const Report rep = cmd_conjecture(3, ctx);
    bool reported = false;
    for (const auto& c : rep.checks())
        if (c.computed.is_object() && c.computed.contains("quotient_dim")) reported = c.status == CheckStatus::Reported;
    out.check(reported, "report carries the n = 3 quotient with status reported");
}

void infrastructure(Outcome& out)
{
    std::mt19937_64 rng(0xacce55);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const AlgebraHandle alg = AlgebraHandle::a(2);
    const auto deg1 = degree_basis(alg, 1);
    auto random_element = [&](const std::vector<Tensor>& basis) {
        Tensor t(basis.front().space(), basis.front().degree());
        for (const auto& b : basis)
            if (rng() % 3 == 0) t += Scalar(coeff(rng)) * b;
        return t;
    };
    std::size_t jacobi = 0, antisym = 0, leibniz = 0;
    for (int i = 0; i < 60; ++i) {
        const Tensor a = random_element(deg1), b = random_element(deg1), c = random_element(deg1);
        auto br = [&](const Tensor& s, const Tensor& t) { return bracket_element(alg, s, t); };
        jacobi += (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero();
        antisym += (br(a, b) + br(b, a)).is_zero();
    }
    const Space h = Space::symplectic(2);
    for (int i = 0; i < 60; ++i) {
        const Derivation d = element_derivation(alg, random_element(deg1));
        Tensor t(h, 2), u(h, 3);
        for (int s = 0; s < 4; ++s) {
            t += Tensor(h, 2, SparseVector::unit(rng() % 16, coeff(rng)));
            u += Tensor(h, 3, SparseVector::unit(rng() % 64, coeff(rng)));
        }
        leibniz += apply_derivation(d, product(t, u)) ==
                   product(apply_derivation(d, t), u) + product(t, apply_derivation(d, u));
    }
    out.equal(jacobi, 60u, "Jacobi cases");
    out.equal(antisym, 60u, "antisymmetry cases");
    out.equal(leibniz, 60u, "Leibniz cases");

    const SubspaceBasis b = bracket_image(alg, 2);
    const std::string text = serialize_basis(h, 4, b);
    const SubspaceBasis back = parse_basis(text);
    out.check(back == b && serialize_basis(h, 4, back) == text, "cache round trip of a bracket image is byte-identical");

    CommandContext ctx;
    out.check(cmd_polygon(2, 6, FactorKind::Wedge, ctx).dump(false) == cmd_polygon(2, 6, FactorKind::Wedge, ctx).dump(false),
              "polygon report deterministic");
    DimsParams dp;
    dp.genus = 2;
    out.check(cmd_dims(dp, ctx).dump(false) == cmd_dims(dp, ctx).dump(false), "dims report deterministic");

    std::size_t instances = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 3 + rng() % 10, cols = 3 + rng() % 10;
        std::vector<SparseVector> vs;
        std::vector<std::vector<Q>> dense;
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<SparseVector::Entry> e;
            std::vector<Q> row(cols);
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 3 == 0) {
                    row[c] = coeff(rng);
                    e.emplace_back(c, row[c]);
                }
            if (trial % 2 && r > 1) {  // force dependencies
                for (std::size_t c = 0; c < cols; ++c) row[c] = dense[0][c] - 2 * dense[1][c];
                e.clear();
                for (std::size_t c = 0; c < cols; ++c) e.emplace_back(c, row[c]);
            }
            vs.push_back(SparseVector::from_entries(e));
            dense.push_back(row);
        }
        const std::size_t want = oracle::rank(dense);
        out.equal(checked_rank(vs, cols), want, "checked rank");
        for (std::uint64_t p : default_primes()) out.equal(modular_rank(vs, cols, p), want, "modular rank");
        ++instances;
    }
    for (int g : {2, 3}) out.check(verify_exact_sequence(g).method == "exact", "exact and modular ranks agree, g = " + std::to_string(g));
    out.note(std::to_string(instances) + " random rank instances cross-checked");
}

} // namespace

int main()
{
    run(1, "dimensions of a_g(k) and the degree-one split", 10e3, dimensions);
    run(2, "dual tensor correspondence", 30e3, dual_round_trip);
    run(3, "cyclic-action identities, highest weights, decomposition sums", 60e3, invariant_battery);
    run(4, "contraction values and commutator witnesses", 10e3, witnesses);
    run(5, "weight 2 exact sequence at g = 4", 15 * 60e3, exactness_g4);
    run(6, "abelianization of Der(T(H_2))", 10e3, plain_abelianization);
    run(7, "c13 kills brackets of Der(T(H_n))(1), n = 2, 3", 10e3, plain_contraction);
    run(8, "polygon contractions", 60e3, polygons);
    run(9, "trace relation and vanishing on brackets", 30e3, trace_relation);
    run(10, "free Lie dimensions and bracket surjectivity", 60e3, free_lie);
    run(11, "conjecture probe n = 3", 60e3, conjecture);
    run(12, "randomized identities, cache, determinism, rank agreement", 120e3, infrastructure);
    std::printf("%d of 12 criteria failed\n", total_failures);
    return total_failures == 0 ? 0 : 1;
}
