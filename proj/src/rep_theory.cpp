#include "symderiv/rep_theory.hpp"

#include "symderiv/derivation.hpp"
#include "symderiv/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symderiv {

IrrepLabel::IrrepLabel(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("IrrepLabel: negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("IrrepLabel: parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

IrrepLabel IrrepLabel::parse(const std::string& text)
{
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("IrrepLabel: expected [..], got " + text);
    std::vector<int> parts;
    const std::string body = text.substr(1, text.size() - 2);
    for (std::size_t i = 0; i < body.size();) {
        if (!std::isdigit(static_cast<unsigned char>(body[i]))) throw std::invalid_argument("IrrepLabel: bad label " + text);
        int part = body[i++] - '0';
        int repeat = 1;
        if (i < body.size() && body[i] == '^') {
            std::size_t used = 0;
            repeat = std::stoi(body.substr(i + 1), &used);
            if (used == 0 || repeat < 1) throw std::invalid_argument("IrrepLabel: bad exponent in " + text);
            i += 1 + used;
        }
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
    }
    return IrrepLabel(std::move(parts));
}

std::vector<int> IrrepLabel::weight(int genus) const
{
    if (static_cast<int>(parts_.size()) > genus) throw std::invalid_argument("IrrepLabel: more parts than the genus");
    std::vector<int> w(parts_);
    w.resize(static_cast<std::size_t>(genus), 0);
    return w;
}

std::string IrrepLabel::to_string() const
{
    if (parts_.empty()) return "[0]";
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        out << parts_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    out << ']';
    return out.str();
}

// --- sp(2g) ----------------------------------------------------------------

SpGenerator::SpGenerator(Space space, std::vector<std::vector<Scalar>> columns)
    : space_(space), columns_(std::move(columns))
{
    const int n = space_.dim();
    if (!space_.is_symplectic()) throw std::invalid_argument("SpGenerator: symplectic space required");
    if (static_cast<int>(columns_.size()) != n) throw std::invalid_argument("SpGenerator: wrong number of columns");
    for (const auto& c : columns_)
        if (static_cast<int>(c.size()) != n) throw std::invalid_argument("SpGenerator: wrong column length");
    for (Generator u = 0; u < n; ++u) {
        for (Generator v = 0; v < n; ++v) {
            Scalar s = 0;
            for (Generator w = 0; w < n; ++w) {
                s += columns_[u][w] * pairing(space_, w, v);
                s += pairing(space_, u, w) * columns_[v][w];
            }
            if (s != 0) throw std::invalid_argument("SpGenerator: matrix does not preserve the pairing");
        }
    }
}

namespace {

std::vector<std::vector<Scalar>> zero_matrix(int n)
{
    return std::vector<std::vector<Scalar>>(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
}

void check_index(int genus, int i)
{
    if (i < 1 || i > genus) throw std::out_of_range("Chevalley generator index out of range");
}

} // namespace

SpGenerator SpGenerator::cartan(int genus, int i)
{
    check_index(genus, i);
    Space h = Space::symplectic(genus);
    auto m = zero_matrix(h.dim());
    m[h.x(i)][h.x(i)] = 1;
    m[h.y(i)][h.y(i)] = -1;
    return SpGenerator(h, std::move(m));
}

SpGenerator SpGenerator::raising(int genus, int i)
{
    check_index(genus, i);
    Space h = Space::symplectic(genus);
    auto m = zero_matrix(h.dim());
    if (i < genus) {
        m[h.x(i + 1)][h.x(i)] = 1;
        m[h.y(i)][h.y(i + 1)] = -1;
    } else {
        m[h.y(i)][h.x(i)] = 1;
    }
    return SpGenerator(h, std::move(m));
}

SpGenerator SpGenerator::lowering(int genus, int i)
{
    check_index(genus, i);
    Space h = Space::symplectic(genus);
    auto m = zero_matrix(h.dim());
    if (i < genus) {
        m[h.x(i)][h.x(i + 1)] = 1;
        m[h.y(i + 1)][h.y(i)] = -1;
    } else {
        m[h.x(i)][h.y(i)] = 1;
    }
    return SpGenerator(h, std::move(m));
}

SpGenerator commutator(const SpGenerator& a, const SpGenerator& b)
{
    if (!(a.space_ == b.space_)) throw std::invalid_argument("commutator: different spaces");
    const int n = a.space_.dim();
    auto m = zero_matrix(n);
    for (int col = 0; col < n; ++col)
        for (int mid = 0; mid < n; ++mid)
            for (int row = 0; row < n; ++row)
                m[col][row] += a.columns_[mid][row] * b.columns_[col][mid] - b.columns_[mid][row] * a.columns_[col][mid];
    return SpGenerator(a.space_, std::move(m));
}

Tensor sp_act(const SpGenerator& a, const Tensor& t)
{
    if (!(a.space() == t.space())) throw std::invalid_argument("sp_act: different spaces");
    const Space& h = t.space();
    std::vector<Tensor> images;
    for (Generator u = 0; u < h.dim(); ++u) {
        Tensor img(h, 1);
        for (Generator w = 0; w < h.dim(); ++w)
            if (a.entry(w, u) != 0) img += a.entry(w, u) * Tensor::generator(h, w);
        images.push_back(std::move(img));
    }
    return apply_derivation(Derivation(h, 0, std::move(images)), t);
}

std::optional<std::vector<int>> weight_of(const Tensor& t)
{
    const Space& h = t.space();
    if (!h.is_symplectic() || t.is_zero()) return std::nullopt;
    const int g = h.genus();
    std::optional<std::vector<int>> common;
    bool mixed = false;
    // basis words are Cartan eigenvectors: h_i counts x_i minus y_i
    t.for_each_term([&](const Word& w, const Scalar&) {
        std::vector<int> wt(static_cast<std::size_t>(g), 0);
        for (Generator a : w) wt[static_cast<std::size_t>(a % g)] += a < g ? 1 : -1;
        if (!common) common = wt;
        else if (*common != wt) mixed = true;
    });
    if (mixed) return std::nullopt;
    return common;
}

bool is_highest_weight(const Tensor& t)
{
    const int g = t.space().genus();
    for (int i = 1; i <= g; ++i)
        if (!sp_act(SpGenerator::raising(g, i), t).is_zero()) return false;
    return true;
}

std::uint64_t weyl_dim(const IrrepLabel& label, int genus)
{
    if (genus < 1) throw std::invalid_argument("weyl_dim: genus >= 1 required");
    if (static_cast<int>(label.length()) > genus) throw std::invalid_argument("weyl_dim: label longer than the genus");
    std::vector<int> b = label.weight(genus);
    std::vector<long> l(b.size()), m(b.size());
    for (int i = 0; i < genus; ++i) {
        l[i] = b[i] + genus - i;
        m[i] = genus - i;
    }
    Scalar d = 1;
    for (int i = 0; i < genus; ++i) {
        d *= Scalar(l[i]) / m[i];
        for (int j = i + 1; j < genus; ++j)
            d *= Scalar((l[i] - l[j]) * (l[i] + l[j])) / ((m[i] - m[j]) * (m[i] + m[j]));
    }
    if (d.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
    return d.get_num().get_ui();
}

// --- named vectors in H^{(x)4} ---------------------------------------------

namespace {

Tensor word_of(const Space& h, std::initializer_list<Generator> letters)
{
    std::vector<Generator> w(letters);
    return Tensor::word(h, w);
}

Tensor wedge2(const Space& h, Generator a, Generator b) { return word_of(h, {a, b}) - word_of(h, {b, a}); }

bool independent(const std::vector<Tensor>& ts)
{
    std::vector<SparseVector> vs;
    for (const auto& t : ts) vs.push_back(t.coefficients());
    return span_dim(vs) == ts.size();
}

const std::vector<std::pair<int, int>> kSlotPairs = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

std::string pair_key(const char* stem, std::pair<int, int> p)
{
    return stem + std::to_string(p.first) + std::to_string(p.second);
}

} // namespace

NamedVectorSet named_vectors(int genus)
{
    if (genus < 4) throw std::invalid_argument("named vectors need genus >= 4");
    const Space h = Space::symplectic(genus);
    const Generator x1 = h.x(1), x2 = h.x(2), x3 = h.x(3), x4 = h.x(4);
    const Tensor w0 = omega0(h);
    NamedVectorSet set{genus, {}};
    auto& v = set.vectors;

    v.emplace("omega12", product(w0, w0));
    v.emplace("omega13", otimes_ij(w0, w0, 1, 3));
    v.emplace("omega14", otimes_ij(w0, w0, 1, 4));

    const Tensor x12 = wedge2(h, x1, x2);
    const Tensor x11 = word_of(h, {x1, x1});
    for (auto p : kSlotPairs) {
        v.emplace(pair_key("alpha", p), otimes_ij(x12, w0, p.first, p.second));
        v.emplace(pair_key("beta", p), otimes_ij(x11, w0, p.first, p.second));
    }
    v.emplace("alpha1", v.at("alpha13") - v.at("alpha24"));
    v.emplace("alpha2", v.at("alpha12") - v.at("alpha14") - v.at("alpha23") + v.at("alpha34"));
    v.emplace("beta_invariant", v.at("beta12") + v.at("beta14") - v.at("beta23") + v.at("beta34"));

    v.emplace("gamma1", product(x12, x12));
    v.emplace("gamma2", word_of(h, {x1, x1, x2, x2}) + word_of(h, {x2, x2, x1, x1}) - word_of(h, {x1, x2, x1, x2}) -
                            word_of(h, {x2, x1, x2, x1}));

    // literal coefficients: 4 on x2x1x1x1 then -1 on every placement of x2
    Tensor delta = 4 * word_of(h, {x2, x1, x1, x1}) - word_of(h, {x2, x1, x1, x1}) - word_of(h, {x1, x2, x1, x1}) -
                   word_of(h, {x1, x1, x2, x1}) - word_of(h, {x1, x1, x1, x2});
    v.emplace("delta1", delta);
    const std::vector<Generator> x123{x1, x2, x3};
    const Tensor eps = product(Tensor::generator(h, x1), antisymmetrize(h, x123));
    v.emplace("epsilon1", eps);
    // the i-th partner moves slot 1 to slot i
    for (int i = 2; i <= 4; ++i) {
        v.emplace("delta" + std::to_string(i), cycle_prefix(delta, i));
        v.emplace("epsilon" + std::to_string(i), cycle_prefix(eps, i));
    }
    const std::vector<Generator> x1234{x1, x2, x3, x4};
    v.emplace("four_form", antisymmetrize(h, x1234));
    return set;
}

std::vector<NamedIdentity> named_vector_identities(const NamedVectorSet& set)
{
    const Space h = Space::symplectic(set.genus);
    std::vector<NamedIdentity> out;
    auto at = [&](const std::string& k) -> const Tensor& { return set.at(k); };
    auto shift = [&](const std::string& k) { return cyclic_shift(at(k)); };
    auto add = [&](std::string name, const char* group, bool holds) { out.push_back({std::move(name), group, holds}); };

    // cyclic action tables
    add("sigma4(omega12) = -omega14", "cyclic-action", shift("omega12") == -at("omega14"));
    add("sigma4(omega13) = -omega13", "cyclic-action", shift("omega13") == -at("omega13"));
    add("sigma4(omega14) = -omega12", "cyclic-action", shift("omega14") == -at("omega12"));
    const std::vector<std::pair<std::string, int>> alpha_image = {{"alpha14", -1}, {"alpha24", -1}, {"alpha34", -1},
                                                                  {"alpha12", -1}, {"alpha13", -1}, {"alpha23", -1}};
    const std::vector<std::pair<std::string, int>> beta_image = {{"beta14", 1},  {"beta24", 1},  {"beta34", 1},
                                                                 {"beta12", -1}, {"beta13", -1}, {"beta23", -1}};
    for (std::size_t i = 0; i < kSlotPairs.size(); ++i) {
        for (const auto& [stem, table] : {std::pair{"alpha", &alpha_image}, std::pair{"beta", &beta_image}}) {
            const auto& [target, sign] = (*table)[i];
            const std::string src = pair_key(stem, kSlotPairs[i]);
            add("sigma4(" + src + ") = " + (sign < 0 ? "-" : "") + target, "cyclic-action",
                shift(src) == Scalar(sign) * at(target));
        }
    }

    // relations
    add("sigma4(gamma1) = -gamma2", "relation", shift("gamma1") == -at("gamma2"));
    add("sigma4(gamma2) = -gamma1", "relation", shift("gamma2") == -at("gamma1"));
    add("gamma1, gamma2 independent", "relation", independent({at("gamma1"), at("gamma2")}));
    for (const char* stem : {"delta", "epsilon"}) {
        const std::string s(stem);
        for (int i = 1; i <= 4; ++i) {
            const int target = i == 1 ? 4 : i - 1;
            add("sigma4(" + s + std::to_string(i) + ") = " + s + std::to_string(target), "relation",
                shift(s + std::to_string(i)) == at(s + std::to_string(target)));
        }
        add(s + "1, " + s + "2, " + s + "3 independent", "relation",
            independent({at(s + "1"), at(s + "2"), at(s + "3")}));
    }
    add("delta1 + delta2 + delta3 + delta4 = 0", "relation",
        (at("delta1") + at("delta2") + at("delta3") + at("delta4")).is_zero());
    add("epsilon1 - epsilon2 + epsilon3 - epsilon4 = 0", "relation",
        (at("epsilon1") - at("epsilon2") + at("epsilon3") - at("epsilon4")).is_zero());
    add("epsilon1 + epsilon3 = epsilon2 + epsilon4", "relation",
        at("epsilon1") + at("epsilon3") == at("epsilon2") + at("epsilon4"));
    add("delta2 = slot 2 moved to the front of delta1", "relation", front_insert(at("delta1"), 2) == at("delta2"));
    add("four_form is not cyclic-invariant", "relation", !is_cyclic_invariant(at("four_form")));

    // highest weight vectors, with the weight of their label
    auto hw = [&](const std::string& key, const char* label) {
        const auto expected = IrrepLabel::parse(label).weight(set.genus);
        const auto weight = weight_of(at(key));
        add(key + " is a highest weight vector of " + label, "highest-weight",
            weight && *weight == expected && is_highest_weight(at(key)));
    };
    for (const char* k : {"omega12", "omega13", "omega14"}) hw(k, "[0]");
    for (auto p : kSlotPairs) {
        hw(pair_key("alpha", p), "[1^2]");
        hw(pair_key("beta", p), "[2]");
    }
    hw("gamma1", "[2^2]");
    hw("gamma2", "[2^2]");
    hw("delta1", "[31]");
    hw("epsilon1", "[21^2]");
    hw("four_form", "[1^4]");

    // cyclic-invariant generators of the summands of a_g(2)
    const SubspaceBasis invariants = invariant_subspace(h, 4);
    auto inv = [&](const std::string& name, const Tensor& t) {
        add(name + " is cyclic-invariant", "invariant-generator",
            !t.is_zero() && cyclic_shift(t) == t && invariants.contains(t.coefficients()));
    };
    inv("omega12 - omega14", at("omega12") - at("omega14"));
    inv("alpha1", at("alpha1"));
    inv("alpha2", at("alpha2"));
    inv("beta12 + beta14 - beta23 + beta34", at("beta_invariant"));
    inv("gamma1 - gamma2", at("gamma1") - at("gamma2"));
    inv("epsilon1 + epsilon3", at("epsilon1") + at("epsilon3"));
    return out;
}

std::vector<Multiplicity> fourth_power_decomposition()
{
    return {{IrrepLabel(), 3},        {IrrepLabel({1, 1}), 6},    {IrrepLabel({2}), 6},
            {IrrepLabel({2, 2}), 2},  {IrrepLabel({3, 1}), 3},    {IrrepLabel({2, 1, 1}), 3},
            {IrrepLabel({1, 1, 1, 1}), 1}, {IrrepLabel({4}), 1}};
}

std::vector<Multiplicity> invariant_fourth_power_decomposition()
{
    return {{IrrepLabel(), 1},       {IrrepLabel({1, 1}), 2},       {IrrepLabel({2}), 1},
            {IrrepLabel({2, 2}), 1}, {IrrepLabel({2, 1, 1}), 1}, {IrrepLabel({4}), 1}};
}

DecompositionSums decomposition_sums(int genus)
{
    if (genus < 4) throw std::invalid_argument("decomposition needs genus >= 4");
    DecompositionSums s{};
    for (const auto& m : fourth_power_decomposition()) {
        const auto d = weyl_dim(m.label, genus);
        s.weyl_dims[m.label.to_string()] = d;
        s.fourth_power_sum += static_cast<std::uint64_t>(m.count) * d;
    }
    for (const auto& m : invariant_fourth_power_decomposition())
        s.invariant_sum += static_cast<std::uint64_t>(m.count) * weyl_dim(m.label, genus);
    s.fourth_power_dim = word_count(2 * genus, 4);
    s.invariant_dim = necklace_count(2 * genus, 4);
    return s;
}

} // namespace symderiv
