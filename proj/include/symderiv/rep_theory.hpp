#pragma once

#include "symderiv/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symderiv {

/// Young-diagram label [b1 b2 ... bk] of an Sp(2g) irreducible.
/// Parts are weakly decreasing and positive; trailing zeros are dropped.
class IrrepLabel {
public:
    IrrepLabel() = default;
    explicit IrrepLabel(std::vector<int> parts);
    /// Parses "[21^2]", "[4]", "[1^4]" or "[0]" (single-digit parts).
    static IrrepLabel parse(const std::string& text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    /// Highest weight (b1, .., bk, 0, .., 0) padded to length g.
    std::vector<int> weight(int genus) const;
    std::string to_string() const;

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;

private:
    std::vector<int> parts_;
};

/// Element of sp(2g): a matrix A on H with A(u).v + u.A(v) = 0.
/// column(a) is the image of generator a.
class SpGenerator {
public:
    /// Throws std::invalid_argument when the compatibility identity fails
    /// on some basis pair.
    SpGenerator(Space space, std::vector<std::vector<Scalar>> columns);

    static SpGenerator cartan(int genus, int i);
    static SpGenerator raising(int genus, int i);
    static SpGenerator lowering(int genus, int i);

    const Space& space() const noexcept { return space_; }
    Scalar entry(Generator row, Generator col) const { return columns_[col][row]; }
    const std::vector<Scalar>& column(Generator a) const { return columns_[a]; }

    /// Matrix commutator [A, B] = AB - BA.
    friend SpGenerator commutator(const SpGenerator& a, const SpGenerator& b);

private:
    Space space_;
    std::vector<std::vector<Scalar>> columns_;
};

/// Derivation extension of A to H^{(x)d}.
Tensor sp_act(const SpGenerator& a, const Tensor& t);

/// Simultaneous eigenvalues under the Cartan generators h_1 .. h_g, or
/// nullopt when t is zero or mixes weights.
std::optional<std::vector<int>> weight_of(const Tensor& t);

/// True iff every raising generator e_1 .. e_g annihilates t.
bool is_highest_weight(const Tensor& t);

/// Weyl dimension formula for type C_g. Throws std::invalid_argument when
/// the label has more than g parts.
std::uint64_t weyl_dim(const IrrepLabel& label, int genus);

/// Tensors of H^{(x)4} used to certify the Z/4 decomposition of a_g(2).
/// Keys: omega12 omega13 omega14, alpha12 .. alpha34, alpha1 alpha2,
/// beta12 .. beta34, beta_invariant, gamma1 gamma2, delta1 .. delta4,
/// epsilon1 .. epsilon4, four_form.
struct NamedVectorSet {
    int genus;
    std::map<std::string, Tensor> vectors;

    const Tensor& at(const std::string& key) const { return vectors.at(key); }
};

/// Builds the set. Throws std::invalid_argument for g < 4.
NamedVectorSet named_vectors(int genus);

struct NamedIdentity {
    std::string name;
    std::string group;  ///< "cyclic-action", "relation", "highest-weight", "invariant-generator"
    bool holds;
};

/// Every action table entry, relation, highest-weight claim and invariant
/// generator attached to the named vectors.
std::vector<NamedIdentity> named_vector_identities(const NamedVectorSet& set);

struct Multiplicity {
    IrrepLabel label;
    int count;
};

/// Decomposition of H^{(x)4} and of its cyclic-invariant part, g >= 4.
std::vector<Multiplicity> fourth_power_decomposition();
std::vector<Multiplicity> invariant_fourth_power_decomposition();

struct DecompositionSums {
    std::uint64_t fourth_power_sum;     ///< sum of mult * weyl_dim over H^{(x)4}
    std::uint64_t fourth_power_dim;     ///< (2g)^4
    std::uint64_t invariant_sum;        ///< same over the invariant part
    std::uint64_t invariant_dim;        ///< necklace count of words of length 4
    std::map<std::string, std::uint64_t> weyl_dims;
    bool holds() const { return fourth_power_sum == fourth_power_dim && invariant_sum == invariant_dim; }
};

DecompositionSums decomposition_sums(int genus);

} // namespace symderiv
