#pragma once

#include "symderiv/derivation.hpp"
#include "symderiv/subspace.hpp"
#include "symderiv/tensor.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace symderiv {

class Cache;

enum class AlgebraKind {
    SymplecticAssociative,  ///< a_g: derivations of T(H) killing omega_0
    SymplecticLie,          ///< l_g: those with Lie-element images
    PlainAssociative,       ///< Der(T(H_n))
};

struct AlgebraHandle {
    AlgebraKind kind;
    int parameter;  ///< g for the symplectic kinds, n for the plain kind

    static AlgebraHandle a(int genus);
    static AlgebraHandle l(int genus);
    static AlgebraHandle der(int n);

    Space space() const;
    /// "a_g", "l_g" or "Der(T(H_n))" with the parameter filled in.
    std::string name() const;
    /// Short form used in cache keys: "a-sympl4", "l-sympl3", "der-plain2".
    std::string key() const;
};

/// Basis of the degree-k piece. Symplectic elements are carried as dual
/// tensors (degree k+2); plain ones as tensors whose slot 1 is the dual index.
std::vector<Tensor> degree_basis(const AlgebraHandle& alg, int degree);
/// Element tensor -> derivation and back, matching degree_basis.
Derivation element_derivation(const AlgebraHandle& alg, const Tensor& element);
Tensor derivation_element(const AlgebraHandle& alg, const Derivation& d);

/// Tensor of the bracket of two elements.
Tensor bracket_element(const AlgebraHandle& alg, const Tensor& a, const Tensor& b);

enum class PairSelection {
    All,            ///< every [deg i, deg j] with i + j = m, i <= j
    DegreeOneLeft,  ///< only [deg 1, deg m-1]
};

struct BracketOptions {
    PairSelection pairs = PairSelection::All;
    unsigned threads = 1;
};

/// Echelon span of all bracket elements landing in weight m (exact).
SubspaceBasis bracket_image(const AlgebraHandle& alg, int weight, const BracketOptions& opts = {});

/// Abelianization in one weight.
struct H1Result {
    AlgebraHandle algebra;
    int weight = 0;
    std::size_t ambient_dim = 0;
    std::size_t image_dim = 0;
    std::size_t quotient_dim = 0;
    /// Ambient basis elements whose classes span the quotient.
    std::vector<Tensor> representatives;
    /// "exact" or "modular-certified" or "modular".
    std::string method;
};

H1Result h1_weight(const AlgebraHandle& alg, int weight, const BracketOptions& opts = {});

// --- main exact sequence in weight 2 ----------------------------------------

/// Contraction of slots 1 and 3 of a degree-4 tensor.
Tensor c13(const Tensor& t);
/// Contraction of slots 1 and 2 of a degree-4 tensor.
Tensor c11(const Tensor& t);

/// Rank of t -> (antisymmetric part of c13(t)) in Lambda^2 H / Q omega_0 over
/// the given degree-4 tensors.
std::size_t c13_quotient_rank(const std::vector<Tensor>& tensors);

struct ExactSequenceReport {
    int genus = 0;
    std::size_t pairs_checked = 0;     ///< bracket pairs with c13 evaluated
    std::size_t c13_nonzero = 0;       ///< pairs whose bracket has nonzero c13
    std::size_t c13_rank = 0;          ///< rank of the quotient projection
    std::size_t expected_c13_rank = 0; ///< 2g^2 - g - 1
    std::size_t ambient_dim = 0;       ///< dim a_g(2)
    std::size_t image_dim = 0;         ///< dim of the bracket image
    std::size_t image_upper_bound = 0; ///< ambient - c13_rank
    bool certified = false;            ///< image dim proven equal to the bound
    std::string method;
    bool cache_hit = false;
    /// Orbits of length-4 words whose orbit sums span a complement of the
    /// bracket image (non-pivot columns of the modular echelon form).
    std::vector<std::size_t> complement_orbits;
    bool c13_vanishes() const { return c13_nonzero == 0; }
    bool onto() const { return c13_rank == expected_c13_rank; }
    bool exact() const { return c13_vanishes() && onto() && image_dim + c13_rank == ambient_dim; }
};

struct ExactSequenceOptions {
    unsigned threads = 1;
    /// When non-empty, check c13 o bracket on these many random pairs (plus
    /// every named pair) instead of all pairs.
    std::optional<std::size_t> random_pairs;
    std::uint64_t seed = 0x2f1c5b7a9e3d4c61ULL;
    Cache* cache = nullptr;
};

ExactSequenceReport verify_exact_sequence(int genus, const ExactSequenceOptions& opts = {});

/// The three named bracket witnesses, as dual tensors of a_g(1) elements.
struct BracketWitnesses {
    Tensor trace_pair_bracket;  ///< [x2^y2^x3, sym(x1 x1 y3)]
    Tensor wedge_pair_bracket;  ///< [x1^x2^x3, sym(x1 x1 y1)]
    Tensor cube_pair_bracket;   ///< [x1 x1 x1, sym(x1 x1 y1)]
    Tensor wedge_pair_expected; ///< expansion of the wedge bracket, as displayed
    Tensor trace_pair_expected; ///< expansion of the trace bracket, as displayed
    Tensor trace_pair_reversed; ///< [sym(x1 x1 y3), x2^y2^x3]
};
BracketWitnesses bracket_witnesses(int genus);


// --- free Lie side ----------------------------------------------------------

struct HainResult {
    std::size_t pairs = 0;
    std::size_t image_dim = 0;
    std::size_t target_dim = 0;  ///< dim l_g(2)
    bool closed = false;         ///< every bracket lies in l_g(2)
    bool surjective() const { return closed && image_dim == target_dim; }
};
HainResult hain_surjectivity(int genus);

// --- polygon contractions ---------------------------------------------------

enum class FactorKind {
    Wedge,      ///< x_i (x) y_{i+1} - y_{i+1} (x) x_i
    Symmetric,  ///< x_i (x) y_{i+1} + y_{i+1} (x) x_i
};

/// Signed sum over S_k of products of the two-slot factors indexed by
/// i = 1..k (indices cyclic), as an explicit tensor of degree 2k.
Tensor polygon_lift(int k, int genus, FactorKind kind = FactorKind::Wedge);

/// Contraction of the lift along cycles of factors: for a cycle of lengths
/// (k_1, k_2, ..) over consecutive factor blocks, slot 2 of each factor pairs
/// with slot 1 of the next factor of its block (cyclically). Evaluated with
/// a 2x2 transfer matrix per cycle.
Scalar cycle_contract(int genus, const std::vector<int>& cycle_lengths, FactorKind kind = FactorKind::Wedge);

Scalar polygon_contract(int k, int genus, FactorKind kind = FactorKind::Wedge);
Scalar disconnected_contract(int k1, int k2, int genus);

// --- conjecture probe -------------------------------------------------------

struct ConjectureProbe {
    H1Result h1;
    std::size_t prediction = 0;  ///< n^2
    bool c13_onto = false;       ///< c13_plain maps Der(2) onto H^{(x)2}
    bool c13_kills_brackets = false;
};
ConjectureProbe conjecture_probe(int n);

} // namespace symderiv
