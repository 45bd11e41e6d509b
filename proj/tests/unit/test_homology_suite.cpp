#include "oracles.hpp"

#include "symderiv/homology.hpp"

#include <doctest.h>

using namespace symderiv;

TEST_CASE("polygon contractions match brute-force expansion")
{
    for (int k = 2; k <= 6; ++k) {
        CHECK(polygon_contract(k, k) == oracle::polygon(k, false));
        CHECK(polygon_contract(k, k, FactorKind::Symmetric) == oracle::polygon(k, true));
    }
    CHECK(polygon_contract(5, 5) != 0);
    CHECK(polygon_contract(6, 6) == 0);
    CHECK(disconnected_contract(2, 2, 4) == 0);
}

TEST_CASE("explicit lift and transfer-matrix evaluation agree")
{
    for (int k = 2; k <= 4; ++k) {
        const Tensor lift = polygon_lift(k, k);
        CHECK(lift.degree() == 2 * k);
        // contract slot 2 of factor i with slot 1 of factor i + 1
        oracle::Terms t = oracle::terms_of(lift);
        Scalar total = 0;
        for (const auto& [w, c] : t) {
            int prod = 1;
            for (int s = 0; s < k; ++s) prod *= oracle::pair(k, w[2 * s + 1], w[(2 * s + 2) % (2 * k)]);
            total += c * prod;
        }
        CHECK(total == polygon_contract(k, k));
    }
}

TEST_CASE("abelianization bookkeeping")
{
    const H1Result plain = h1_weight(AlgebraHandle::der(2), 2);
    CHECK(plain.ambient_dim == 16);
    CHECK(plain.quotient_dim == 4);
    CHECK(plain.representatives.size() == 4);
    CHECK(plain.image_dim + plain.quotient_dim == plain.ambient_dim);
    const H1Result a2 = h1_weight(AlgebraHandle::a(2), 2);
    CHECK(a2.ambient_dim == 70);
    CHECK(a2.image_dim + a2.quotient_dim == a2.ambient_dim);
    const H1Result l2 = h1_weight(AlgebraHandle::l(2), 1);
    CHECK(l2.quotient_dim == l2.ambient_dim);
}

TEST_CASE("low genus exact sequence")
{
    const ExactSequenceReport r2 = verify_exact_sequence(2);
    CHECK(r2.c13_vanishes());
    CHECK(r2.c13_rank == 5);
    CHECK(r2.ambient_dim == 70);
    CHECK(r2.image_dim == 65);
    CHECK(r2.method == "exact");
    const ExactSequenceReport r3 = verify_exact_sequence(3);
    CHECK(r3.exact());
    CHECK(r3.image_dim == 322);
    CHECK_THROWS(verify_exact_sequence(1));
}

TEST_CASE("c13 quotient rank counts Lambda^2 H / Q omega_0")
{
    const std::vector<Tensor> basis = degree_basis(AlgebraHandle::a(2), 2);
    CHECK(c13_quotient_rank(basis) == 5);
    for (const auto& t : basis) CHECK(oracle::terms_of(c13(t)) == oracle::contract(2, oracle::terms_of(t), 1, 3));
}

TEST_CASE("witness brackets")
{
    const BracketWitnesses w = bracket_witnesses(3);
    for (const Tensor* t : {&w.trace_pair_bracket, &w.wedge_pair_bracket, &w.cube_pair_bracket})
        CHECK(c13(*t).is_zero());
    CHECK(w.trace_pair_bracket == -w.trace_pair_reversed);
}

TEST_CASE("conjecture probe at n = 2 is the proven case")
{
    const ConjectureProbe p = conjecture_probe(2);
    CHECK(p.h1.quotient_dim == 4);
    CHECK(p.prediction == 4);
    CHECK(p.c13_onto);
    CHECK(p.c13_kills_brackets);
}
