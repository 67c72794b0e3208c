#include <doctest.h>

#include <cstdlib>
#include <random>

#include "parabose/relations.hpp"
#include "parabose/representations.hpp"
#include "parabose/super_hopf.hpp"
#include "support.hpp"

using namespace parabose;
using testing::el;

TEST_CASE("Fock spec dimensions and validation") {
  CHECK(FockSpec{1, 1, 6}.dimension() == 12);
  CHECK(FockSpec{1, 2, 6}.dimension() == 72);
  CHECK(FockSpec{1, 3, 6}.dimension() == 864);
  CHECK(FockSpec{2, 2, 4}.dimension() == 512);
  CHECK_THROWS_AS(FockSpec({0, 1, 6}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(FockSpec({1, 0, 6}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(FockSpec({1, 1, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(build_green_ansatz(FockSpec{3, 3, 6}), DimensionOverflow);
  CHECK_THROWS_AS(build_green_ansatz(FockSpec{1, 2, 6}, 50), DimensionOverflow);
  CHECK(FockSpec{64, 64, 64}.dimension() == 0);
  CHECK_THROWS_AS(build_green_ansatz(FockSpec{64, 64, 64}), DimensionOverflow);
}

TEST_CASE("dimension cap from the environment") {
  ::setenv("PARABOSE_DIM_CAP", "50", 1);
  CHECK(default_dimension_cap() == 50);
  ::setenv("PARABOSE_DIM_CAP", "lots", 1);
  CHECK(default_dimension_cap() == 20000);
  ::unsetenv("PARABOSE_DIM_CAP");
  CHECK(default_dimension_cap() == 20000);
}

TEST_CASE("p = 1 is the boson Fock space") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 1, 6});
  CHECK(rep.guarded_states(2).size() == 2 * 5);
  CHECK(guarded_residual(el("B-1 B+1 - B+1 B-1"), Element::unit(), rep) <= kDirectTolerance);
  CHECK(verify_boson_degeneration(rep).all_passed());
  const SparseMatrix n = number_operator(rep);
  for (std::size_t s : rep.guarded_states(1))
    CHECK(n.coeff(s, s).real() == doctest::Approx(rep.total_occupancy(s) + 0.5));
}

TEST_CASE("order p vacuum") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 2, 6});
  const SparseMatrix m = represent_unguarded(el("B-1 B+1"), rep);
  CHECK(std::abs(m.coeff(0, 0) - Complex(2, 0)) <= kDirectTolerance);
  CHECK(number_operator(rep).coeff(0, 0) == Complex(1, 0));
  CHECK_THROWS_AS(verify_boson_degeneration(rep), std::invalid_argument);
}

TEST_CASE("Green ansatz satisfies the paraboson relations") {
  for (FockSpec spec : {FockSpec{1, 2, 6}, FockSpec{1, 3, 5}, FockSpec{2, 2, 4}, FockSpec{3, 1, 4}}) {
    const MatrixRep rep = build_green_ansatz(spec);
    const Report r = verify_paraboson_relations(rep);
    CHECK(r.all_passed());
    CHECK(r.entries().size() == 8 * std::size_t{spec.n} * spec.n * spec.n);
    CHECK(verify_hermiticity(rep).all_passed());
    CHECK(verify_g_relations(rep).all_passed());
  }
}

TEST_CASE("represent is linear and multiplicative") {
  const MatrixRep rep = build_green_ansatz(FockSpec{2, 2, 3});
  CHECK(max_abs(represent_unguarded(Element::unit(), rep) - represent_unguarded(el("K+ K-"), rep)) == 0.0);
  std::mt19937_64 rng(61);
  const auto alphabet = context_alphabet(ContextKind::ParabosonK, 2, true);
  for (int k = 0; k < 50; ++k) {
    const Element a = testing::random_element(rng, alphabet, 3, 3);
    const Element b = testing::random_element(rng, alphabet, 3, 3);
    const SparseMatrix ab = represent_unguarded(a * b, rep);
    CHECK(max_abs(ab - represent_unguarded(a, rep) * represent_unguarded(b, rep)) <= kDirectTolerance);
    CHECK(max_abs(represent_unguarded(a + b, rep) - represent_unguarded(a, rep) - represent_unguarded(b, rep)) <=
          kDirectTolerance);
  }
}

TEST_CASE("unrepresentable letters") {
  const MatrixRep rep = build_green_ansatz(FockSpec{2, 1, 4});
  CHECK_THROWS_AS(represent(el("B+3"), rep), UnrepresentableLetter);
  CHECK_THROWS_AS(represent(el("E(1+,3-)"), rep), UnrepresentableLetter);
  CHECK_NOTHROW(represent(el("g K+ B-2"), rep));
}

TEST_CASE("number operator") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 2, 6});
  CHECK(verify_number_operator(rep).all_passed());
  CHECK(max_abs(represent(el("B+1 B-1 + B-1 B+1"), rep) - number_operator(rep) * rep.selector(2) * Complex(2, 0)) <=
        kDirectTolerance);
  CHECK(verify_number_operator(build_green_ansatz(FockSpec{2, 3, 3})).all_passed());
}

TEST_CASE("commutators with powers of N") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 2, 6});
  const Report r = verify_casimcom(rep, 3);
  CHECK(r.all_passed());
  CHECK(r.entries().size() == 4 * 2);
  const Report s = verify_casimcom_symbolic(2, 1);
  CHECK(s.all_passed());
  CHECK(s.entries().size() == 3 * 2);
}

TEST_CASE("K matrices") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 2, 6});
  const auto [kp, km] = k_matrices(rep);
  for (std::size_t s = 0; s < rep.dimension(); ++s) {
    const double m = rep.total_occupancy(s);
    CHECK(std::abs(kp.coeff(s, s) - std::exp(Complex(0, M_PI * (m + 1)))) <= 1e-12);
  }
  CHECK(verify_k_relations(rep).all_passed());
  const Report odd = verify_k_relations(build_green_ansatz(FockSpec{1, 1, 6}));
  CHECK(odd.all_passed());
  REQUIRE(odd.select("k_plus_squared_is_identity").size() == 1);
  CHECK(odd.select("k_plus_squared_is_identity")[0].lhs == "not identity");
  CHECK(verify_k_relations(rep).select("k_plus_squared_is_identity")[0].lhs == "identity");
}

TEST_CASE("g is the parity of the occupation number") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 3, 4});
  const SparseMatrix g = g_matrix(rep);
  for (std::size_t s = 0; s < rep.dimension(); ++s)
    CHECK(g.coeff(s, s).real() == (rep.total_occupancy(s) % 2 ? -1.0 : 1.0));
  CHECK(max_abs(g * g - represent_unguarded(Element::unit(), rep)) == 0.0);
}

TEST_CASE("coproduct images are representations") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 2, 6});
  const Report g = tensor_rep_via_coproduct(rep, ContextKind::ParabosonG);
  CHECK(g.all_passed());
  CHECK(g.count(Status::Skip) == 0);
  CHECK(g.entries().size() == 8 + 3);
  CHECK(tensor_rep_via_coproduct(rep, ContextKind::ParabosonK).all_passed());
  const Report skipped = tensor_rep_via_coproduct(rep, ContextKind::ParabosonG, 100);
  CHECK(skipped.count(Status::Skip) == skipped.entries().size());
  CHECK_THROWS_AS(tensor_rep_via_coproduct(rep, ContextKind::Paraboson), std::invalid_argument);
}

TEST_CASE("the oracle detects wrong identities") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 2, 6});
  CHECK(guarded_residual(el("B-1 B+1"), el("B+1 B-1"), rep) > 0.5);
  CHECK(guarded_residual(el("B-1 E(1+,1-)"), el("E(1+,1-) B-1 + 3 B-1"), rep) > 0.5);
  CHECK(guarded_residual(el("B-1 E(1+,1-)"), el("E(1+,1-) B-1 + 2 B-1"), rep) <= kCompositionTolerance);
  CHECK(guarded_residual(el("g B+1"), el("B+1 g"), rep) > 0.5);
}

TEST_CASE("oracle agreement is reproducible") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 2, 6});
  std::mt19937_64 a(5), b(5);
  const Report ra = oracle_agreement(rep, ContextKind::ParabosonG, 100, 5, a);
  const Report rb = oracle_agreement(rep, ContextKind::ParabosonG, 100, 5, b);
  CHECK(ra.all_passed());
  CHECK(ra.to_json() == rb.to_json());
}

TEST_CASE("matrix export") {
  const MatrixRep rep = build_green_ansatz(FockSpec{1, 1, 2});
  const auto j = matrix_to_json(represent_unguarded(el("i B+1"), rep));
  CHECK(j["rows"] == 4);
  CHECK(j["cols"] == 4);
  CHECK(j["data"].size() == 4);
  CHECK(j["data"][3][0][0] == 0.0);
  CHECK(j["data"][3][0][1] == 1.0);
}
