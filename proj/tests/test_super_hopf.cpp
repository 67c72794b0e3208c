#include <doctest.h>

#include <random>

#include "parabose/relations.hpp"
#include "parabose/super_hopf.hpp"
#include "support.hpp"

using namespace parabose;
using testing::el;

namespace {

const AlgebraContext& pb() { return shared_context(ContextKind::Paraboson); }

Element homogeneous(std::mt19937_64& rng, const std::vector<Generator>& alphabet, bool odd) {
  Element a;
  while (a.is_zero()) {
    const Element raw = testing::random_element(rng, alphabet, 4, 3);
    const auto parts = parity_decompose(raw);
    a = odd ? parts.odd : parts.even;
  }
  return a;
}

}  // namespace

TEST_CASE("braiding") {
  CHECK(braiding(el("B+1"), el("B+2")) == tensor(el("-B+2"), el("B+1")));
  CHECK(braiding(Element::unit(), el("B+1")) == tensor(el("B+1"), Element::unit()));
  CHECK(braiding(el("B+1 B-2"), el("B+3")) == tensor(el("B+3"), el("B+1 B-2")));
}

TEST_CASE("braiding is an involution") {
  std::mt19937_64 rng(41);
  const auto alphabet = context_alphabet(ContextKind::Paraboson, 2, true);
  for (int k = 0; k < 100; ++k) {
    const Element v = homogeneous(rng, alphabet, uniform_index(rng, 2) == 1);
    const Element w = homogeneous(rng, alphabet, uniform_index(rng, 2) == 1);
    CHECK(braiding(braiding(v, w)) == tensor(v, w));
  }
}

TEST_CASE("braided tensor product") {
  CHECK(braided_multiply(tensor(Element::unit(), el("B+1")), tensor(el("B+2"), Element::unit()), pb()) ==
        tensor(el("-B+2"), el("B+1")));
  const TensorElement x = tensor(el("B+1 + E(1+,2-)"), el("B-2"));
  CHECK(braided_multiply(tensor(Element::unit(), Element::unit()), x, pb()) == reduce_slots(x, pb()));
  CHECK(braided_multiply(tensor(el("B+1"), Element::unit()), tensor(Element::unit(), el("B+2")), pb()) ==
        tensor(el("B+1"), el("B+2")));
}

TEST_CASE("coproduct") {
  CHECK(coproduct(el("B+1")) == tensor(Element::unit(), el("B+1")) + tensor(el("B+1"), Element::unit()));
  CHECK(coproduct(Element::unit()) == tensor(Element::unit(), Element::unit()));
  CHECK(coproduct(el("B+1 B+2")).str() == "[B+1 B+2 | I] + [B+1 | B+2] - [B+2 | B+1] + [I | B+1 B+2]");
}

TEST_CASE("counit") {
  CHECK(counit(el("B+1")).is_zero());
  CHECK(counit(Element::unit()).is_one());
  CHECK(counit(el("3 I + B+1 B-1")) == Scalar(3));
  CHECK(counit(el("E(1+,1-)")).is_zero());
}

TEST_CASE("antipode") {
  CHECK(antipode(el("B+1")) == el("-B+1"));
  CHECK(antipode(Element::unit()) == Element::unit());
  CHECK(antipode(el("B+1 B+2")) == normal_form(el("-B+2 B+1"), pb()));
  CHECK(antipode(el("E(1+,2-)")) == el("-E(1+,2-)"));
  CHECK(antipode(antipode(el("B+1 B-2 E(1+,1+)"))) == normal_form(el("B+1 B-2 E(1+,1+)"), pb()));
}

TEST_CASE("antipode convolution on an even word") {
  const TensorElement d = coproduct(el("B+1 B-1"));
  CHECK(multiply_slots(map_first(d, [](const Word& w) { return antipode(w); }), pb()).is_zero());
}

TEST_CASE("coproduct is a homomorphism into the braided square") {
  std::mt19937_64 rng(43);
  const auto alphabet = context_alphabet(ContextKind::Paraboson, 2, true);
  for (int k = 0; k < 150; ++k) {
    const Element a = testing::random_element(rng, alphabet, 3, 2);
    const Element b = testing::random_element(rng, alphabet, 3, 2);
    CHECK(coproduct(normal_form(a * b, pb())) == braided_multiply(coproduct(a), coproduct(b), pb()));
    CHECK(counit(normal_form(a * b, pb())) == counit(a) * counit(b));
  }
}

TEST_CASE("structure maps vanish on the ideal") {
  for (const auto& r : paraboson_relations(2)) {
    CHECK(coproduct(r.element).is_zero());
    CHECK(counit(r.element).is_zero());
    CHECK(antipode(r.element).is_zero());
  }
}

TEST_CASE("axiom suite") {
  const Report gens = check_super_hopf_axioms(1, 2);
  CHECK(gens.all_passed());
  CHECK_FALSE(gens.select("coassociativity").empty());
  const Report r = check_super_hopf_axioms(3, 2);
  CHECK(r.all_passed());
  CHECK(r.select("ideal_coproduct").size() == 64);
  for (const char* axiom : {"coassociativity", "counit_left", "counit_right", "antipode_left", "antipode_right"})
    CHECK(r.select(axiom).size() == 4 + 16 + 64);
}

TEST_CASE("CZ2 R-matrix") {
  const TensorElement r = r_matrix_cz2();
  CHECK(r.size() == 4);
}
