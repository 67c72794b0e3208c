#include <doctest.h>

#include "parabose/bosonization.hpp"
#include "parabose/super_hopf.hpp"
#include "support.hpp"

using namespace parabose;
using testing::el;

namespace {

const AlgebraContext& pbg() { return shared_context(ContextKind::ParabosonG); }
const AlgebraContext& pbk() { return shared_context(ContextKind::ParabosonK); }

TensorElement pair(const char* a, const char* h) { return tensor(el(a), el(h)); }

}  // namespace

TEST_CASE("CZ2 coaction") {
  CHECK(cz2_coaction(el("B+1")) == tensor(el("g"), el("B+1")));
  CHECK(cz2_coaction(Element::unit()) == tensor(Element::unit(), Element::unit()));
  CHECK(cz2_coaction(el("B+1 B-2")) == tensor(Element::unit(), el("B+1 B-2")));
  CHECK_THROWS_AS(cz2_coaction(el("I + B+1")), InhomogeneousInput);
}

TEST_CASE("smash product multiplication") {
  CHECK(smash_multiply(pair("I", "g"), pair("B+1", "I")) == pair("-B+1", "g"));
  CHECK(smash_multiply(pair("B+1", "I"), pair("B+2", "I")) == pair("B+1 B+2", "I"));
  CHECK(smash_multiply(pair("I", "g"), pair("I", "g")) == pair("I", "I"));
  CHECK(smash_pair(Word{Generator::g(), Generator::b_plus(1)}) == pair("-B+1", "g"));
  CHECK(from_smash_pair(pair("B+1", "g")) == el("B+1 g"));
}

TEST_CASE("explicit structure of the bosonised algebra") {
  CHECK(smash_coproduct(el("B+1")) == tensor(el("B+1"), Element::unit()) + tensor(el("g"), el("B+1")));
  CHECK(smash_coproduct(el("g")) == tensor(el("g"), el("g")));
  CHECK(smash_coproduct(el("g B+1")) ==
        reduce_slots(tensor(el("g B+1"), el("g")) + tensor(Element::unit(), el("g B+1")), pbg()));
  CHECK(smash_antipode(el("B+1")) == el("B+1 g"));
  CHECK(smash_antipode(el("g")) == el("g"));
  CHECK(smash_antipode(el("g B+1")) == el("B+1"));
  CHECK(smash_counit(el("B+1 g")).is_zero());
  CHECK(smash_counit(el("g")).is_one());
  const TensorElement d = smash_coproduct(el("B+1"));
  CHECK(multiply_slots(map_first(d, [](const Word& w) { return smash_antipode(Element(w)); }), pbg()).is_zero());
}

TEST_CASE("general smash-product formulas reproduce the explicit ones") {
  CHECK(drinfeld_element_cz2() == el("g"));
  CHECK(general_smash_coproduct(pair("B+1", "I")) == smash_coproduct(el("B+1")));
  CHECK(general_smash_coproduct(pair("I", "I")) == tensor(Element::unit(), Element::unit()));
  CHECK(general_smash_coproduct(smash_pair(Word{Generator::b_plus(1), Generator::b_minus(1)})) ==
        smash_coproduct(el("B+1 B-1")));
  CHECK(general_smash_antipode(pair("B+1", "I")) == el("B+1 g"));
  CHECK(general_smash_antipode(pair("I", "g")) == el("g"));
  CHECK(bosonise_from_general(2, 2).all_passed());
}

TEST_CASE("K extension") {
  CHECK(k_coproduct(el("B-2")) == tensor(el("B-2"), Element::unit()) + tensor(el("K-"), el("B-2")));
  CHECK(k_antipode(el("K+")) == el("K-"));
  CHECK(k_antipode(el("B+1")) == el("B+1 K-"));
  CHECK(k_coproduct(el("K+ K- - I")).is_zero());
  CHECK(k_counit(el("K+ B+1")).is_zero());
  const TensorElement d = k_coproduct(el("B+1"));
  CHECK(multiply_slots(map_first(d, [](const Word& w) { return k_antipode(Element(w)); }), pbk()).is_zero());
  CHECK_THROWS_AS(k_coproduct(el("g")), ForeignLetter);
}

TEST_CASE("ordinary Hopf suites on short words") {
  CHECK(check_ordinary_hopf_axioms(ContextKind::ParabosonG, 1, 2).all_passed());
  CHECK(check_ordinary_hopf_axioms(ContextKind::ParabosonG, 3, 2).all_passed());
  CHECK(check_ordinary_hopf_axioms(ContextKind::ParabosonK, 3, 1).all_passed());
  CHECK_THROWS_AS(check_ordinary_hopf_axioms(ContextKind::Paraboson, 1, 1), std::invalid_argument);
}

TEST_CASE("R_g") {
  const TensorElement r = r_matrix_cz2();
  CHECK(multiply(r, r, TensorSigns::Plain, pbg()) == tensor(Element::unit(), Element::unit()));
  const TensorElement conj =
      multiply(multiply(r, smash_coproduct(el("B+1")), TensorSigns::Plain, pbg()), r, TensorSigns::Plain, pbg());
  CHECK(conj == tensor(Element::unit(), el("B+1")) + tensor(el("B+1"), el("g")));
  CHECK(multiply(multiply(r, smash_coproduct(el("g")), TensorSigns::Plain, pbg()), r, TensorSigns::Plain, pbg()) ==
        tensor(el("g"), el("g")));
  const Report q = check_quasitriangularity_g(2, 2);
  CHECK(q.all_passed());
  CHECK(q.select("hexagon_left").size() == 1);
  CHECK(q.select("hexagon_right").size() == 1);
}
