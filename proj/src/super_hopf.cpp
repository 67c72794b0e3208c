#include "parabose/super_hopf.hpp"

#include <mutex>
#include <unordered_map>

#include "parabose/relations.hpp"
#include "parabose/sampling.hpp"

namespace parabose {

const AlgebraContext& shared_context(ContextKind kind) {
  static const AlgebraContext contexts[] = {
      AlgebraContext(ContextKind::Free),       AlgebraContext(ContextKind::Boson),
      AlgebraContext(ContextKind::Paraboson),  AlgebraContext(ContextKind::ParabosonG),
      AlgebraContext(ContextKind::ParabosonK),
  };
  return contexts[static_cast<int>(kind)];
}

namespace {

const AlgebraContext& pb() { return shared_context(ContextKind::Paraboson); }

void require_paraboson(const Word& w) { pb().check_letters(w); }

TensorElement letter_coproduct(const Generator& x) {
  if (x.is_e()) {
    const TensorElement a = letter_coproduct(x.first_factor());
    const TensorElement b = letter_coproduct(x.second_factor());
    return braided_multiply(a, b, pb()) + braided_multiply(b, a, pb());
  }
  return tensor(Element::unit(), Element(x)) + tensor(Element(x), Element::unit());
}

}  // namespace

TensorElement braiding(const TensorElement& t) { return swap_slots(t, TensorSigns::Koszul); }

TensorElement braiding(const Element& v, const Element& w) { return braiding(tensor(v, w)); }

TensorElement braided_multiply(const TensorElement& x, const TensorElement& y, const AlgebraContext& ctx) {
  return multiply(x, y, TensorSigns::Koszul, ctx);
}

TensorElement coproduct(const Word& w) {
  require_paraboson(w);
  TensorElement acc = tensor(Element::unit(), Element::unit());
  for (const auto& x : w) acc = braided_multiply(acc, letter_coproduct(x), pb());
  return acc;
}

TensorElement coproduct(const Element& a) {
  TensorElement out;
  for (const auto& [w, c] : a.terms()) out += coproduct(w) * c;
  return out;
}

Scalar counit(const Word& w) {
  require_paraboson(w);
  for (const auto& x : w)
    if (x.is_b() || x.is_e()) return 0;
  return 1;
}

Scalar counit(const Element& a) {
  Scalar out;
  for (const auto& [w, c] : a.terms()) out += c * counit(w);
  return out;
}

namespace {

// Unreduced S on one letter.
Element letter_antipode(const Generator& x) {
  if (x.is_e()) {
    // S(B_a B_b) = -S(B_b) S(B_a) for odd B's.
    const Element sa = letter_antipode(x.first_factor());
    const Element sb = letter_antipode(x.second_factor());
    return -(sb * sa) - (sa * sb);
  }
  return -Element(x);
}

}  // namespace

Element antipode(const Word& w) {
  require_paraboson(w);
  int exponent = 0;
  int odd_seen = 0;
  for (const auto& x : w) {
    exponent += odd_seen * x.parity();
    odd_seen += x.parity();
  }
  Element acc = Element::unit();
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) acc = acc * letter_antipode(*it);
  if (exponent % 2) acc = -acc;
  return normal_form(acc, pb());
}

Element antipode(const Element& a) {
  Element out;
  for (const auto& [w, c] : a.terms()) out += antipode(w) * c;
  return out;
}

TensorElement r_matrix_cz2() {
  const Word one{};
  const Word g{Generator::g()};
  const Scalar half = Scalar::rational(1, 2);
  TensorElement r;
  r.add_term({one, one}, half);
  r.add_term({one, g}, half);
  r.add_term({g, one}, half);
  r.add_term({g, g}, -half);
  return r;
}

Report check_super_hopf_axioms(std::size_t max_len, std::uint32_t max_index) {
  const std::string ctx = "pb";
  Report report;

  std::unordered_map<Word, TensorElement> delta_memo;
  auto delta = [&](const Word& w) -> TensorElement {
    auto it = delta_memo.find(w);
    if (it != delta_memo.end()) return it->second;
    return delta_memo.emplace(w, coproduct(w)).first->second;
  };
  auto eps = [](const Word& w) { return counit(w); };
  auto s = [](const Word& w) { return antipode(w); };

  const auto words = all_words(context_alphabet(ContextKind::Paraboson, max_index), max_len);
  for (const auto& w : words) {
    const std::string name = w.str();
    const Element nf = pb().reduce(w);
    const TensorElement dw = delta(w);

    const TripleTensor left = expand_first(dw, delta);
    const TripleTensor right = expand_second(dw, delta);
    report.add(ctx, "coassociativity", name, left == right, left.str(), right.str());

    const Element cl = contract_first(dw, eps);
    const Element cr = contract_second(dw, eps);
    report.add(ctx, "counit_left", name, cl == nf, cl.str(), nf.str());
    report.add(ctx, "counit_right", name, cr == nf, cr.str(), nf.str());

    const Element unit_eps = Element::scalar(counit(w));
    const Element al = multiply_slots(map_first(dw, s), pb());
    const Element ar = multiply_slots(map_second(dw, s), pb());
    report.add(ctx, "antipode_left", name, al == unit_eps, al.str(), unit_eps.str());
    report.add(ctx, "antipode_right", name, ar == unit_eps, ar.str(), unit_eps.str());

    // Delta is well defined on the quotient: it agrees on w and on nf(w).
    const TensorElement dnf = coproduct(nf);
    report.add(ctx, "coproduct_on_normal_form", name, dnf == dw, dnf.str(), dw.str());

    const TensorElement flipped = braiding(dw);
    report.add(ctx, "super_cocommutativity", name, flipped == dw, flipped.str(), dw.str());

    const Element ssw = antipode(antipode(w));
    report.add(ctx, "antipode_involution", name, ssw == nf, ssw.str(), nf.str());

    const Scalar es = counit(antipode(w));
    report.add(ctx, "counit_of_antipode", name, es == counit(w), es.str(), counit(w).str());

    const TensorElement ds = coproduct(antipode(w));
    const TensorElement ssd = reduce_slots(map_second(map_first(braiding(dw), s), s), pb());
    report.add(ctx, "coproduct_of_antipode", name, ds == ssd, ds.str(), ssd.str());
  }

  for (const auto& rel : paraboson_relations(max_index)) {
    TensorElement d;
    for (const auto& [w, c] : rel.element.terms()) d += coproduct(w) * c;
    report.add(ctx, "ideal_coproduct", rel.label, d.is_zero(), d.str(), "0");
    const Scalar e = counit(rel.element);
    report.add(ctx, "ideal_counit", rel.label, e.is_zero(), e.str(), "0");
    const Element sr = antipode(rel.element);
    report.add(ctx, "ideal_antipode", rel.label, sr.is_zero(), sr.str(), "0");
  }
  return report;
}

}  // namespace parabose
