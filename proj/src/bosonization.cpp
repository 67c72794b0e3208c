#include "parabose/bosonization.hpp"

#include <unordered_map>

#include "parabose/relations.hpp"
#include "parabose/sampling.hpp"
#include "parabose/super_hopf.hpp"

namespace parabose {

namespace {

const AlgebraContext& pbg() { return shared_context(ContextKind::ParabosonG); }

// The explicit structure maps of one of the two ordinary Hopf extensions.
class OrdinaryHopf {
 public:
  explicit OrdinaryHopf(ContextKind kind) : kind_(kind), ctx_(shared_context(kind)) {}

  const AlgebraContext& ctx() const { return ctx_; }

  TensorElement coproduct(const Word& w) const {
    ctx_.check_letters(w);
    TensorElement acc = tensor(Element::unit(), Element::unit());
    for (const auto& x : w) acc = multiply(acc, letter_coproduct(x), TensorSigns::Plain, ctx_);
    return acc;
  }

  TensorElement coproduct(const Element& a) const {
    TensorElement out;
    for (const auto& [w, c] : a.terms()) out += coproduct(w) * c;
    return out;
  }

  Scalar counit(const Word& w) const {
    ctx_.check_letters(w);
    for (const auto& x : w)
      if (x.is_b() || x.is_e()) return 0;
    return 1;
  }

  Scalar counit(const Element& a) const {
    Scalar out;
    for (const auto& [w, c] : a.terms()) out += c * counit(w);
    return out;
  }

  Element antipode(const Word& w) const {
    ctx_.check_letters(w);
    Element acc = Element::unit();
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) acc = acc * letter_antipode(*it);
    return normal_form(acc, ctx_);
  }

  Element antipode(const Element& a) const {
    Element out;
    for (const auto& [w, c] : a.terms()) out += antipode(w) * c;
    return out;
  }

  /// The group-like letter that accompanies B^s in its coproduct.
  Generator companion(const Generator& b) const {
    if (kind_ == ContextKind::ParabosonG) return Generator::g();
    return b.s1 == Sign::Plus ? Generator::k_plus() : Generator::k_minus();
  }

  /// Conjugation w -> c w c^-1 by the grading element (g, or K+ with inverse K-).
  Element conjugate(const Word& w) const {
    const Word left{kind_ == ContextKind::ParabosonG ? Generator::g() : Generator::k_plus()};
    const Word right{kind_ == ContextKind::ParabosonG ? Generator::g() : Generator::k_minus()};
    return ctx_.reduce(left * w * right);
  }

 private:
  TensorElement letter_coproduct(const Generator& x) const {
    if (x.is_e()) {
      const TensorElement a = letter_coproduct(x.first_factor());
      const TensorElement b = letter_coproduct(x.second_factor());
      return multiply(a, b, TensorSigns::Plain, ctx_) + multiply(b, a, TensorSigns::Plain, ctx_);
    }
    if (x.is_b()) return tensor(Element(x), Element::unit()) + tensor(Element(companion(x)), Element(x));
    return tensor(Element(x), Element(x));
  }

  Element letter_antipode(const Generator& x) const {
    if (x.is_e()) {
      const Element sa = letter_antipode(x.first_factor());
      const Element sb = letter_antipode(x.second_factor());
      return sb * sa + sa * sb;
    }
    if (x.is_b()) {
      const Generator k = companion(x);
      const Generator inverse = k.kind == LetterKind::KPlus    ? Generator::k_minus()
                                : k.kind == LetterKind::KMinus ? Generator::k_plus()
                                                               : Generator::g();
      return Element(Word{x, inverse});
    }
    switch (x.kind) {
      case LetterKind::KPlus: return Element(Generator::k_minus());
      case LetterKind::KMinus: return Element(Generator::k_plus());
      default: return Element(x);
    }
  }

  ContextKind kind_;
  const AlgebraContext& ctx_;
};

const OrdinaryHopf& smash_hopf() {
  static const OrdinaryHopf h(ContextKind::ParabosonG);
  return h;
}

const OrdinaryHopf& k_hopf() {
  static const OrdinaryHopf h(ContextKind::ParabosonK);
  return h;
}

const OrdinaryHopf& hopf_for(ContextKind kind) {
  if (kind == ContextKind::ParabosonG) return smash_hopf();
  if (kind == ContextKind::ParabosonK) return k_hopf();
  throw std::invalid_argument("ordinary Hopf structure exists only for pbg and pbk");
}

// h |> a for h a word in g: (-1)^{#g |a|} a, termwise.
Element act(const Word& h, const Element& a) {
  const bool flips = h.count(LetterKind::G) % 2 == 1;
  return flips ? g_action(a) : a;
}

Element act(const Element& h, const Element& a) {
  Element out;
  for (const auto& [w, c] : h.terms()) out += act(w, a) * c;
  return out;
}

// S_H on words in g: g^-1 = g, reversal is trivial.
Word antipode_h(const Word& h) { return h.reversed(); }

}  // namespace

TensorElement smash_coproduct(const Element& a) { return smash_hopf().coproduct(a); }
Scalar smash_counit(const Element& a) { return smash_hopf().counit(a); }
Element smash_antipode(const Element& a) { return smash_hopf().antipode(a); }

TensorElement k_coproduct(const Element& a) { return k_hopf().coproduct(a); }
Scalar k_counit(const Element& a) { return k_hopf().counit(a); }
Element k_antipode(const Element& a) { return k_hopf().antipode(a); }

TensorElement cz2_coaction(const Element& a) {
  auto [even, odd] = parity_decompose(a);
  if (!even.is_zero() && !odd.is_zero()) throw InhomogeneousInput("coaction needs a homogeneous element");
  if (!odd.is_zero()) return tensor(Element(Generator::g()), odd);
  return tensor(Element::unit(), even);
}

TensorElement smash_multiply(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      pbg().check_letters(kx[0]);
      pbg().check_letters(ky[0]);
      // h is group-like in CZ2, so h_1 (x) h_2 = h (x) h.
      const Element acted = act(kx[1], Element(ky[0]));
      for (const auto& [c, cc] : acted.terms()) out.add_term({kx[0] * c, kx[1] * ky[1]}, cx * cy * cc);
    }
  return reduce_slots(out, pbg());
}

TensorElement smash_pair(const Word& w) {
  pbg().check_letters(w);
  TensorElement acc({Word{}, Word{}});
  for (const auto& x : w) {
    const TensorElement image = x.kind == LetterKind::G ? TensorElement({Word{}, Word{x}})
                                                        : TensorElement({Word{x}, Word{}});
    acc = smash_multiply(acc, image);
  }
  return acc;
}

Element from_smash_pair(const TensorElement& pair) { return multiply_slots(pair, pbg()); }

TensorElement general_smash_coproduct(const TensorElement& pair) {
  const TensorElement r = r_matrix_cz2();
  TensorElement out;
  for (const auto& [key, c] : pair.terms()) {
    const Word& h = key[1];
    const TensorElement da = coproduct(key[0]);
    for (const auto& [a, ca] : da.terms())
      for (const auto& [rk, cr] : r.terms()) {
        const Element acted = act(rk[0], Element(a[1]));
        for (const auto& [a2, c2] : acted.terms())
          out.add_term({a[0] * rk[1] * h, a2 * h}, c * ca * cr * c2);
      }
  }
  return reduce_slots(out, pbg());
}

Element drinfeld_element_cz2() {
  Element u;
  const TensorElement r = r_matrix_cz2();
  for (const auto& [rk, cr] : r.terms()) u.add_term(antipode_h(rk[1]) * rk[0], cr);
  return normal_form(u, pbg());
}

Element general_smash_antipode(const TensorElement& pair) {
  const TensorElement r = r_matrix_cz2();
  const Element u = drinfeld_element_cz2();
  Element out;
  for (const auto& [key, c] : pair.terms()) {
    const Word& h = key[1];
    const Element sa = antipode(Element(key[0]));
    for (const auto& [rk, cr] : r.terms()) {
      const Element acting = normal_form(Element(antipode_h(h)) * u * Element(rk[0]), pbg());
      const Element a_part = act(acting, sa);
      const Element h_part(antipode_h(rk[1] * h));
      out += a_part * h_part * (c * cr);
    }
  }
  return normal_form(out, pbg());
}

Report bosonise_from_general(std::size_t max_len, std::uint32_t max_index) {
  const std::string ctx = "pbg";
  Report report;
  const Element u = drinfeld_element_cz2();
  const Element g(Generator::g());
  report.add(ctx, "drinfeld_element", "u", u == g, u.str(), g.str());

  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::uint32_t i = 1; i <= max_index; ++i) {
      const Element b(Generator::b(s, i));
      const Element right = normal_form(b * g, pbg());
      const Element left = normal_form(-(g * b), pbg());
      const Element prop = normal_form(g * antipode(b), pbg());
      report.add(ctx, "antipode_forms_Bg_vs_minus_gB", b.str(), right == left, right.str(), left.str());
      report.add(ctx, "antipode_forms_Bg_vs_g_superS", b.str(), right == prop, right.str(), prop.str());
    }

  for (const auto& w : all_words(context_alphabet(ContextKind::ParabosonG, max_index), max_len)) {
    const std::string name = w.str();
    const TensorElement pair = smash_pair(w);
    const Element identified = from_smash_pair(pair);
    const Element direct = pbg().reduce(w);
    report.add(ctx, "smash_identification", name, identified == direct, identified.str(), direct.str());

    const TensorElement dg = general_smash_coproduct(pair);
    const TensorElement dd = smash_coproduct(Element(w));
    report.add(ctx, "coproduct_general_vs_explicit", name, dg == dd, dg.str(), dd.str());

    const Element sg = general_smash_antipode(pair);
    const Element sd = smash_antipode(Element(w));
    report.add(ctx, "antipode_general_vs_explicit", name, sg == sd, sg.str(), sd.str());

    if (w.count(LetterKind::G) == 0) {
      // D(a) = a_1 g^{|a_2|} (x) a_2 and S(a) = g^{|a|} S_super(a).
      TensorElement dp;
      const TensorElement super = coproduct(w);
      for (const auto& [key, c] : super.terms()) {
        const Word twist = key[1].parity() ? Word{Generator::g()} : Word{};
        dp.add_term({key[0] * twist, key[1]}, c);
      }
      dp = reduce_slots(dp, pbg());
      report.add(ctx, "coproduct_bosonisation_formula", name, dp == dd, dp.str(), dd.str());
      const Element twist = w.parity() ? g : Element::unit();
      const Element sp = normal_form(twist * antipode(w), pbg());
      report.add(ctx, "antipode_bosonisation_formula", name, sp == sd, sp.str(), sd.str());
    }
  }
  return report;
}

Report check_ordinary_hopf_axioms(ContextKind kind, std::size_t max_len, std::uint32_t max_index) {
  const OrdinaryHopf& hopf = hopf_for(kind);
  const AlgebraContext& ctx = hopf.ctx();
  const std::string name_ctx(context_name(kind));
  Report report;

  std::unordered_map<Word, TensorElement> memo;
  auto delta = [&](const Word& w) -> TensorElement {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    return memo.emplace(w, hopf.coproduct(w)).first->second;
  };
  auto eps = [&](const Word& w) { return hopf.counit(w); };
  auto s = [&](const Word& w) { return hopf.antipode(w); };

  for (const auto& w : all_words(context_alphabet(kind, max_index), max_len)) {
    const std::string name = w.str();
    const Element nf = ctx.reduce(w);
    const TensorElement dw = delta(w);

    const TripleTensor left = expand_first(dw, delta);
    const TripleTensor right = expand_second(dw, delta);
    report.add(name_ctx, "coassociativity", name, left == right, left.str(), right.str());

    const Element cl = contract_first(dw, eps);
    const Element cr = contract_second(dw, eps);
    report.add(name_ctx, "counit_left", name, cl == nf, cl.str(), nf.str());
    report.add(name_ctx, "counit_right", name, cr == nf, cr.str(), nf.str());

    const Element unit_eps = Element::scalar(hopf.counit(w));
    const Element al = multiply_slots(map_first(dw, s), ctx);
    const Element ar = multiply_slots(map_second(dw, s), ctx);
    report.add(name_ctx, "antipode_left", name, al == unit_eps, al.str(), unit_eps.str());
    report.add(name_ctx, "antipode_right", name, ar == unit_eps, ar.str(), unit_eps.str());

    const TensorElement dnf = hopf.coproduct(nf);
    report.add(name_ctx, "coproduct_on_normal_form", name, dnf == dw, dnf.str(), dw.str());

    const Scalar es = hopf.counit(hopf.antipode(w));
    report.add(name_ctx, "counit_of_antipode", name, es == hopf.counit(w), es.str(), hopf.counit(w).str());

    const Element conj = hopf.conjugate(w);
    const Element graded = w.parity() ? -nf : nf;
    report.add(name_ctx, "grading_inner_automorphism", name, conj == graded, conj.str(), graded.str());

    const Element ss = hopf.antipode(hopf.antipode(w));
    report.add(name_ctx, "antipode_square_is_conjugation", name, ss == conj, ss.str(), conj.str());
  }

  auto relations = paraboson_relations(max_index);
  auto extra = kind == ContextKind::ParabosonG ? g_relations(max_index) : k_relations(max_index);
  relations.insert(relations.end(), extra.begin(), extra.end());
  for (const auto& rel : relations) {
    const TensorElement d = hopf.coproduct(rel.element);
    report.add(name_ctx, "ideal_coproduct", rel.label, d.is_zero(), d.str(), "0");
    const Scalar e = hopf.counit(rel.element);
    report.add(name_ctx, "ideal_counit", rel.label, e.is_zero(), e.str(), "0");
    const Element sr = hopf.antipode(rel.element);
    report.add(name_ctx, "ideal_antipode", rel.label, sr.is_zero(), sr.str(), "0");
  }
  return report;
}

namespace {

TripleTensor embed(const TensorElement& r, std::size_t first, std::size_t second) {
  TripleTensor out;
  for (const auto& [key, c] : r.terms()) {
    std::array<Word, 3> slots{};
    slots[first] = key[0];
    slots[second] = key[1];
    out.add_term(slots, c);
  }
  return out;
}

}  // namespace

Report check_quasitriangularity_g(std::size_t max_len, std::uint32_t max_index) {
  const std::string ctx = "pbg";
  const OrdinaryHopf& hopf = smash_hopf();
  Report report;
  const TensorElement r = r_matrix_cz2();
  const TensorElement one({Word{}, Word{}});

  const TensorElement rr = multiply(r, r, TensorSigns::Plain, pbg());
  report.add(ctx, "r_matrix_involutive", "R_g R_g", rr == one, rr.str(), one.str());

  auto delta = [&](const Word& w) { return hopf.coproduct(w); };
  const TripleTensor r13 = embed(r, 0, 2);
  const TripleTensor r23 = embed(r, 1, 2);
  const TripleTensor r12 = embed(r, 0, 1);
  const TripleTensor h1 = reduce_slots(expand_first(r, delta), pbg());
  const TripleTensor h1r = multiply(r13, r23, TensorSigns::Plain, pbg());
  report.add(ctx, "hexagon_left", "(D(x)id)R = R13 R23", h1 == h1r, h1.str(), h1r.str());
  const TripleTensor h2 = reduce_slots(expand_second(r, delta), pbg());
  const TripleTensor h2r = multiply(r13, r12, TensorSigns::Plain, pbg());
  report.add(ctx, "hexagon_right", "(id(x)D)R = R13 R12", h2 == h2r, h2.str(), h2r.str());

  for (const auto& w : all_words(context_alphabet(ContextKind::ParabosonG, max_index), max_len)) {
    const TensorElement dw = hopf.coproduct(w);
    const TensorElement conj = multiply(multiply(r, dw, TensorSigns::Plain, pbg()), r, TensorSigns::Plain, pbg());
    const TensorElement op = swap_slots(dw, TensorSigns::Plain);
    report.add(ctx, "r_conjugates_coproduct_to_opposite", w.str(), conj == op, conj.str(), op.str());
  }
  return report;
}

}  // namespace parabose
