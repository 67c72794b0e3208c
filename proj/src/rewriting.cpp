#include "parabose/rewriting.hpp"

#include <mutex>
#include <unordered_map>

#include "parabose/sampling.hpp"

namespace parabose {

namespace detail {

struct ReductionCache {
  static constexpr std::size_t kCapacity = 400000;
  mutable std::mutex mutex;
  std::unordered_map<Word, Element> words;
};

}  // namespace detail

std::string_view context_name(ContextKind kind) {
  switch (kind) {
    case ContextKind::Free: return "free";
    case ContextKind::Boson: return "boson";
    case ContextKind::Paraboson: return "pb";
    case ContextKind::ParabosonG: return "pbg";
    case ContextKind::ParabosonK: return "pbk";
  }
  return "?";
}

std::optional<ContextKind> parse_context_kind(std::string_view name) {
  for (auto kind : {ContextKind::Free, ContextKind::Boson, ContextKind::Paraboson,
                    ContextKind::ParabosonG, ContextKind::ParabosonK}) {
    if (context_name(kind) == name) return kind;
  }
  return std::nullopt;
}

ForeignLetter::ForeignLetter(const Generator& letter, ContextKind ctx)
    : std::runtime_error("letter " + letter.str() + " is not in the alphabet of context " +
                         std::string(context_name(ctx))),
      letter_(letter) {}

AlgebraContext::AlgebraContext(ContextKind kind)
    : kind_(kind), cache_(std::make_shared<detail::ReductionCache>()) {}

bool AlgebraContext::admits(const Generator& x) const {
  switch (kind_) {
    case ContextKind::Free: return true;
    case ContextKind::Boson: return x.is_b();
    case ContextKind::Paraboson: return x.is_b() || x.is_e();
    case ContextKind::ParabosonG: return x.is_b() || x.is_e() || x.kind == LetterKind::G;
    case ContextKind::ParabosonK:
      return x.is_b() || x.is_e() || x.kind == LetterKind::KPlus || x.kind == LetterKind::KMinus;
  }
  return false;
}

void AlgebraContext::check_letters(const Word& w) const {
  for (const auto& x : w)
    if (!admits(x)) throw ForeignLetter(x, kind_);
}

void AlgebraContext::check_letters(const Element& a) const {
  for (const auto& [w, c] : a.terms()) check_letters(w);
}

Element eb_bracket(const Generator& e, const Generator& b) {
  const int xi = sign_value(e.s1);
  const int eta = sign_value(e.s2);
  const int eps = sign_value(b.s1);
  Element out;
  if (e.j == b.i) out.add_term(Word{e.first_factor()}, Scalar(eps - eta));
  if (e.i == b.i) out.add_term(Word{e.second_factor()}, Scalar(eps - xi));
  return out;
}

Element ee_bracket(const Generator& e1, const Generator& e2) {
  const Element c(e2.first_factor());
  const Element d(e2.second_factor());
  const Element ec = eb_bracket(e1, e2.first_factor());
  const Element ed = eb_bracket(e1, e2.second_factor());
  const Element quadratic = ec * d + c * ed + ed * c + d * ec;

  Element out;
  for (const auto& [w, coeff] : quadratic.terms()) {
    if (w.size() != 2 || !w[0].is_b() || !w[1].is_b())
      throw ClosureFailure("bracket of " + e1.str() + " and " + e2.str() + " left the quadratic span");
    if (w[0] == w[1]) {
      out.add_term(Word{Generator::e_of(w[0], w[1])}, coeff / Scalar(2));
      continue;
    }
    Scalar partner = quadratic.coefficient(Word{w[1], w[0]});
    if (partner != coeff)
      throw ClosureFailure("bracket of " + e1.str() + " and " + e2.str() +
                           " is not a combination of anticommutators");
    if (w[0] < w[1]) out.add_term(Word{Generator::e_of(w[0], w[1])}, coeff);
  }
  return out;
}

namespace {

Element pair_word(const Generator& a, const Generator& b, Scalar c = 1) {
  return Element(Word{a, b}, std::move(c));
}

std::optional<Element> boson_rule(const Generator& left, const Generator& right) {
  if (!(right < left)) return std::nullopt;
  Element out = pair_word(right, left);
  if (left.s1 == Sign::Minus && right.s1 == Sign::Plus && left.i == right.i) out += Element::unit();
  return out;
}

std::optional<Element> paraboson_rule(const Generator& left, const Generator& right) {
  if (left.is_b() && right.is_b()) {
    if (left == right) return Element(Generator::e_of(left, right)) * Scalar::rational(1, 2);
    if (left < right) return std::nullopt;
    return pair_word(right, left, -1) + Element(Generator::e_of(left, right));
  }
  if (left.is_b() && right.is_e()) return pair_word(right, left) - eb_bracket(right, left);
  if (left.is_e() && right.is_e()) {
    if (!(right < left)) return std::nullopt;
    return pair_word(right, left) + ee_bracket(left, right);
  }
  return std::nullopt;
}

std::optional<Element> group_like_rule(const Generator& left, const Generator& right) {
  if (!left.is_group_like()) return std::nullopt;
  if (right.is_e()) return pair_word(right, left);
  if (right.is_b()) return pair_word(right, left, -1);
  if (left.kind == LetterKind::G && right.kind == LetterKind::G) return Element::unit();
  if ((left.kind == LetterKind::KPlus && right.kind == LetterKind::KMinus) ||
      (left.kind == LetterKind::KMinus && right.kind == LetterKind::KPlus))
    return Element::unit();
  return std::nullopt;
}

}  // namespace

std::optional<Element> AlgebraContext::rewrite(const Generator& left, const Generator& right) const {
  switch (kind_) {
    case ContextKind::Free:
      return std::nullopt;
    case ContextKind::Boson:
      return boson_rule(left, right);
    case ContextKind::Paraboson:
      return paraboson_rule(left, right);
    case ContextKind::ParabosonG:
    case ContextKind::ParabosonK:
      if (left.is_group_like()) return group_like_rule(left, right);
      return paraboson_rule(left, right);
  }
  return std::nullopt;
}

namespace {

Word splice(const Word& w, std::size_t position, const Word& middle) {
  std::vector<Generator> out;
  out.reserve(w.size() + middle.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(position + 2), w.end());
  return Word(std::move(out));
}

}  // namespace

Element AlgebraContext::reduce(const Word& w) const {
  if (kind_ == ContextKind::Free || w.size() < 2) return Element(w);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->words.find(w);
    if (it != cache_->words.end()) return it->second;
  }
  Element out;
  bool reducible = false;
  for (std::size_t p = 0; p + 1 < w.size() && !reducible; ++p) {
    auto rhs = rewrite(w[p], w[p + 1]);
    if (!rhs) continue;
    reducible = true;
    for (const auto& [r, c] : rhs->terms()) {
      Element part = reduce(splice(w, p, r));
      part *= c;
      out += part;
    }
  }
  if (!reducible) out = Element(w);
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->words.size() >= detail::ReductionCache::kCapacity) cache_->words.clear();
    cache_->words.emplace(w, out);
  }
  return out;
}

std::size_t AlgebraContext::cache_size() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->words.size();
}

Element normal_form(const Element& a, const AlgebraContext& ctx) {
  ctx.check_letters(a);
  Element out;
  for (const auto& [w, c] : a.terms()) {
    Element part = ctx.reduce(w);
    part *= c;
    out += part;
  }
  return out;
}

Element normal_form_randomized(const Element& a, const AlgebraContext& ctx, std::mt19937_64& rng) {
  ctx.check_letters(a);
  Element current = a;
  for (;;) {
    std::vector<std::pair<Word, std::vector<std::size_t>>> candidates;
    for (const auto& [w, c] : current.terms()) {
      std::vector<std::size_t> positions;
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (ctx.rewrite(w[p], w[p + 1])) positions.push_back(p);
      if (!positions.empty()) candidates.emplace_back(w, std::move(positions));
    }
    if (candidates.empty()) return current;
    const auto& [w, positions] = candidates[uniform_index(rng, candidates.size())];
    const std::size_t p = positions[uniform_index(rng, positions.size())];
    const Scalar c = current.coefficient(w);
    Element replaced;
    const Element rhs = *ctx.rewrite(w[p], w[p + 1]);
    for (const auto& [r, rc] : rhs.terms()) replaced.add_term(splice(w, p, r), rc * c);
    current -= Element(w, c);
    current += replaced;
  }
}

TermOrderKey term_order_key(const Word& w) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[b] < w[a]) ++inversions;
  return {w.count(LetterKind::B), w.size(), inversions};
}

Element expand_E(const Element& a) {
  Element out;
  for (const auto& [w, c] : a.terms()) {
    Element expanded = Element::unit();
    for (const auto& x : w) {
      if (x.is_e()) {
        expanded = expanded * anticommutator(Element(x.first_factor()), Element(x.second_factor()));
      } else {
        expanded = expanded * Element(x);
      }
    }
    out += expanded * c;
  }
  return out;
}

std::vector<Generator> e_symbols(std::uint32_t max_index) {
  std::vector<Generator> out;
  for (Sign si : {Sign::Plus, Sign::Minus})
    for (Sign sj : {Sign::Plus, Sign::Minus})
      for (std::uint32_t i = 1; i <= max_index; ++i)
        for (std::uint32_t j = 1; j <= max_index; ++j) {
          Generator e = Generator::e(i, si, j, sj);
          if (e.i == i && e.s1 == si && e.j == j && e.s2 == sj) out.push_back(e);
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BracketRule> derive_EE_brackets(std::uint32_t max_index) {
  std::vector<BracketRule> table;
  const auto symbols = e_symbols(max_index);
  for (std::size_t a = 0; a < symbols.size(); ++a)
    for (std::size_t b = a + 1; b < symbols.size(); ++b)
      table.push_back({symbols[a], symbols[b], ee_bracket(symbols[a], symbols[b])});
  return table;
}

Element phi_replacement(const Element& a) {
  static const AlgebraContext boson(ContextKind::Boson);
  for (const auto& [w, c] : a.terms())
    for (const auto& x : w)
      if (x.is_group_like()) throw ForeignLetter(x, ContextKind::Boson);
  return normal_form(expand_E(a), boson);
}

}  // namespace parabose
