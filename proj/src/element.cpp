#include "parabose/element.hpp"

namespace parabose {

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar{} : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

std::size_t Element::max_length() const {
  std::size_t len = 0;
  for (const auto& [w, c] : terms_) len = std::max(len, w.size());
  return len;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Scalar coeff = c;
    if (!first) {
      const bool negative = coeff.is_real() ? sgn(coeff.re()) < 0 : sgn(coeff.re()) == 0 && sgn(coeff.im()) < 0;
      if (negative) {
        out += " - ";
        coeff = -coeff;
      } else {
        out += " + ";
      }
    }
    first = false;
    if (w.empty()) {
      out += coeff.is_one() ? "I" : coeff.str() + " I";
    } else {
      if (!coeff.is_one()) out += coeff.str() + " ";
      out += w.str();
    }
  }
  return out;
}

ParityParts parity_decompose(const Element& a) {
  ParityParts parts;
  for (const auto& [w, c] : a.terms()) (w.parity() ? parts.odd : parts.even).add_term(w, c);
  return parts;
}

Element g_action(const Element& a) {
  auto [even, odd] = parity_decompose(a);
  return even - odd;
}

Element power(const Element& a, unsigned k) {
  Element out = Element::unit();
  for (unsigned n = 0; n < k; ++n) out = out * a;
  return out;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }
Element anticommutator(const Element& a, const Element& b) { return a * b + b * a; }

}  // namespace parabose
