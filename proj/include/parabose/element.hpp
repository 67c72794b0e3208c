#ifndef PARABOSE_ELEMENT_HPP
#define PARABOSE_ELEMENT_HPP

#include <map>
#include <string>
#include <utility>

#include "parabose/scalar.hpp"
#include "parabose/word.hpp"

namespace parabose {

/// Exact formal linear combination of words. Zero coefficients are never
/// stored, so two Elements are equal iff their term maps are equal.
class Element {
 public:
  using Terms = std::map<Word, Scalar>;

  Element() = default;
  Element(const Word& w, Scalar c = 1) { add_term(w, std::move(c)); }
  Element(const Generator& x) : Element(Word{x}) {}  // NOLINT: letters promote
  static Element unit() { return Element(Word{}); }
  static Element scalar(Scalar c) { return Element(Word{}, std::move(c)); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of w (zero if absent).
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  Element operator-() const { return *this * Scalar(-1); }

  /// Free-algebra product: bilinear extension of concatenation.
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element&, const Element&) = default;

  /// Max letter count over terms (0 for scalars and for zero).
  std::size_t max_length() const;

  /// Prints in the expression grammar, terms in Word print order; "0" for zero.
  std::string str() const;

 private:
  Terms terms_;
};

/// Free-algebra product, named after the operation it implements.
inline Element concat_multiply(const Element& a, const Element& b) { return a * b; }

struct ParityParts {
  Element even;
  Element odd;
};

ParityParts parity_decompose(const Element& a);

/// g |> a = (-1)^|a| a, extended linearly.
Element g_action(const Element& a);

/// a^k in the free algebra (k = 0 gives I).
Element power(const Element& a, unsigned k);

/// ab - ba and ab + ba in the free algebra.
Element commutator(const Element& a, const Element& b);
Element anticommutator(const Element& a, const Element& b);

}  // namespace parabose

#endif
