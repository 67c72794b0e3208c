#ifndef PARABOSE_GENERATOR_HPP
#define PARABOSE_GENERATOR_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace parabose {

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Letter kinds, declared in the order letters take in a normal-form word:
/// anticommutator symbols first, then odd ladder letters, then the
/// group-like tail.
enum class LetterKind : std::uint8_t { E = 0, B = 1, G = 2, KPlus = 3, KMinus = 4 };

/// One letter of the generator alphabet.
///
/// B(s, i) is B_i^s. E(s1 i, s2 j) is the symbol for {B_i^s1, B_j^s2}; it is
/// stored with (s1, i) <= (s2, j) under (+ < -, then index). The defaulted
/// comparison is the letter order used by every rewriting system:
/// E(++) < E(+-) < E(--) < B+ < B- < g < K+ < K-, ties broken by indices.
struct Generator {
  LetterKind kind = LetterKind::B;
  Sign s1 = Sign::Plus;
  Sign s2 = Sign::Plus;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  static Generator b(Sign s, std::uint32_t index) {
    return {LetterKind::B, s, Sign::Plus, index, 0};
  }
  static Generator b_plus(std::uint32_t index) { return b(Sign::Plus, index); }
  static Generator b_minus(std::uint32_t index) { return b(Sign::Minus, index); }
  /// Anticommutator symbol {B_i^si, B_j^sj}, normalized to canonical orientation.
  static Generator e(std::uint32_t i, Sign si, std::uint32_t j, Sign sj);
  static Generator e_of(const Generator& x, const Generator& y) {
    return e(x.i, x.s1, y.i, y.s1);
  }
  static Generator g() { return {LetterKind::G, Sign::Plus, Sign::Plus, 0, 0}; }
  static Generator k_plus() { return {LetterKind::KPlus, Sign::Plus, Sign::Plus, 0, 0}; }
  static Generator k_minus() { return {LetterKind::KMinus, Sign::Plus, Sign::Plus, 0, 0}; }

  bool is_b() const { return kind == LetterKind::B; }
  bool is_e() const { return kind == LetterKind::E; }
  bool is_group_like() const { return kind >= LetterKind::G; }

  /// 1 for B letters, 0 otherwise.
  int parity() const { return kind == LetterKind::B ? 1 : 0; }

  /// For an E symbol, its two B factors (first, second).
  Generator first_factor() const { return b(s1, i); }
  Generator second_factor() const { return b(s2, j); }

  /// Grammar token: "B+1", "E(1+,2-)", "g", "K+".
  std::string str() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

}  // namespace parabose

template <>
struct std::hash<parabose::Generator> {
  std::size_t operator()(const parabose::Generator& x) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(x.kind);
    h = h * 4 + static_cast<std::uint64_t>(x.s1);
    h = h * 4 + static_cast<std::uint64_t>(x.s2);
    h = h * 0x100000001b3ULL + x.i;
    h = h * 0x100000001b3ULL + x.j;
    return static_cast<std::size_t>(h);
  }
};

#endif
