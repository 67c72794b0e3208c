#ifndef PARABOSE_WORD_HPP
#define PARABOSE_WORD_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "parabose/generator.hpp"

namespace parabose {

/// Finite sequence of letters; the empty word is the unit I.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> letters) : letters_(letters) {}
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}
  explicit Word(std::span<const Generator> letters)
      : letters_(letters.begin(), letters.end()) {}

  std::span<const Generator> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Generator& operator[](std::size_t k) const { return letters_[k]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Number of odd letters mod 2.
  int parity() const;
  std::size_t count(LetterKind kind) const;

  Word reversed() const { return Word(std::vector<Generator>(letters_.rbegin(), letters_.rend())); }
  /// Letters [from, from + length).
  Word slice(std::size_t from, std::size_t length) const {
    return Word(std::span<const Generator>(letters_).subspan(from, length));
  }

  friend Word operator*(const Word& a, const Word& b);

  /// "I" for the unit, otherwise letters separated by single spaces.
  std::string str() const;

  /// Print order: longer words first, then lexicographic in the letter order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return b.size() <=> a.size();
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::vector<Generator> letters_;
};

}  // namespace parabose

template <>
struct std::hash<parabose::Word> {
  std::size_t operator()(const parabose::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ w.size();
    std::hash<parabose::Generator> letter_hash;
    for (const auto& x : w) h = (h ^ letter_hash(x)) * 0x100000001b3ULL;
    return h;
  }
};

#endif
