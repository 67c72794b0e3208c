#include "parabose/word.hpp"

namespace parabose {

int Word::parity() const {
  int odd = 0;
  for (const auto& x : letters_) odd += x.parity();
  return odd % 2;
}

std::size_t Word::count(LetterKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [kind](const Generator& x) { return x.kind == kind; }));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Generator> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "I";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += letters_[k].str();
  }
  return out;
}

}  // namespace parabose
