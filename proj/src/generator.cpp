#include "parabose/generator.hpp"

#include <tuple>

namespace parabose {

Generator Generator::e(std::uint32_t i, Sign si, std::uint32_t j, Sign sj) {
  if (std::tie(sj, j) < std::tie(si, i)) {
    std::swap(i, j);
    std::swap(si, sj);
  }
  return {LetterKind::E, si, sj, i, j};
}

namespace {
char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
}  // namespace

std::string Generator::str() const {
  switch (kind) {
    case LetterKind::B:
      return std::string("B") + sign_char(s1) + std::to_string(i);
    case LetterKind::E:
      return "E(" + std::to_string(i) + sign_char(s1) + "," + std::to_string(j) +
             sign_char(s2) + ")";
    case LetterKind::G:
      return "g";
    case LetterKind::KPlus:
      return "K+";
    case LetterKind::KMinus:
      return "K-";
  }
  return "?";
}

}  // namespace parabose
