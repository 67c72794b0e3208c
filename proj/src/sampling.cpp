#include "parabose/sampling.hpp"

#include <limits>

namespace parabose {

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % bound);
}

std::vector<Generator> context_alphabet(ContextKind kind, std::uint32_t max_index, bool include_e_symbols) {
  std::vector<Generator> out;
  if (include_e_symbols && kind != ContextKind::Boson) {
    auto es = e_symbols(max_index);
    out.insert(out.end(), es.begin(), es.end());
  }
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::uint32_t i = 1; i <= max_index; ++i) out.push_back(Generator::b(s, i));
  if (kind == ContextKind::ParabosonG) out.push_back(Generator::g());
  if (kind == ContextKind::ParabosonK) {
    out.push_back(Generator::k_plus());
    out.push_back(Generator::k_minus());
  }
  return out;
}

Word random_word(std::mt19937_64& rng, const std::vector<Generator>& alphabet, std::size_t max_len) {
  const std::size_t length = 1 + uniform_index(rng, max_len);
  std::vector<Generator> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) letters.push_back(alphabet[uniform_index(rng, alphabet.size())]);
  return Word(std::move(letters));
}

std::vector<Word> all_words(const std::vector<Generator>& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& w : layer)
      for (const auto& x : alphabet) next.push_back(w * Word{x});
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace parabose
