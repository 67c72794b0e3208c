#ifndef PARABOSE_SAMPLING_HPP
#define PARABOSE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "parabose/rewriting.hpp"

namespace parabose {

/// Uniform draw from [0, n) by rejection on raw 64-bit output, so samples
/// depend only on the seed and not on the standard library's distributions.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);

/// Generators of a context with mode indices in [1, max_index]:
/// B letters (all contexts except free, which also gets them), E symbols when
/// include_e_symbols and the context has them, then g or K+, K-.
std::vector<Generator> context_alphabet(ContextKind kind, std::uint32_t max_index,
                                        bool include_e_symbols = false);

/// Uniform length in [1, max_len], then uniform letters.
Word random_word(std::mt19937_64& rng, const std::vector<Generator>& alphabet, std::size_t max_len);

/// Every word of length 1..max_len, shorter words first.
std::vector<Word> all_words(const std::vector<Generator>& alphabet, std::size_t max_len);

}  // namespace parabose

#endif
