#ifndef PARABOSE_TEST_SUPPORT_HPP
#define PARABOSE_TEST_SUPPORT_HPP

#include <random>

#include "parabose/parse.hpp"
#include "parabose/sampling.hpp"

namespace testing {

inline parabose::Element el(const char* text) { return parabose::parse_element(text); }

/// Random element: up to `terms` random words with small Gaussian-rational
/// coefficients.
inline parabose::Element random_element(std::mt19937_64& rng, const std::vector<parabose::Generator>& alphabet,
                                        std::size_t max_len, std::size_t terms) {
  parabose::Element a;
  const std::size_t count = 1 + parabose::uniform_index(rng, terms);
  for (std::size_t k = 0; k < count; ++k) {
    const long re = static_cast<long>(parabose::uniform_index(rng, 7)) - 3;
    const long im = static_cast<long>(parabose::uniform_index(rng, 3)) - 1;
    const long den = 1 + static_cast<long>(parabose::uniform_index(rng, 3));
    const parabose::Scalar c = parabose::Scalar::rational(re, den) + parabose::Scalar::imaginary_unit() * im;
    a.add_term(parabose::random_word(rng, alphabet, max_len), c);
  }
  return a;
}

}  // namespace testing

#endif
