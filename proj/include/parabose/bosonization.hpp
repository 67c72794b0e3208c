#ifndef PARABOSE_BOSONIZATION_HPP
#define PARABOSE_BOSONIZATION_HPP

#include <stdexcept>

#include "parabose/report.hpp"
#include "parabose/tensor.hpp"

namespace parabose {

class InhomogeneousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ordinary Hopf algebra on paraboson words extended by g (g^2 = 1, {g,B} = 0):
//   D(B) = B (x) 1 + g (x) B, D(g) = g (x) g, e(B) = 0, e(g) = 1,
//   S(B) = B g, S(g) = g.
// Tensor products are plain; slots are reduced in the pbg context.
TensorElement smash_coproduct(const Element& a);
Scalar smash_counit(const Element& a);
Element smash_antipode(const Element& a);

// Ordinary Hopf algebra on paraboson words extended by K+, K-:
//   D(B^s) = B^s (x) 1 + K^s (x) B^s, D(K^s) = K^s (x) K^s,
//   e(B) = 0, e(K) = 1, S(B^s) = B^s K^-s, S(K^s) = K^-s.
TensorElement k_coproduct(const Element& a);
Scalar k_counit(const Element& a);
Element k_antipode(const Element& a);

/// rho(a) = 1 (x) a for even a, g (x) a for odd a. Throws InhomogeneousInput
/// when a has both even and odd terms.
TensorElement cz2_coaction(const Element& a);

// Pair form of the smash product: a TensorElement whose first slot is a
// paraboson word and whose second slot is a word in g (so I or g).

/// (b (x) h)(c (x) h') = b (h_1 |> c) (x) h_2 h'.
TensorElement smash_multiply(const TensorElement& x, const TensorElement& y);
/// Pair form of a pbg word, built by smash-multiplying letter images.
TensorElement smash_pair(const Word& w);
/// a (x) h  ->  a h, reduced in pbg.
Element from_smash_pair(const TensorElement& pair);

/// Cross coproduct D(a (x) h) = a_1 (x) R2 h_1 (x) (R1 |> a_2) (x) h_2 with
/// R = R_g, mapped back into pbg (x) pbg.
TensorElement general_smash_coproduct(const TensorElement& pair);
/// S(a (x) h) = (S_H(h_2) u R1 |> S_A(a)) (x) S_H(R2 h_1), u = S_H(R2) R1,
/// mapped back into pbg.
Element general_smash_antipode(const TensorElement& pair);
/// u = sum S_H(R2) R1 computed from R_g.
Element drinfeld_element_cz2();

/// Compares the general smash-product construction with the explicit pbg
/// formulas on every word of length 1..max_len over {B+-_i, g}.
Report bosonise_from_general(std::size_t max_len, std::uint32_t max_index);

/// Coassociativity, counit, antipode convolution, well-definedness on the
/// quotient and ideal compatibility for ctx in {ParabosonG, ParabosonK}.
Report check_ordinary_hopf_axioms(ContextKind ctx, std::size_t max_len, std::uint32_t max_index);

/// R_g D(w) R_g^-1 == D^op(w) on pbg words, R_g^2 == 1, and the two hexagon
/// identities for R_g.
Report check_quasitriangularity_g(std::size_t max_len, std::uint32_t max_index);

}  // namespace parabose

#endif
