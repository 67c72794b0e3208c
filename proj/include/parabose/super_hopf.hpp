#ifndef PARABOSE_SUPER_HOPF_HPP
#define PARABOSE_SUPER_HOPF_HPP

#include "parabose/report.hpp"
#include "parabose/tensor.hpp"

namespace parabose {

/// Process-wide context of the given kind; sharing it shares the memo.
const AlgebraContext& shared_context(ContextKind kind);

/// Psi(v (x) w) = (-1)^{|v||w|} w (x) v, applied to homogeneous parts.
TensorElement braiding(const Element& v, const Element& w);
TensorElement braiding(const TensorElement& t);

/// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd with slots reduced in ctx.
TensorElement braided_multiply(const TensorElement& x, const TensorElement& y, const AlgebraContext& ctx);

/// Super coproduct of the paraboson algebra: B -> I (x) B + B (x) I, extended
/// as a homomorphism into the braided tensor square. Slots are in normal form.
TensorElement coproduct(const Word& w);
TensorElement coproduct(const Element& a);

/// Counit: 1 on I, 0 on every word containing a B or E letter.
Scalar counit(const Word& w);
Scalar counit(const Element& a);

/// Super antipode: S(B) = -B, S(ab) = (-1)^{|a||b|} S(b) S(a). Normal form.
Element antipode(const Word& w);
Element antipode(const Element& a);

/// R_g = (1(x)1 + 1(x)g + g(x)1 - g(x)g) / 2 as a pair of g-words.
TensorElement r_matrix_cz2();

/// Bounded-degree check of the super-Hopf laws on every B-word of length
/// 1..max_len with indices in [1, max_index], plus compatibility of the
/// structure maps with every paraboson ideal generator.
Report check_super_hopf_axioms(std::size_t max_len, std::uint32_t max_index);

}  // namespace parabose

#endif
