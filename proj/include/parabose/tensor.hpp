#ifndef PARABOSE_TENSOR_HPP
#define PARABOSE_TENSOR_HPP

#include <array>
#include <functional>
#include <map>
#include <string>

#include "parabose/element.hpp"
#include "parabose/rewriting.hpp"

namespace parabose {

/// Exact linear combination of N-tuples of words (N = 2 for coproducts,
/// N = 3 for coassociativity). No zero coefficients are stored.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Word, N>;
  using Terms = std::map<Key, Scalar>;

  Tensor() = default;
  Tensor(const Key& key, Scalar c = 1) { add_term(key, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Tensor& operator*=(const Scalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, coeff] : terms_) coeff *= c;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& c) { return a *= c; }
  friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  /// "c [w1 | w2] + ..." with the Element coefficient conventions; "0" for zero.
  std::string str() const;

 private:
  Terms terms_;
};

using TensorElement = Tensor<2>;
using TripleTensor = Tensor<3>;

/// How the product of tensors commutes slots past each other.
enum class TensorSigns {
  Plain,   // (a(x)b)(c(x)d) = ac (x) bd
  Koszul,  // (a(x)b)(c(x)d) = (-1)^{|b||c|} ac (x) bd
};

/// a (x) b expanded bilinearly.
TensorElement tensor(const Element& a, const Element& b);
TripleTensor tensor(const Element& a, const Element& b, const Element& c);

/// Normal form of every slot, re-expanded bilinearly.
template <std::size_t N>
Tensor<N> reduce_slots(const Tensor<N>& t, const AlgebraContext& ctx);

/// Slotwise product followed by slot reduction in ctx.
template <std::size_t N>
Tensor<N> multiply(const Tensor<N>& x, const Tensor<N>& y, TensorSigns signs, const AlgebraContext& ctx);

/// Slot swap with the given sign convention (Koszul gives the braiding).
TensorElement swap_slots(const TensorElement& t, TensorSigns signs);

/// m: a (x) b -> ab, reduced in ctx.
Element multiply_slots(const TensorElement& t, const AlgebraContext& ctx);

/// Applies a word-level linear map to one slot of a pair.
TensorElement map_first(const TensorElement& t, const std::function<Element(const Word&)>& f);
TensorElement map_second(const TensorElement& t, const std::function<Element(const Word&)>& f);

/// (f (x) id) and (id (x) f) for f: word -> pair.
TripleTensor expand_first(const TensorElement& t, const std::function<TensorElement(const Word&)>& f);
TripleTensor expand_second(const TensorElement& t, const std::function<TensorElement(const Word&)>& f);

/// Contracts one slot with a scalar-valued map: (e (x) id) and (id (x) e).
Element contract_first(const TensorElement& t, const std::function<Scalar(const Word&)>& e);
Element contract_second(const TensorElement& t, const std::function<Scalar(const Word&)>& e);

extern template class Tensor<2>;
extern template class Tensor<3>;

}  // namespace parabose

#endif
