#include "parabose/tensor.hpp"

namespace parabose {

template <std::size_t N>
std::string Tensor<N>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Scalar coeff = c;
    if (!first) {
      if (coeff.is_real() && sgn(coeff.re()) < 0) {
        out += " - ";
        coeff = -coeff;
      } else {
        out += " + ";
      }
    }
    first = false;
    if (!coeff.is_one()) out += coeff.str() + " ";
    out += "[";
    for (std::size_t k = 0; k < N; ++k) {
      if (k) out += " | ";
      out += key[k].str();
    }
    out += "]";
  }
  return out;
}

template class Tensor<2>;
template class Tensor<3>;

TensorElement tensor(const Element& a, const Element& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term({wa, wb}, ca * cb);
  return out;
}

TripleTensor tensor(const Element& a, const Element& b, const Element& c) {
  TripleTensor out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      for (const auto& [wc, cc] : c.terms()) out.add_term({wa, wb, wc}, ca * cb * cc);
  return out;
}

namespace {

// Adds coeff * (nf(k0) (x) nf(k1) (x) ...) into out.
template <std::size_t N>
void add_reduced(Tensor<N>& out, const std::array<Word, N>& key, const Scalar& coeff,
                 const AlgebraContext& ctx) {
  std::array<Element, N> slots;
  for (std::size_t k = 0; k < N; ++k) slots[k] = ctx.reduce(key[k]);
  // Odometer over the slot expansions.
  std::array<typename Element::Terms::const_iterator, N> it;
  for (std::size_t k = 0; k < N; ++k) {
    if (slots[k].is_zero()) return;
    it[k] = slots[k].terms().begin();
  }
  for (;;) {
    std::array<Word, N> reduced;
    Scalar c = coeff;
    for (std::size_t k = 0; k < N; ++k) {
      reduced[k] = it[k]->first;
      c *= it[k]->second;
    }
    out.add_term(reduced, c);
    std::size_t k = N;
    while (k > 0) {
      --k;
      if (++it[k] != slots[k].terms().end()) break;
      it[k] = slots[k].terms().begin();
      if (k == 0) return;
    }
  }
}

}  // namespace

template <std::size_t N>
Tensor<N> reduce_slots(const Tensor<N>& t, const AlgebraContext& ctx) {
  Tensor<N> out;
  for (const auto& [key, c] : t.terms()) add_reduced(out, key, c, ctx);
  return out;
}

template <std::size_t N>
Tensor<N> multiply(const Tensor<N>& x, const Tensor<N>& y, TensorSigns signs, const AlgebraContext& ctx) {
  Tensor<N> out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::array<Word, N> key;
      int exponent = 0;
      for (std::size_t k = 0; k < N; ++k) {
        key[k] = kx[k] * ky[k];
        if (signs == TensorSigns::Koszul)
          for (std::size_t j = k + 1; j < N; ++j) exponent += ky[k].parity() * kx[j].parity();
      }
      Scalar c = cx * cy;
      if (exponent % 2) c = -c;
      add_reduced(out, key, c, ctx);
    }
  return out;
}

template Tensor<2> reduce_slots(const Tensor<2>&, const AlgebraContext&);
template Tensor<3> reduce_slots(const Tensor<3>&, const AlgebraContext&);
template Tensor<2> multiply(const Tensor<2>&, const Tensor<2>&, TensorSigns, const AlgebraContext&);
template Tensor<3> multiply(const Tensor<3>&, const Tensor<3>&, TensorSigns, const AlgebraContext&);

TensorElement swap_slots(const TensorElement& t, TensorSigns signs) {
  TensorElement out;
  for (const auto& [key, c] : t.terms()) {
    const bool odd = signs == TensorSigns::Koszul && key[0].parity() && key[1].parity();
    out.add_term({key[1], key[0]}, odd ? -c : c);
  }
  return out;
}

Element multiply_slots(const TensorElement& t, const AlgebraContext& ctx) {
  Element out;
  for (const auto& [key, c] : t.terms()) {
    Element part = ctx.reduce(key[0] * key[1]);
    part *= c;
    out += part;
  }
  return out;
}

TensorElement map_first(const TensorElement& t, const std::function<Element(const Word&)>& f) {
  TensorElement out;
  for (const auto& [key, c] : t.terms()) {
    const auto image = f(key[0]);
    for (const auto& [w, cw] : image.terms()) out.add_term({w, key[1]}, c * cw);
  }
  return out;
}

TensorElement map_second(const TensorElement& t, const std::function<Element(const Word&)>& f) {
  TensorElement out;
  for (const auto& [key, c] : t.terms()) {
    const auto image = f(key[1]);
    for (const auto& [w, cw] : image.terms()) out.add_term({key[0], w}, c * cw);
  }
  return out;
}

TripleTensor expand_first(const TensorElement& t, const std::function<TensorElement(const Word&)>& f) {
  TripleTensor out;
  for (const auto& [key, c] : t.terms()) {
    const auto image = f(key[0]);
    for (const auto& [pair, cp] : image.terms()) out.add_term({pair[0], pair[1], key[1]}, c * cp);
  }
  return out;
}

TripleTensor expand_second(const TensorElement& t, const std::function<TensorElement(const Word&)>& f) {
  TripleTensor out;
  for (const auto& [key, c] : t.terms()) {
    const auto image = f(key[1]);
    for (const auto& [pair, cp] : image.terms()) out.add_term({key[0], pair[0], pair[1]}, c * cp);
  }
  return out;
}

Element contract_first(const TensorElement& t, const std::function<Scalar(const Word&)>& e) {
  Element out;
  for (const auto& [key, c] : t.terms()) out.add_term(key[1], c * e(key[0]));
  return out;
}

Element contract_second(const TensorElement& t, const std::function<Scalar(const Word&)>& e) {
  Element out;
  for (const auto& [key, c] : t.terms()) out.add_term(key[0], c * e(key[1]));
  return out;
}

}  // namespace parabose
