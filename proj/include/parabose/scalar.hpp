#ifndef PARABOSE_SCALAR_HPP
#define PARABOSE_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace parabose {

/// Exact Gaussian rational re + im*i. Both parts are kept in canonical
/// (reduced) form, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT: integers promote implicitly
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long numerator, long denominator);
  static Scalar imaginary_unit() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Prints in the expression grammar: "3", "-1/2", "i", "-2i", "(1+3/2i)".
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace parabose

#endif
