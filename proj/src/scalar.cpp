#include "parabose/scalar.hpp"

#include <stdexcept>

namespace parabose {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  mpq_class q(numerator, denominator);
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

std::string imaginary_part(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "i";
}

}  // namespace

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imaginary_part(im_);
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  out += imaginary_part(im_);
  return out + ")";
}

}  // namespace parabose
