#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace gg {

/// Element of Q(i): re + i*im with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int value) : re_(value) {}  // NOLINT: literal promotion is intended
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {mpq_class(-a.re_), mpq_class(-a.im_)};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline bool is_zero(const GaussianRational& c) { return c.is_zero(); }
inline bool is_zero(const mpq_class& c) { return sgn(c) == 0; }

/// Printed form of a coefficient in front of a monomial. `negative` is split
/// off so the caller can join terms with " - ".
struct CoefficientText {
  bool negative = false;
  bool unit = false;  // magnitude is exactly 1; only the sign is printed
  std::string magnitude;
};

CoefficientText coefficient_text(const GaussianRational& c);
CoefficientText coefficient_text(const mpq_class& c);

std::string to_string(const GaussianRational& c);
std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

}  // namespace gg
