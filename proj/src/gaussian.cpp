#include "gg/gaussian.hpp"

#include <ostream>

#include "gg/errors.hpp"

namespace gg {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero coefficient");
  if (o.is_real()) {
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

CoefficientText coefficient_text(const mpq_class& c) {
  CoefficientText out;
  out.negative = sgn(c) < 0;
  mpq_class mag = abs(c);
  out.unit = mag == 1;
  out.magnitude = mag.get_str();
  return out;
}

CoefficientText coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return coefficient_text(c.re());
  if (sgn(c.re()) == 0) {
    CoefficientText out = coefficient_text(c.im());
    out.magnitude = out.unit ? std::string("i") : out.magnitude + "*i";
    out.unit = false;
    return out;
  }
  CoefficientText out;
  const mpq_class im_mag = abs(c.im());
  std::string im_text = im_mag == 1 ? std::string("i") : im_mag.get_str() + "*i";
  out.magnitude = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? " - " : " + ") + im_text + ")";
  return out;
}

std::string to_string(const GaussianRational& c) {
  CoefficientText t = coefficient_text(c);
  std::string body = t.unit ? std::string("1") : t.magnitude;
  return t.negative ? "-" + body : body;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << to_string(c); }

}  // namespace gg
