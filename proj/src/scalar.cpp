#include "gg/scalar.hpp"

#include <ostream>

namespace gg {

template class Polynomial<GaussianRational>;
template class RationalFunction<GaussianRational>;

namespace {

// Coordinates are real, so conjugation acts on coefficients only.
ScalarPoly conj_poly(const ScalarPoly& p) {
  return p.map_coefficients([](const GaussianRational& c) { return c.conj(); });
}

}  // namespace

Scalar conj(const Scalar& a) { return Scalar(conj_poly(a.num()), conj_poly(a.den())); }

Scalar real_part(const Scalar& a) {
  const ScalarPoly den_conj = conj_poly(a.den());
  const ScalarPoly num = a.num() * den_conj;
  return Scalar(num.map_coefficients([](const GaussianRational& c) { return GaussianRational(c.re()); }),
                a.den() * den_conj);
}

Scalar imag_part(const Scalar& a) {
  const ScalarPoly den_conj = conj_poly(a.den());
  const ScalarPoly num = a.num() * den_conj;
  return Scalar(num.map_coefficients([](const GaussianRational& c) { return GaussianRational(c.im()); }),
                a.den() * den_conj);
}

std::string to_string(const Scalar& a) { return a.str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.str(); }

}  // namespace gg
