#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>

#include "gg/gaussian.hpp"
#include "gg/rational_function.hpp"

namespace gg {

extern template class Polynomial<GaussianRational>;
extern template class RationalFunction<GaussianRational>;

/// The coefficient type of every geometric object: a rational function in the
/// chart coordinates with Gaussian-rational coefficients.
using Scalar = RationalFunction<GaussianRational>;
using ScalarPoly = Polynomial<GaussianRational>;
using ScalarPoint = Point<GaussianRational>;

inline Scalar imaginary_unit() { return Scalar(GaussianRational::i()); }
inline Scalar rational(long num, long den = 1) { return Scalar(GaussianRational(mpq_class(num, den))); }
inline Scalar coordinate(Symbol s) { return Scalar::variable(s); }
inline Scalar coordinate(std::string_view name) { return Scalar::variable(Symbol(name)); }

Scalar conj(const Scalar& a);
Scalar real_part(const Scalar& a);
Scalar imag_part(const Scalar& a);

std::string to_string(const Scalar& a);
std::ostream& operator<<(std::ostream& os, const Scalar& a);

}  // namespace gg

namespace Eigen {

template <>
struct NumTraits<gg::Scalar> : GenericNumTraits<gg::Scalar> {
  using Real = gg::Scalar;
  using NonInteger = gg::Scalar;
  using Nested = gg::Scalar;
  using Literal = gg::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real epsilon() { return gg::Scalar(0); }
  static inline Real dummy_precision() { return gg::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gg {

/// Dense containers over Scalar. Geometric objects store components in these.
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) return false;
  return true;
}

/// Entrywise `reduced()`.
template <class Derived>
auto reduced(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](const Scalar& s) { return s.reduced(); });
}

}  // namespace gg
