#pragma once

#include <string>
#include <utility>

#include "gg/errors.hpp"
#include "gg/polynomial.hpp"

namespace gg {

/// Quotient of two polynomials over C.
///
/// The denominator is never zero and its leading coefficient is always one;
/// the zero function is stored as 0/1. Numerator and denominator are NOT
/// reduced by their gcd, so a stored pole survives arithmetic (see eval_at).
/// Equality is decided by cross-multiplication. `reduced()` performs an
/// explicit, optional cancellation when the denominator divides the numerator.
template <class C>
class RationalFunction {
 public:
  using Poly = Polynomial<C>;

  RationalFunction() : den_(C(1)) {}
  RationalFunction(int value) : num_(C(value)), den_(C(1)) {}  // NOLINT: literal promotion
  explicit RationalFunction(C value) : num_(std::move(value)), den_(C(1)) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(C(1)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction variable(Symbol s) { return RationalFunction(Poly::variable(s)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const { return {-num_, den_, Canonical{}}; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, false);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, true);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
    return {a.num_ * b.num_, a.den_ * b.den_, Canonical{}};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero scalar");
    if (a.is_zero()) return {};
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  /// Value equality (cross-multiplication), not structural equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RationalFunction pow(std::uint32_t e) const { return {num_.pow(e), den_.pow(e), Canonical{}}; }

  RationalFunction derivative(Symbol s) const {
    if (is_polynomial()) return RationalFunction(num_.derivative(s));
    Poly dn = num_.derivative(s);
    Poly dd = den_.derivative(s);
    if (dd.is_zero()) return {dn, den_, Canonical{}};
    return {dn * den_ - num_ * dd, den_ * den_, Canonical{}};
  }

  /// Exact evaluation of the stored representation.
  C evaluate(const Point<C>& at) const {
    C d = den_.evaluate(at);
    if (gg::is_zero(d)) throw PoleError("denominator " + den_.str() + " vanishes at the evaluation point");
    return C(num_.evaluate(at) / d);
  }

  /// Cancels the denominator when it divides the numerator exactly.
  RationalFunction reduced() const {
    if (is_polynomial()) return *this;
    if (auto q = num_.divide_exact(den_)) return RationalFunction(std::move(*q));
    return *this;
  }

  template <class F>
  RationalFunction map_coefficients(F&& f) const {
    return {num_.map_coefficients(f), den_.map_coefficients(f)};
  }

  /// Canonical text: `num`, or `num/den` with parentheses around multi-term parts.
  std::string str() const {
    if (is_polynomial()) return num_.str();
    const bool wrap_num = num_.terms().size() > 1;
    const bool wrap_den = den_.terms().size() > 1;
    std::string out = wrap_num ? "(" + num_.str() + ")" : num_.str();
    out += '/';
    out += wrap_den ? "(" + den_.str() + ")" : den_.str();
    return out;
  }

 private:
  struct Canonical {};
  RationalFunction(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Poly(C(1));
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(C(1));
      return;
    }
    const C lead = den_.leading().coeff;
    if (lead == C(1)) return;
    const C inv = C(C(1) / lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    auto combine = [subtract](const Poly& x, const Poly& y) { return subtract ? x - y : x + y; };
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) return {combine(a.num_, b.num_), a.den_, Canonical{}};
    if (b.is_polynomial()) return {combine(a.num_, b.num_ * a.den_), a.den_, Canonical{}};
    if (a.is_polynomial()) return {combine(a.num_ * b.den_, b.num_), b.den_, Canonical{}};
    // Cheap common multiple: reuse a denominator that the other one divides.
    if (a.den_.total_degree() >= b.den_.total_degree()) {
      if (auto q = a.den_.divide_exact(b.den_)) return {combine(a.num_, b.num_ * *q), a.den_, Canonical{}};
    } else if (auto q = b.den_.divide_exact(a.den_)) {
      return {combine(a.num_ * *q, b.num_), b.den_, Canonical{}};
    }
    return {combine(a.num_ * b.den_, b.num_ * a.den_), a.den_ * b.den_, Canonical{}};
  }

  Poly num_;
  Poly den_;
};

template <class C>
bool is_zero(const RationalFunction<C>& a) {
  return a.is_zero();
}

template <class C>
RationalFunction<C> partial(const RationalFunction<C>& a, Symbol s) {
  return a.derivative(s);
}

template <class C>
C eval_at(const RationalFunction<C>& a, const Point<C>& at) {
  return a.evaluate(at);
}

}  // namespace gg
