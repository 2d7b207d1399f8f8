#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gg/errors.hpp"
#include "gg/gaussian.hpp"
#include "gg/symbol.hpp"

namespace gg {

/// Power product of coordinates, stored sparsely and sorted by coordinate name.
class Monomial {
 public:
  using Factor = std::pair<Symbol, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Symbol s, std::uint32_t exponent = 1) {
    if (exponent > 0) factors_.emplace_back(s, exponent);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  std::uint32_t exponent(Symbol s) const {
    for (const auto& f : factors_)
      if (f.first == s) return f.second;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
      const auto cmp = ia->first <=> ib->first;
      if (cmp < 0) {
        out.factors_.push_back(*ia++);
      } else if (cmp > 0) {
        out.factors_.push_back(*ib++);
      } else {
        out.factors_.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
    out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
    return out;
  }

  /// Quotient a/b when b divides a.
  friend std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.factors_.begin();
    for (const auto& fb : b.factors_) {
      while (ia != a.factors_.end() && ia->first < fb.first) out.factors_.push_back(*ia++);
      if (ia == a.factors_.end() || ia->first != fb.first || ia->second < fb.second) return std::nullopt;
      if (ia->second > fb.second) out.factors_.emplace_back(fb.first, ia->second - fb.second);
      ++ia;
    }
    out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
    return out;
  }

  /// d/ds of the monomial as (multiplier, monomial); multiplier 0 when s is absent.
  std::pair<std::uint32_t, Monomial> derivative(Symbol s) const {
    Monomial out;
    std::uint32_t mult = 0;
    for (const auto& f : factors_) {
      if (f.first == s) {
        mult = f.second;
        if (f.second > 1) out.factors_.emplace_back(s, f.second - 1);
      } else {
        out.factors_.push_back(f);
      }
    }
    return {mult, mult == 0 ? Monomial{} : std::move(out)};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic order with coordinates ranked by name (earlier name is more significant).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t k = 0; k < n; ++k) {
      const auto& fa = a.factors_[k];
      const auto& fb = b.factors_[k];
      if (fa.first != fb.first) {
        // The monomial holding the earlier-named coordinate has the larger exponent there.
        return (fa.first <=> fb.first) < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      if (fa.second != fb.second) return fa.second <=> fb.second;
    }
    return a.factors_.size() <=> b.factors_.size();
  }

  std::string str() const {
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += '*';
      out += f.first.name();
      if (f.second > 1) out += '^' + std::to_string(f.second);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

/// Assignment of coefficient-field values to coordinates.
template <class C>
using Point = std::map<Symbol, C>;

/// Sparse multivariate polynomial over the field C. Terms are kept sorted by
/// descending monomial order with no zero coefficients.
template <class C>
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(C constant) {
    if (!gg::is_zero(constant)) terms_.push_back({Monomial{}, std::move(constant)});
  }
  static Polynomial variable(Symbol s) {
    Polynomial p;
    p.terms_.push_back({Monomial(s), C(1)});
    return p;
  }
  static Polynomial monomial(Monomial m, C c) {
    Polynomial p;
    if (!gg::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  C constant_value() const { return terms_.empty() ? C(0) : terms_.back().mono.is_one() ? terms_.back().coeff : C(0); }
  const Term& leading() const { return terms_.front(); }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  std::vector<Symbol> variables() const {
    std::vector<Symbol> vars;
    for (const auto& t : terms_)
      for (const auto& f : t.mono.factors()) vars.push_back(f.first);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) raw.push_back({ta.mono * tb.mono, C(ta.coeff * tb.coeff)});
    return from_unsorted(std::move(raw));
  }

  Polynomial scaled(const C& c) const {
    if (gg::is_zero(c)) return {};
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = C(t.coeff * c);
    return out;
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial result(C(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Polynomial derivative(Symbol s) const {
    std::vector<Term> raw;
    for (const auto& t : terms_) {
      auto [mult, mono] = t.mono.derivative(s);
      if (mult != 0) raw.push_back({std::move(mono), C(t.coeff * C(static_cast<int>(mult)))});
    }
    // Differentiation preserves the relative order of surviving terms.
    Polynomial out;
    out.terms_ = std::move(raw);
    return out;
  }

  /// Exact quotient when `d` divides this polynomial, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return Polynomial{};
    if (d.is_constant()) return scaled(C(C(1) / d.terms_[0].coeff));
    Polynomial rem = *this;
    std::vector<Term> quotient;
    const Term& lead = d.leading();
    while (!rem.is_zero()) {
      auto q = divide(rem.leading().mono, lead.mono);
      if (!q) return std::nullopt;
      Term t{std::move(*q), C(rem.leading().coeff / lead.coeff)};
      rem = rem - d * monomial(t.mono, t.coeff);
      quotient.push_back(std::move(t));
    }
    Polynomial out;
    out.terms_ = std::move(quotient);  // emitted in descending order
    return out;
  }

  C evaluate(const Point<C>& at) const {
    C sum(0);
    for (const auto& t : terms_) {
      C value = t.coeff;
      for (const auto& [sym, e] : t.mono.factors()) {
        auto it = at.find(sym);
        if (it == at.end()) throw ChartMismatch("no value for coordinate '" + sym.name() + "'");
        for (std::uint32_t k = 0; k < e; ++k) value = C(value * it->second);
      }
      sum = C(sum + value);
    }
    return sum;
  }

  /// Applies `f` to every coefficient, dropping zeros.
  template <class F>
  Polynomial map_coefficients(F&& f) const {
    Polynomial out;
    for (const auto& t : terms_) {
      C c = f(t.coeff);
      if (!gg::is_zero(c)) out.terms_.push_back({t.mono, std::move(c)});
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text: terms in descending monomial order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      CoefficientText ct = coefficient_text(t.coeff);
      if (first) {
        if (ct.negative) out += '-';
      } else {
        out += ct.negative ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        out += ct.unit ? std::string("1") : ct.magnitude;
      } else {
        if (!ct.unit) out += ct.magnitude + "*";
        out += t.mono.str();
      }
    }
    return out;
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono > ib->mono)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->mono > ia->mono) {
        out.terms_.push_back({ib->mono, subtract ? C(-ib->coeff) : ib->coeff});
        ++ib;
      } else {
        C c = subtract ? C(ia->coeff - ib->coeff) : C(ia->coeff + ib->coeff);
        if (!gg::is_zero(c)) out.terms_.push_back({ia->mono, std::move(c)});
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  static Polynomial from_unsorted(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
    Polynomial out;
    for (auto& t : raw) {
      if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
        out.terms_.back().coeff = C(out.terms_.back().coeff + t.coeff);
        if (gg::is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
      } else if (!gg::is_zero(t.coeff)) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

}  // namespace gg
