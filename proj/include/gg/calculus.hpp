#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gg/scalar.hpp"

namespace gg {

/// Ordered coordinate list of a single chart. Cheap to copy; equality is by
/// coordinate list.
class Chart {
 public:
  Chart() : coords_(std::make_shared<const std::vector<Symbol>>()) {}
  explicit Chart(const std::vector<std::string>& names);

  /// Left coordinates first; a shared name is an error.
  static Chart product(const Chart& left, const Chart& right);

  std::size_t dim() const { return coords_->size(); }
  const std::vector<Symbol>& coords() const { return *coords_; }
  Symbol coord(std::size_t k) const { return (*coords_)[k]; }
  std::vector<std::string> names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> index_of(Symbol s) const;

  /// Throws ChartMismatch unless every variable of `s` is a coordinate.
  void require_contains(const Scalar& s) const;

  /// Offset of `factor`'s coordinates inside this chart when it is the given
  /// side of a product; throws ChartMismatch otherwise.
  std::size_t factor_offset(const Chart& factor, bool right_side) const;

  std::string str() const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.coords_ == b.coords_ || *a.coords_ == *b.coords_;
  }

 private:
  std::shared_ptr<const std::vector<Symbol>> coords_;
};

enum class Side { left, right };

void require_same_chart(const Chart& a, const Chart& b, std::string_view op);

/// Coefficients of the coordinate fields D<coord>.
struct VectorField {
  Chart chart;
  Vector comps;

  static VectorField zero(const Chart& chart) { return {chart, Vector::Zero(static_cast<Eigen::Index>(chart.dim()))}; }
  static VectorField coordinate_field(const Chart& chart, std::size_t k);
  const Scalar& operator[](std::size_t k) const { return comps(static_cast<Eigen::Index>(k)); }
};

/// Coefficients of the differentials d<coord>.
struct OneForm {
  Chart chart;
  Vector comps;

  static OneForm zero(const Chart& chart) { return {chart, Vector::Zero(static_cast<Eigen::Index>(chart.dim()))}; }
  static OneForm differential(const Chart& chart, std::size_t k);
  const Scalar& operator[](std::size_t k) const { return comps(static_cast<Eigen::Index>(k)); }
};

/// Antisymmetric matrix w with w(X, Y) = sum_ij X^i Y^j w_ij.
struct TwoForm {
  Chart chart;
  Matrix comps;

  static TwoForm zero(const Chart& chart);
  /// dx_i ^ dx_j
  static TwoForm wedge(const OneForm& a, const OneForm& b);
};

/// Antisymmetric matrix p with p(a, b) = sum_ij p_ij a_i b_j.
struct Bivector {
  Chart chart;
  Matrix comps;

  static Bivector zero(const Chart& chart);
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(const Scalar& f, const VectorField& a);
OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(const Scalar& f, const OneForm& a);
TwoForm operator+(const TwoForm& a, const TwoForm& b);
TwoForm operator-(const TwoForm& a, const TwoForm& b);
TwoForm operator*(const Scalar& f, const TwoForm& a);

bool is_zero(const VectorField& a);
bool is_zero(const OneForm& a);
bool is_zero(const TwoForm& a);

/// Partial derivative along the k-th chart coordinate.
Scalar partial(const Chart& chart, const Scalar& f, std::size_t k);
/// Partial derivative along the named coordinate; ChartMismatch if absent.
Scalar partial(const Chart& chart, const Scalar& f, std::string_view coord);

/// [X, Y]^k = sum_i (X^i d_i Y^k - Y^i d_i X^k)
VectorField lie_bracket(const VectorField& x, const VectorField& y);

OneForm d(const Chart& chart, const Scalar& f);
/// (d a)_ij = d_i a_j - d_j a_i
TwoForm d(const OneForm& a);

Scalar interior(const VectorField& x, const OneForm& a);
/// (i_X w)_j = sum_i X^i w_ij
OneForm interior(const VectorField& x, const TwoForm& w);

/// Cartan formula: L_X a = i_X da + d(i_X a).
OneForm lie_derivative(const VectorField& x, const OneForm& a);

Scalar pair(const OneForm& a, const VectorField& x);
/// (p#a)^j = sum_i p_ij a_i, so that pair(b, contract(p, a)) = p(a, b).
VectorField contract(const Bivector& p, const OneForm& a);
Scalar pair(const Bivector& p, const OneForm& a, const OneForm& b);
Scalar evaluate(const TwoForm& w, const VectorField& x, const VectorField& y);

/// Zero-padded copy into the product chart. Scalars need no relabelling
/// because coordinates are identified by name.
VectorField lift(const VectorField& x, Side side, const Chart& product);
OneForm lift(const OneForm& a, Side side, const Chart& product);
Scalar lift(const Scalar& f, Side side, const Chart& product);

std::string to_string(const VectorField& x);
std::string to_string(const OneForm& a);
std::string to_string(const TwoForm& w);

}  // namespace gg
