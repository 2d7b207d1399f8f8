#include "gg/calculus.hpp"

#include <algorithm>
#include <set>

#include "gg/errors.hpp"
#include "gg/format.hpp"

namespace gg {

namespace {

Eigen::Index idx(std::size_t k) { return static_cast<Eigen::Index>(k); }

}  // namespace

Chart::Chart(const std::vector<std::string>& names) {
  std::vector<Symbol> coords;
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError("empty coordinate name");
    if (n == "i") throw PreconditionError("'i' is the imaginary unit and cannot name a coordinate");
    if (!seen.insert(n).second) throw PreconditionError("duplicate coordinate '" + n + "'");
    coords.emplace_back(n);
  }
  coords_ = std::make_shared<const std::vector<Symbol>>(std::move(coords));
}

Chart Chart::product(const Chart& left, const Chart& right) {
  std::vector<std::string> names = left.names();
  for (const auto& n : right.names()) {
    if (std::find(names.begin(), names.end(), n) != names.end())
      throw ChartMismatch("coordinate collision in product chart: '" + n + "' occurs in both factors");
    names.push_back(n);
  }
  return Chart(names);
}

std::vector<std::string> Chart::names() const {
  std::vector<std::string> out;
  for (Symbol s : *coords_) out.push_back(s.name());
  return out;
}

std::optional<std::size_t> Chart::index_of(Symbol s) const {
  for (std::size_t k = 0; k < coords_->size(); ++k)
    if ((*coords_)[k] == s) return k;
  return std::nullopt;
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < coords_->size(); ++k)
    if ((*coords_)[k].name() == name) return k;
  return std::nullopt;
}

void Chart::require_contains(const Scalar& s) const {
  for (const auto* p : {&s.num(), &s.den()})
    for (Symbol v : p->variables())
      if (!index_of(v)) throw ChartMismatch("'" + v.name() + "' is not a coordinate of chart " + str());
}

std::size_t Chart::factor_offset(const Chart& factor, bool right_side) const {
  const std::size_t offset = right_side ? dim() - std::min(dim(), factor.dim()) : 0;
  if (factor.dim() > dim()) throw ChartMismatch("chart " + factor.str() + " is not a factor of " + str());
  for (std::size_t k = 0; k < factor.dim(); ++k)
    if (coord(offset + k) != factor.coord(k))
      throw ChartMismatch("chart " + factor.str() + " is not the " + (right_side ? "right" : "left") +
                          " factor of " + str());
  return offset;
}

std::string Chart::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < dim(); ++k) out += (k ? ", " : "") + coord(k).name();
  return out + "]";
}

void require_same_chart(const Chart& a, const Chart& b, std::string_view op) {
  if (!(a == b)) throw ChartMismatch(std::string(op) + ": chart " + a.str() + " differs from " + b.str());
}

VectorField VectorField::coordinate_field(const Chart& chart, std::size_t k) {
  VectorField x = zero(chart);
  x.comps(idx(k)) = Scalar(1);
  return x;
}

OneForm OneForm::differential(const Chart& chart, std::size_t k) {
  OneForm a = zero(chart);
  a.comps(idx(k)) = Scalar(1);
  return a;
}

TwoForm TwoForm::zero(const Chart& chart) {
  const auto n = idx(chart.dim());
  return {chart, Matrix::Zero(n, n)};
}

TwoForm TwoForm::wedge(const OneForm& a, const OneForm& b) {
  require_same_chart(a.chart, b.chart, "wedge");
  return {a.chart, a.comps * b.comps.transpose() - b.comps * a.comps.transpose()};
}

Bivector Bivector::zero(const Chart& chart) {
  const auto n = idx(chart.dim());
  return {chart, Matrix::Zero(n, n)};
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_chart(a.chart, b.chart, "vector sum");
  return {a.chart, a.comps + b.comps};
}
VectorField operator-(const VectorField& a, const VectorField& b) {
  require_same_chart(a.chart, b.chart, "vector difference");
  return {a.chart, a.comps - b.comps};
}
VectorField operator*(const Scalar& f, const VectorField& a) { return {a.chart, a.comps * f}; }

OneForm operator+(const OneForm& a, const OneForm& b) {
  require_same_chart(a.chart, b.chart, "form sum");
  return {a.chart, a.comps + b.comps};
}
OneForm operator-(const OneForm& a, const OneForm& b) {
  require_same_chart(a.chart, b.chart, "form difference");
  return {a.chart, a.comps - b.comps};
}
OneForm operator*(const Scalar& f, const OneForm& a) { return {a.chart, a.comps * f}; }

TwoForm operator+(const TwoForm& a, const TwoForm& b) {
  require_same_chart(a.chart, b.chart, "two-form sum");
  return {a.chart, a.comps + b.comps};
}
TwoForm operator-(const TwoForm& a, const TwoForm& b) {
  require_same_chart(a.chart, b.chart, "two-form difference");
  return {a.chart, a.comps - b.comps};
}
TwoForm operator*(const Scalar& f, const TwoForm& a) { return {a.chart, a.comps * f}; }

bool is_zero(const VectorField& a) { return is_zero(a.comps); }
bool is_zero(const OneForm& a) { return is_zero(a.comps); }
bool is_zero(const TwoForm& a) { return is_zero(a.comps); }

Scalar partial(const Chart& chart, const Scalar& f, std::size_t k) { return f.derivative(chart.coord(k)); }

Scalar partial(const Chart& chart, const Scalar& f, std::string_view coord) {
  auto k = chart.index_of(coord);
  if (!k) throw ChartMismatch("'" + std::string(coord) + "' is not a coordinate of chart " + chart.str());
  return partial(chart, f, *k);
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart, y.chart, "lie_bracket");
  const std::size_t n = x.chart.dim();
  VectorField out = VectorField::zero(x.chart);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar sum;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i].is_zero()) sum += x[i] * partial(x.chart, y[k], i);
      if (!y[i].is_zero()) sum -= y[i] * partial(x.chart, x[k], i);
    }
    out.comps(idx(k)) = sum;
  }
  return out;
}

OneForm d(const Chart& chart, const Scalar& f) {
  OneForm out = OneForm::zero(chart);
  for (std::size_t i = 0; i < chart.dim(); ++i) out.comps(idx(i)) = partial(chart, f, i);
  return out;
}

TwoForm d(const OneForm& a) {
  const std::size_t n = a.chart.dim();
  TwoForm out = TwoForm::zero(a.chart);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar v = partial(a.chart, a[j], i) - partial(a.chart, a[i], j);
      out.comps(idx(j), idx(i)) = -v;
      out.comps(idx(i), idx(j)) = std::move(v);
    }
  return out;
}

Scalar interior(const VectorField& x, const OneForm& a) {
  require_same_chart(x.chart, a.chart, "interior");
  return x.comps.dot(a.comps);
}

OneForm interior(const VectorField& x, const TwoForm& w) {
  require_same_chart(x.chart, w.chart, "interior");
  return {x.chart, w.comps.transpose() * x.comps};
}

OneForm lie_derivative(const VectorField& x, const OneForm& a) {
  require_same_chart(x.chart, a.chart, "lie_derivative");
  return interior(x, d(a)) + d(x.chart, interior(x, a));
}

Scalar pair(const OneForm& a, const VectorField& x) { return interior(x, a); }

VectorField contract(const Bivector& p, const OneForm& a) {
  require_same_chart(p.chart, a.chart, "contract");
  return {p.chart, p.comps.transpose() * a.comps};
}

Scalar pair(const Bivector& p, const OneForm& a, const OneForm& b) { return pair(b, contract(p, a)); }

Scalar evaluate(const TwoForm& w, const VectorField& x, const VectorField& y) { return pair(interior(x, w), y); }

VectorField lift(const VectorField& x, Side side, const Chart& product) {
  const std::size_t off = product.factor_offset(x.chart, side == Side::right);
  VectorField out = VectorField::zero(product);
  out.comps.segment(idx(off), idx(x.chart.dim())) = x.comps;
  return out;
}

OneForm lift(const OneForm& a, Side side, const Chart& product) {
  const std::size_t off = product.factor_offset(a.chart, side == Side::right);
  OneForm out = OneForm::zero(product);
  out.comps.segment(idx(off), idx(a.chart.dim())) = a.comps;
  return out;
}

Scalar lift(const Scalar& f, Side, const Chart& product) {
  product.require_contains(f);
  return f;
}

std::string to_string(const VectorField& x) {
  LinearText text;
  for (std::size_t k = 0; k < x.chart.dim(); ++k) text.add(x[k], "D" + x.chart.coord(k).name());
  return text.str();
}

std::string to_string(const OneForm& a) {
  LinearText text;
  for (std::size_t k = 0; k < a.chart.dim(); ++k) text.add(a[k], "d" + a.chart.coord(k).name());
  return text.str();
}

std::string to_string(const TwoForm& w) {
  LinearText text;
  const std::size_t n = w.chart.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      text.add(w.comps(idx(i), idx(j)), "d" + w.chart.coord(i).name() + "^d" + w.chart.coord(j).name());
  return text.str();
}

}  // namespace gg
