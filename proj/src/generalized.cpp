#include "gg/generalized.hpp"

#include "gg/elimination.hpp"
#include "gg/errors.hpp"
#include "gg/format.hpp"

namespace gg {

namespace {

Eigen::Index idx(std::size_t k) { return static_cast<Eigen::Index>(k); }

/// K = [[0, I], [I, 0]], the Gram matrix of twice the neutral metric.
Matrix swap_matrix(std::size_t n) {
  const Eigen::Index m = idx(n);
  Matrix k = Matrix::Zero(2 * m, 2 * m);
  k.topRightCorner(m, m) = Matrix::Identity(m, m);
  k.bottomLeftCorner(m, m) = Matrix::Identity(m, m);
  return k;
}

void require_size(const Chart& chart, const Matrix& m, std::size_t size, const char* what) {
  if (m.rows() != idx(size) || m.cols() != idx(size))
    throw PreconditionError(std::string(what) + " must be " + std::to_string(size) + "x" + std::to_string(size) +
                            " for chart " + chart.str());
}

std::string vector_witness(const GVector& v) { return is_zero(v) ? std::string() : to_string(v); }

std::string first_failure(const CheckReport& r) {
  for (const auto& c : r.checks)
    if (c.verdict == Verdict::fail) return c.description + (c.witness.empty() ? "" : " (" + c.witness + ")");
  return {};
}

}  // namespace

GVector GVector::zero(const Chart& chart) { return {chart, Vector::Zero(2 * idx(chart.dim()))}; }

GVector GVector::from(const VectorField& x) { return from(x, OneForm::zero(x.chart)); }

GVector GVector::from(const OneForm& a) { return from(VectorField::zero(a.chart), a); }

GVector GVector::from(const VectorField& x, const OneForm& a) {
  require_same_chart(x.chart, a.chart, "GVector");
  GVector out = zero(x.chart);
  const auto n = idx(x.chart.dim());
  out.comps.head(n) = x.comps;
  out.comps.tail(n) = a.comps;
  return out;
}

GVector GVector::basis(const Chart& chart, std::size_t k) {
  GVector out = zero(chart);
  out.comps(idx(k)) = Scalar(1);
  return out;
}

VectorField GVector::vec() const { return {chart, comps.head(idx(n()))}; }

OneForm GVector::form() const { return {chart, comps.tail(idx(n()))}; }

GVector operator+(const GVector& a, const GVector& b) {
  require_same_chart(a.chart, b.chart, "GVector sum");
  return {a.chart, a.comps + b.comps};
}

GVector operator-(const GVector& a, const GVector& b) {
  require_same_chart(a.chart, b.chart, "GVector difference");
  return {a.chart, a.comps - b.comps};
}

GVector operator-(const GVector& a) { return {a.chart, -a.comps}; }

GVector operator*(const Scalar& f, const GVector& a) { return {a.chart, a.comps * f}; }

bool is_zero(const GVector& a) { return is_zero(a.comps); }

std::vector<GVector> coordinate_frame(const Chart& chart) {
  std::vector<GVector> out;
  for (std::size_t k = 0; k < 2 * chart.dim(); ++k) out.push_back(GVector::basis(chart, k));
  return out;
}

std::string frame_label(const Chart& chart, std::size_t k) {
  const std::size_t n = chart.dim();
  return (k < n ? "D" : "d") + chart.coord(k % n).name();
}

Scalar neutral_pairing(const GVector& a, const GVector& b) {
  require_same_chart(a.chart, b.chart, "neutral_pairing");
  return (pair(b.form(), a.vec()) + pair(a.form(), b.vec())) * rational(1, 2);
}

GVector courant_bracket(const GVector& a, const GVector& b) {
  require_same_chart(a.chart, b.chart, "courant_bracket");
  const VectorField x = a.vec();
  const VectorField y = b.vec();
  const OneForm alpha = a.form();
  const OneForm beta = b.form();
  const Scalar h = interior(x, beta) - interior(y, alpha);
  const OneForm form = lie_derivative(x, beta) - lie_derivative(y, alpha) - rational(1, 2) * d(a.chart, h);
  return GVector::from(lie_bracket(x, y), form);
}

GEndo GEndo::zero(const Chart& chart) {
  const auto m = 2 * idx(chart.dim());
  return {chart, Matrix::Zero(m, m)};
}

GEndo GEndo::identity(const Chart& chart) {
  const auto m = 2 * idx(chart.dim());
  return {chart, Matrix::Identity(m, m)};
}

GEndo GEndo::from_blocks(const Matrix& a, const Bivector& p, const TwoForm& s, const Matrix& b) {
  require_same_chart(p.chart, s.chart, "GEndo blocks");
  const std::size_t n = p.chart.dim();
  require_size(p.chart, a, n, "tangent block");
  require_size(p.chart, b, n, "form block");
  const auto k = idx(n);
  GEndo out = zero(p.chart);
  out.m.topLeftCorner(k, k) = a;
  out.m.topRightCorner(k, k) = p.comps.transpose();
  out.m.bottomLeftCorner(k, k) = s.comps.transpose();
  out.m.bottomRightCorner(k, k) = b;
  return out;
}

Matrix GEndo::block_a() const { return m.topLeftCorner(idx(n()), idx(n())); }

Bivector GEndo::block_pi() const { return {chart, m.topRightCorner(idx(n()), idx(n())).transpose()}; }

TwoForm GEndo::block_sigma() const { return {chart, m.bottomLeftCorner(idx(n()), idx(n())).transpose()}; }

Matrix GEndo::block_b() const { return m.bottomRightCorner(idx(n()), idx(n())); }

GVector apply(const GEndo& e, const GVector& a) {
  require_same_chart(e.chart, a.chart, "apply");
  return {a.chart, e.m * a.comps};
}

GVector operator*(const GEndo& e, const GVector& a) { return apply(e, a); }

GEndo adjoint(const GEndo& e) {
  const Matrix k = swap_matrix(e.n());
  return {e.chart, k * e.m.transpose() * k};
}

GEndo compose(const GEndo& e, const GEndo& f) {
  require_same_chart(e.chart, f.chart, "compose");
  return {e.chart, e.m * f.m};
}

GEndo operator*(const GEndo& e, const GEndo& f) { return compose(e, f); }

GEndo operator+(const GEndo& e, const GEndo& f) {
  require_same_chart(e.chart, f.chart, "GEndo sum");
  return {e.chart, e.m + f.m};
}

GEndo operator-(const GEndo& e, const GEndo& f) {
  require_same_chart(e.chart, f.chart, "GEndo difference");
  return {e.chart, e.m - f.m};
}

GEndo operator*(const Scalar& s, const GEndo& e) { return {e.chart, e.m * s}; }

bool operator==(const GEndo& e, const GEndo& f) { return e.chart == f.chart && is_zero(e.m - f.m); }

GEndo tensor_term(const GVector& u, const GVector& v) {
  require_same_chart(u.chart, v.chart, "tensor_term");
  return {u.chart, u.comps * (swap_matrix(u.n()) * v.comps).transpose()};
}

std::string matrix_witness(const Chart& chart, const Matrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero())
        return "row " + frame_label(chart, static_cast<std::size_t>(r)) + ", column " +
               frame_label(chart, static_cast<std::size_t>(c)) + ": " + to_string(m(r, c).reduced());
  return {};
}

std::string tangent_matrix_witness(const Chart& chart, const Matrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero())
        return "row D" + chart.coord(static_cast<std::size_t>(r)).name() + ", column D" +
               chart.coord(static_cast<std::size_t>(c)).name() + ": " + to_string(m(r, c).reduced());
  return {};
}

CheckReport check_gcs_axioms(const GEndo& j) {
  CheckReport r;
  r.add("even_dimension", "chart dimension is even", j.n() % 2 == 0,
        j.n() % 2 == 0 ? "" : "dimension " + std::to_string(j.n()));
  const Matrix skew = j.m + adjoint(j).m;
  r.add("skew", "J + J* = 0", is_zero(skew), matrix_witness(j.chart, skew));
  const Matrix square = (j * j).m + GEndo::identity(j.chart).m;
  r.add("square", "J^2 = -Id", is_zero(square), matrix_witness(j.chart, square));
  return r;
}

CheckReport check_gcs_axioms(const GCS& j) { return check_gcs_axioms(j.j); }

CheckReport check_gacs_axioms(const GEndo& phi, const GVector& e_plus, const GVector& e_minus) {
  require_same_chart(phi.chart, e_plus.chart, "check_gacs_axioms");
  require_same_chart(phi.chart, e_minus.chart, "check_gacs_axioms");
  CheckReport r;
  const Matrix skew = phi.m + adjoint(phi).m;
  r.add("skew", "Phi + Phi* = 0", is_zero(skew), matrix_witness(phi.chart, skew));

  const Matrix square = (phi * phi).m + GEndo::identity(phi.chart).m - tensor_term(e_plus, e_minus).m -
                        tensor_term(e_minus, e_plus).m;
  r.add("square", "Phi^2 = -Id + E+ (x) E- + E- (x) E+", is_zero(square), matrix_witness(phi.chart, square));

  const Scalar pp = neutral_pairing(e_plus, e_plus);
  r.add("isotropic_plus", "<E+, E+> = 0", pp.is_zero(), pp.is_zero() ? "" : to_string(pp.reduced()));
  const Scalar mm = neutral_pairing(e_minus, e_minus);
  r.add("isotropic_minus", "<E-, E-> = 0", mm.is_zero(), mm.is_zero() ? "" : to_string(mm.reduced()));
  const Scalar pm = neutral_pairing(e_plus, e_minus) * Scalar(2);
  const bool dual = (pm - Scalar(1)).is_zero();
  r.add("dual_pairing", "2<E+, E-> = 1", dual, dual ? "" : "2<E+, E-> = " + to_string(pm.reduced()));

  const GVector kp = apply(phi, e_plus);
  r.add("kernel_plus", "Phi(E+) = 0", is_zero(kp), vector_witness(kp));
  const GVector km = apply(phi, e_minus);
  r.add("kernel_minus", "Phi(E-) = 0", is_zero(km), vector_witness(km));
  return r;
}

CheckReport check_gacs_axioms(const GACS& s) { return check_gacs_axioms(s.phi, s.e_plus, s.e_minus); }

CheckReport check_classical_axioms(const ClassicalACS& a) {
  require_same_chart(a.xi.chart, a.eta.chart, "check_classical_axioms");
  const Chart& chart = a.chart();
  const auto n = idx(chart.dim());
  require_size(chart, a.phi, chart.dim(), "phi");
  CheckReport r;

  const Matrix square = a.phi * a.phi + Matrix::Identity(n, n) - a.xi.comps * a.eta.comps.transpose();
  r.add("phi_square", "phi^2 = -Id + eta (x) xi", is_zero(square), tangent_matrix_witness(chart, square));

  const Scalar ex = interior(a.xi, a.eta) - Scalar(1);
  r.add("eta_xi", "eta(xi) = 1", ex.is_zero(),
        ex.is_zero() ? "" : "eta(xi) = " + to_string((ex + Scalar(1)).reduced()));

  const VectorField px{chart, a.phi * a.xi.comps};
  r.add("phi_xi", "phi(xi) = 0", is_zero(px), is_zero(px) ? "" : to_string(px));

  const OneForm ep{chart, a.phi.transpose() * a.eta.comps};
  r.add("eta_phi", "eta o phi = 0", is_zero(ep), is_zero(ep) ? "" : to_string(ep));
  return r;
}

GCS from_complex(const Chart& chart, const Matrix& j) {
  require_size(chart, j, chart.dim(), "complex structure matrix");
  const auto n = idx(chart.dim());
  const Matrix square = j * j + Matrix::Identity(n, n);
  if (!is_zero(square))
    throw PreconditionError("complex structure does not square to -Id: " + tangent_matrix_witness(chart, square));
  return {GEndo::from_blocks(-j, Bivector::zero(chart), TwoForm::zero(chart), j.transpose())};
}

GCS from_symplectic(const TwoForm& w) {
  const Chart& chart = w.chart;
  require_size(chart, w.comps, chart.dim(), "two-form");
  const Matrix sym = w.comps + w.comps.transpose();
  if (!is_zero(sym)) throw PreconditionError("two-form is not antisymmetric: " + tangent_matrix_witness(chart, sym));
  const auto inv = inverse(w.comps);
  if (!inv) throw PreconditionError("two-form is degenerate: its determinant vanishes identically");
  const Bivector p{chart, reduced(-*inv)};
  const auto n = idx(chart.dim());
  return {GEndo::from_blocks(Matrix::Zero(n, n), p, w, Matrix::Zero(n, n))};
}

GACS from_almost_contact(const ClassicalACS& a) {
  const CheckReport r = check_classical_axioms(a);
  if (!r.ok()) throw PreconditionError("classical almost contact axioms fail: " + first_failure(r));
  const Chart& chart = a.chart();
  const GEndo phi =
      GEndo::from_blocks(a.phi, Bivector::zero(chart), TwoForm::zero(chart), -a.phi.transpose());
  return {phi, GVector::from(a.xi), GVector::from(a.eta)};
}

ContactData contact_data(const OneForm& eta) {
  const Chart& chart = eta.chart;
  if (chart.dim() % 2 == 0)
    throw PreconditionError("contact form needs an odd-dimensional chart, got dimension " +
                            std::to_string(chart.dim()));
  const auto n = idx(chart.dim());
  ContactData out{eta, d(eta), Matrix(), VectorField::zero(chart), Bivector::zero(chart), {}};
  out.rho = reduced(out.d_eta.comps.transpose() - eta.comps * eta.comps.transpose());
  const auto rho_inv = inverse(out.rho);
  if (!rho_inv)
    throw PreconditionError("rho(X) = i_X d eta - eta(X) eta is singular; not a contact form on the generic locus");

  Matrix system(n + 1, n);
  system << out.d_eta.comps.transpose(), eta.comps.transpose();
  Vector rhs = Vector::Zero(n + 1);
  rhs(n) = Scalar(1);
  const auto xi = solve(system, rhs);
  if (!xi || RowEchelon(system).rank() != n)
    throw PreconditionError("Reeb system i_xi d eta = 0, eta(xi) = 1 has no unique solution");
  out.reeb = {chart, reduced(*xi)};

  out.pi = {chart, reduced(rho_inv->transpose() * out.d_eta.comps * *rho_inv)};
  const GEndo phi = GEndo::from_blocks(Matrix::Zero(n, n), out.pi, out.d_eta, Matrix::Zero(n, n));
  out.structure = {phi, GVector::from(eta), GVector::from(out.reeb)};
  return out;
}

GACS from_contact(const OneForm& eta) { return contact_data(eta).structure; }

std::string to_string(const GVector& a) {
  LinearText text;
  for (std::size_t k = 0; k < 2 * a.n(); ++k) text.add(a.comps(idx(k)).reduced(), frame_label(a.chart, k));
  return text.str();
}

}  // namespace gg
