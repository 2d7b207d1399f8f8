#pragma once

// Example structures and oracle helpers shared by the test binaries.

#include <stdexcept>
#include <string>
#include <vector>

#include "gg/parse.hpp"
#include "gg/products.hpp"
#include "oracle_values.hpp"

namespace ex {

using namespace gg;

inline Scalar S(const Chart& c, const std::string& text) { return parse_scalar(text, c.names()); }

/// Row-major square matrix of scalar expressions.
inline Matrix mat(const Chart& c, const std::vector<std::string>& rows) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  if (static_cast<Eigen::Index>(rows.size()) != n * n) throw std::invalid_argument("mat: wrong entry count");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = S(c, rows[static_cast<std::size_t>(i * n + j)]);
  return m;
}

inline Vector vec(const Chart& c, const std::vector<std::string>& comps) {
  Vector v(static_cast<Eigen::Index>(comps.size()));
  for (std::size_t k = 0; k < comps.size(); ++k) v(static_cast<Eigen::Index>(k)) = S(c, comps[k]);
  return v;
}

inline VectorField field(const Chart& c, const std::vector<std::string>& comps) { return {c, vec(c, comps)}; }
inline OneForm form(const Chart& c, const std::vector<std::string>& comps) { return {c, vec(c, comps)}; }
inline GVector section(const Chart& c, const std::vector<std::string>& comps) { return {c, vec(c, comps)}; }

inline const std::vector<std::string>& oracle_strings(const std::string& key) {
  const auto it = oracle::values.find(key);
  if (it == oracle::values.end()) throw std::out_of_range("no oracle value '" + key + "'");
  return it->second;
}

inline Vector oracle_vector(const Chart& c, const std::string& key) { return vec(c, oracle_strings(key)); }
inline GVector oracle_section(const Chart& c, const std::string& key) { return {c, oracle_vector(c, key)}; }

/// Exact componentwise equality via is_zero of the difference.
inline bool same(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index k = 0; k < a.size(); ++k)
    if (!(a(k) - b(k)).is_zero()) return false;
  return true;
}
inline bool same(const GVector& a, const GVector& b) { return same(a.comps, b.comps); }

inline bool zero(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline Chart r2() { return Chart({"x", "y"}); }
inline Chart r3(const std::vector<std::string>& names = {"x", "y", "z"}) { return Chart(names); }

/// J(Dx) = Dy, J(Dy) = -Dx.
inline GCS std_complex() {
  const Chart c = r2();
  return from_complex(c, mat(c, {"0", "-1", "1", "0"}));
}

inline TwoForm two_form(const Chart& c, const std::vector<std::string>& rows) { return {c, mat(c, rows)}; }

inline GCS symplectic_dxdy() { return from_symplectic(two_form(r2(), {"0", "1", "-1", "0"})); }

/// (1 + x^2) dx^dy on R^2.
inline GCS symplectic_weighted_r2() {
  return from_symplectic(two_form(r2(), {"0", "1 + x^2", "-1 - x^2", "0"}));
}

/// (1 + z^2) dx^dy + dz^dw on R^4; not closed.
inline GCS symplectic_nonclosed_r4() {
  const Chart c({"x", "y", "z", "w"});
  return from_symplectic(
      two_form(c, {"0", "1 + z^2", "0", "0", "-1 - z^2", "0", "0", "0", "0", "0", "0", "1", "0", "0", "-1", "0"}));
}

/// phi(Dx) = Dy, phi(Dy) = -Dx, xi = Dz, eta = dz.
inline ClassicalACS cosymplectic_classical(const std::vector<std::string>& names = {"x", "y", "z"}) {
  const Chart c = r3(names);
  return {mat(c, {"0", "-1", "0", "1", "0", "0", "0", "0", "0"}), VectorField::coordinate_field(c, 2),
          OneForm::differential(c, 2)};
}
inline GACS cosymplectic(const std::vector<std::string>& names = {"x", "y", "z"}) {
  return from_almost_contact(cosymplectic_classical(names));
}

inline OneForm darboux_eta(const Chart& c) { return form(c, {"-" + c.names()[1], "0", "1"}); }

/// eta = dz - y dx, xi = Dz, phi(Dx) = -Dy, phi(Dy) = Dx + y Dz.
inline ClassicalACS sasakian_classical(const std::vector<std::string>& names = {"x", "y", "z"}) {
  const Chart c = r3(names);
  const std::string y = names[1];
  return {mat(c, {"0", "1", "0", "-1", "0", "0", "0", y, "0"}), VectorField::coordinate_field(c, 2), darboux_eta(c)};
}

/// Contact structure of eta = dz - y dx.
inline GACS darboux_contact(const std::vector<std::string>& names = {"x", "y", "z"}) {
  return from_contact(darboux_eta(r3(names)));
}

/// phi(Dy) = f (Dx + y Dz), phi(Dx + y Dz) = -Dy / f on (R^3, dz - y dx).
inline ClassicalACS perturbed_classical(const std::string& f) {
  const Chart c = r3();
  return {mat(c, {"0", f, "0", "-1/(" + f + ")", "0", "0", "0", "(" + f + ")*y", "0"}),
          VectorField::coordinate_field(c, 2), darboux_eta(c)};
}

/// eta = dz + z dx, xi = Dz, phi(Dx) = Dy, phi(Dy) = -Dx + z Dz; L_xi eta = dx.
inline ClassicalACS twisted_classical(const std::vector<std::string>& names = {"x", "y", "z"}) {
  const Chart c = r3(names);
  const std::string z = names[2];
  return {mat(c, {"0", "-1", "0", "1", "0", "0", "0", z, "0"}), VectorField::coordinate_field(c, 2),
          form(c, {z, "0", "1"})};
}

}  // namespace ex
