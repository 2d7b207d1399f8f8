#pragma once

#include <string>
#include <vector>

#include "gg/calculus.hpp"
#include "gg/report.hpp"

namespace gg {

/// Section X + a of TM (+) T*M. Components are stacked as
/// [X^1 .. X^n, a_1 .. a_n]; complex coefficients are allowed.
struct GVector {
  Chart chart;
  Vector comps;

  static GVector zero(const Chart& chart);
  static GVector from(const VectorField& x);
  static GVector from(const OneForm& a);
  static GVector from(const VectorField& x, const OneForm& a);
  /// The k-th element of the coordinate frame D<c1>..D<cn>, d<c1>..d<cn>.
  static GVector basis(const Chart& chart, std::size_t k);

  std::size_t n() const { return chart.dim(); }
  VectorField vec() const;
  OneForm form() const;
};

GVector operator+(const GVector& a, const GVector& b);
GVector operator-(const GVector& a, const GVector& b);
GVector operator-(const GVector& a);
GVector operator*(const Scalar& f, const GVector& a);
bool is_zero(const GVector& a);

/// Coordinate frame of TM (+) T*M, 2n elements.
std::vector<GVector> coordinate_frame(const Chart& chart);
/// "Dx" for k < n, "dx" for k >= n.
std::string frame_label(const Chart& chart, std::size_t k);

/// <X + a, Y + b> = (b(X) + a(Y)) / 2
Scalar neutral_pairing(const GVector& a, const GVector& b);

/// [X,Y] + L_X b - L_Y a - d(i_X b - i_Y a) / 2
GVector courant_bracket(const GVector& a, const GVector& b);

/// Endomorphism of TM (+) T*M stored as its 2n x 2n action matrix: column k
/// is the image of the k-th coordinate frame element. In blocks
///   [ A   P ]   A: tangent -> tangent   P: forms -> tangent
///   [ S   B ]   S: tangent -> forms     B: forms -> forms
/// A bivector p acts as P = p^T and a two-form s as S = s^T.
struct GEndo {
  Chart chart;
  Matrix m;

  static GEndo zero(const Chart& chart);
  static GEndo identity(const Chart& chart);
  static GEndo from_blocks(const Matrix& a, const Bivector& p, const TwoForm& s, const Matrix& b);

  std::size_t n() const { return chart.dim(); }
  Matrix block_a() const;
  Bivector block_pi() const;
  TwoForm block_sigma() const;
  Matrix block_b() const;
};

GVector apply(const GEndo& e, const GVector& a);
GVector operator*(const GEndo& e, const GVector& a);
/// Adjoint under the neutral metric: <e a, b> = <a, adjoint(e) b>.
GEndo adjoint(const GEndo& e);
GEndo compose(const GEndo& e, const GEndo& f);
GEndo operator*(const GEndo& e, const GEndo& f);
GEndo operator+(const GEndo& e, const GEndo& f);
GEndo operator-(const GEndo& e, const GEndo& f);
GEndo operator*(const Scalar& s, const GEndo& e);
bool operator==(const GEndo& e, const GEndo& f);

/// (u (x) v)(b) = 2 <v, b> u
GEndo tensor_term(const GVector& u, const GVector& v);

/// Generalized almost contact triple (Phi, E+, E-).
struct GACS {
  GEndo phi;
  GVector e_plus;
  GVector e_minus;

  const Chart& chart() const { return phi.chart; }
};

/// Generalized almost complex structure.
struct GCS {
  GEndo j;

  const Chart& chart() const { return j.chart; }
};

/// Classical almost contact data (phi, xi, eta); column k of phi is the image
/// of the k-th coordinate field.
struct ClassicalACS {
  Matrix phi;
  VectorField xi;
  OneForm eta;

  const Chart& chart() const { return xi.chart; }
};

/// "row dy, column Dx: expr" for the first nonzero entry of `m` over the
/// coordinate frame of `chart`; empty if `m` vanishes.
std::string matrix_witness(const Chart& chart, const Matrix& m);
/// Same, with both indices ranging over the coordinate fields only.
std::string tangent_matrix_witness(const Chart& chart, const Matrix& m);

CheckReport check_gcs_axioms(const GEndo& j);
CheckReport check_gcs_axioms(const GCS& j);
CheckReport check_gacs_axioms(const GEndo& phi, const GVector& e_plus, const GVector& e_minus);
CheckReport check_gacs_axioms(const GACS& s);
/// phi^2 = -Id + eta (x) xi, eta(xi) = 1, phi xi = 0, eta o phi = 0.
CheckReport check_classical_axioms(const ClassicalACS& a);

/// Block matrix diag(-J, J*). Throws PreconditionError unless J^2 = -Id.
GCS from_complex(const Chart& chart, const Matrix& j);
/// Blocks P = -w^{-1}, S = w. Throws PreconditionError when det w vanishes
/// identically or w is not antisymmetric.
GCS from_symplectic(const TwoForm& w);
/// Phi = diag(phi, -phi*), E+ = xi, E- = eta. Throws PreconditionError with a
/// witness when a classical axiom fails.
GACS from_almost_contact(const ClassicalACS& a);

/// Intermediate objects of the contact construction.
struct ContactData {
  OneForm eta;
  TwoForm d_eta;
  /// Column k holds the components of rho(D<c_k>) = i_{D<c_k>} d eta - eta_k eta.
  Matrix rho;
  VectorField reeb;
  Bivector pi;
  GACS structure;
};

/// Phi with blocks P = pi, S = d eta; E+ = eta, E- = Reeb field.
/// Throws PreconditionError for even dimension, singular rho or an
/// unsolvable Reeb system.
ContactData contact_data(const OneForm& eta);
GACS from_contact(const OneForm& eta);

std::string to_string(const GVector& a);

}  // namespace gg
