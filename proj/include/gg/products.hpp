#pragma once

#include <cstdint>
#include <string>

#include "gg/integrability.hpp"

namespace gg {

/// Zero-padded copy of a factor object into the product chart.
GVector lift(const GVector& a, Side side, const Chart& product);
/// Acts as `e` on the factor's slots and as zero on the other factor.
GEndo lift(const GEndo& e, Side side, const Chart& product);

/// J(a1, a2) = (Phi1 a1 - 2<E+2, a2> E+1 - 2<E-2, a2> E-1,
///              Phi2 a2 + 2<E+1, a1> E+2 + 2<E-1, a1> E-2)
GCS product_gcs(const GACS& left, const GACS& right);

/// Lifted E10 of each factor, then (E-1, -i E+2) and (E+1, -i E-2).
SubbundleFrame product_eigenframe(const GACS& left, const GACS& right);

/// Mutual span membership; the witness names the first generator that
/// escapes the other span.
struct SpanComparison {
  bool equal = false;
  std::string witness;
};
SpanComparison compare_spans(const SubbundleFrame& a, const SubbundleFrame& b);

struct Theorem1 {
  GCS product;
  GacsClassification left;
  GacsClassification right;
  GVector bracket_left;
  GVector bracket_right;
  GcsIntegrability integrability;
  CheckReport report;
};

/// The product is integrable iff both factors are strong and both
/// [[E+, E-]] vanish. A contradiction sets `report.theorem_violation`.
Theorem1 theorem1_verify(const GACS& left, const GACS& right, std::uint64_t seed = 0);

/// Psi = Phi (+) J with E+ and E- lifted from the left factor.
GACS product_gacs(const GACS& s, const GCS& j);

struct Theorem2 {
  GACS product;
  GacsClassification left;
  GcsIntegrability right;
  GacsClassification classification;
  CheckReport report;
};

/// Psi integrable iff Phi integrable and J integrable; Psi strong iff Phi
/// strong and J integrable; E10 of Psi is lifted E10 (+) lifted L.
Theorem2 theorem2_verify(const GACS& s, const GCS& j, std::uint64_t seed = 0);

/// Classical almost complex structure on a product chart.
struct ClassicalComplex {
  Chart chart;
  Matrix j;
};

/// J(X1, X2) = (phi1 X1 - eta2(X2) xi1, phi2 X2 + eta1(X1) xi2)
ClassicalComplex morimoto_product(const ClassicalACS& left, const ClassicalACS& right);

/// (phi = 0, D<t>, d<t>) on the line with coordinate `t`.
ClassicalACS standard_line(const std::string& t = "t");
/// Phi = 0, E+ = d<t>, E- = D<t>.
GACS standard_line_structure(const std::string& t = "t");

/// J(X, f D<t>) = (phi X - f xi, eta(X) D<t>) on chart ++ [t].
ClassicalComplex classical_cone_j(const ClassicalACS& a, const std::string& t = "t");

struct NormalityTensors {
  bool is_normal = false;
  /// Checks T1..T4; a nonvanishing tensor is a warning with its first
  /// nonzero component as witness.
  CheckReport report;
};

/// T1(X,Y) = [phi,phi](X,Y) + d eta(X,Y) xi, with
///   [phi,phi](X,Y) = phi^2[X,Y] + [phi X, phi Y] - phi[phi X, Y] - phi[X, phi Y]
///   d eta(X,Y) the d_oneform entry (no factor 1/2)
/// T2(X,Y) = (L_{phi X} eta)(Y) - (L_{phi Y} eta)(X)
/// T3(X)   = [xi, phi X] - phi[xi, X]
/// T4      = L_xi eta
NormalityTensors normality_tensors(const ClassicalACS& a);

struct NormalityCorrespondence {
  NormalityTensors tensors;
  GCS product;
  ClassicalComplex cone;
  GcsIntegrability integrability;
  CheckReport report;
};

/// Product with the standard line structure against the classical normality
/// tensors, [[E+, E-]] against L_xi eta, and the product against
/// from_complex of the classical cone structure.
NormalityCorrespondence normality_correspondence(const ClassicalACS& a, const std::string& t = "t",
                                                 std::uint64_t seed = 0);

}  // namespace gg
