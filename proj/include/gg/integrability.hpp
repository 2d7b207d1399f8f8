#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gg/generalized.hpp"

namespace gg {

enum class FrameLabel { e10, e01, l_plus, l_minus, l_bundle, custom };

const char* to_string(FrameLabel label);

/// Spanning set of a subbundle of (TM (+) T*M) (x) C. Redundant generators
/// are allowed.
struct SubbundleFrame {
  Chart chart;
  std::vector<GVector> generators;
  FrameLabel label = FrameLabel::custom;
  /// Rank over the rational-function field, i.e. the rank at a generic point.
  Eigen::Index generic_rank = 0;

  /// Validates the chart of every generator and records the generic rank.
  static SubbundleFrame make(const Chart& chart, std::vector<GVector> generators, FrameLabel label);

  /// 2n x k component matrix, one generator per column.
  Matrix matrix() const;
};

/// Rank of the component matrix at a seeded random integer point, retrying
/// points that hit a pole. Agrees with `generic_rank` off a proper subvariety.
Eigen::Index probe_rank(const SubbundleFrame& frame, std::uint64_t seed);

/// Solutions a of <E+, a> = <E-, a> = 0, one generator per free slot.
/// Throws PreconditionError when E+ and E- are generically dependent.
SubbundleFrame orthogonal_complement_frame(const GVector& e_plus, const GVector& e_minus);

/// Generators a - i Phi(a) over the orthogonal complement frame.
SubbundleFrame eigenframe_E10(const GACS& s);
/// E10 with E+ (sign > 0) or E- (sign < 0) adjoined in front.
SubbundleFrame frame_Lpm(const GACS& s, int sign);
/// Generators a - i J(a) over the coordinate frame.
SubbundleFrame eigenframe_L(const GCS& j);

struct Membership {
  bool member = false;
  std::vector<Scalar> coefficients;
  GVector residual;
};

Membership span_membership(const SubbundleFrame& frame, const GVector& v);

struct Involutivity {
  bool involutive = true;
  /// First offending generator pair (i, j), its bracket and the residual.
  std::size_t first = 0;
  std::size_t second = 0;
  GVector bracket;
  GVector residual;

  std::string witness(const SubbundleFrame& frame) const;
};

/// Pairwise Courant closure of the generators. A positive answer needs an
/// isotropic frame; for a non-isotropic frame only an escaping bracket is
/// reported and PreconditionError is thrown otherwise.
Involutivity is_involutive(const SubbundleFrame& frame);

/// N(a,b) = [[Ja, Jb]] - J[[a, Jb]] - J[[Ja, b]] + J^2[[a, b]]
GVector nijenhuis(const GEndo& j, const GVector& a, const GVector& b);
GVector nijenhuis(const GCS& j, const GVector& a, const GVector& b);

struct NijenhuisWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  GVector value;

  std::string str(const Chart& chart) const;
};

/// First nonzero N on coordinate-frame pairs (i < j), if any.
std::optional<NijenhuisWitness> nijenhuis_on_frame(const GEndo& j);

struct GcsIntegrability {
  bool integrable = false;
  std::optional<NijenhuisWitness> nijenhuis;
  Involutivity eigenbundle;
  /// Checks: nijenhuis, involutive_L, agreement, tensoriality.
  CheckReport report;
};

/// N on all coordinate-frame pairs and involutivity of L, which must agree;
/// tensoriality N(f a, b) = f N(a, b) is probed with random data from `seed`.
GcsIntegrability is_integrable_gcs(const GCS& j, std::uint64_t seed = 0);

enum class GacsClass { not_integrable, plus_only, minus_only, strong };

const char* to_string(GacsClass c);

struct GacsClassification {
  GacsClass verdict = GacsClass::not_integrable;
  Involutivity plus;
  Involutivity minus;
  SubbundleFrame frame_plus;
  SubbundleFrame frame_minus;
  /// Checks: involutive_L+, involutive_L-.
  CheckReport report;
};

GacsClassification classify_gacs(const GACS& s);

/// <E+, Phi a> = <E-, Phi a> = 0 on the coordinate frame.
CheckReport lemma1_report(const GACS& s);

struct Lemma2 {
  bool plus_contained = false;   // [[L+, E10]] in E10
  bool minus_contained = false;  // [[L-, E10]] in E10
  CheckReport report;
};

Lemma2 lemma2_containments(const GACS& s);

}  // namespace gg
