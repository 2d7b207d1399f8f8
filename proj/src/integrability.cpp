#include "gg/integrability.hpp"

#include "gg/elimination.hpp"
#include "gg/errors.hpp"
#include "gg/random.hpp"

namespace gg {

namespace {

Eigen::Index idx(std::size_t k) { return static_cast<Eigen::Index>(k); }

GVector eigen_generator(const GEndo& e, const GVector& a) { return a - imaginary_unit() * apply(e, a); }

GVector column(const Chart& chart, const Matrix& m, Eigen::Index c) { return {chart, m.col(c)}; }

GVector random_gvector(RandomSource& rnd, const Chart& chart) {
  return GVector::from(rnd.vector_field(chart, 1), rnd.one_form(chart, 1));
}

}  // namespace

const char* to_string(FrameLabel label) {
  switch (label) {
    case FrameLabel::e10: return "E10";
    case FrameLabel::e01: return "E01";
    case FrameLabel::l_plus: return "Lplus";
    case FrameLabel::l_minus: return "Lminus";
    case FrameLabel::l_bundle: return "Lbundle";
    case FrameLabel::custom: return "custom";
  }
  return "custom";
}

SubbundleFrame SubbundleFrame::make(const Chart& chart, std::vector<GVector> generators, FrameLabel label) {
  for (const auto& g : generators) require_same_chart(chart, g.chart, "SubbundleFrame");
  SubbundleFrame f{chart, std::move(generators), label, 0};
  f.generic_rank = RowEchelon(f.matrix()).rank();
  return f;
}

Matrix SubbundleFrame::matrix() const {
  Matrix m(2 * idx(chart.dim()), idx(generators.size()));
  for (std::size_t k = 0; k < generators.size(); ++k) m.col(idx(k)) = generators[k].comps;
  return m;
}

Eigen::Index probe_rank(const SubbundleFrame& frame, std::uint64_t seed) {
  RandomSource rnd(seed);
  const Matrix m = frame.matrix();
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      return rank_at(m, rnd.point(frame.chart));
    } catch (const PoleError&) {
    }
  }
  throw PoleError("no pole-free probe point found for frame " + std::string(to_string(frame.label)));
}

SubbundleFrame orthogonal_complement_frame(const GVector& e_plus, const GVector& e_minus) {
  require_same_chart(e_plus.chart, e_minus.chart, "orthogonal_complement_frame");
  const Chart& chart = e_plus.chart;
  const std::size_t size = 2 * chart.dim();
  Matrix conditions(2, idx(size));
  for (std::size_t k = 0; k < size; ++k) {
    const GVector b = GVector::basis(chart, k);
    conditions(0, idx(k)) = neutral_pairing(e_plus, b);
    conditions(1, idx(k)) = neutral_pairing(e_minus, b);
  }
  if (RowEchelon(conditions).rank() < 2)
    throw PreconditionError("E+ and E- are dependent; the pairing conditions have rank < 2");
  const Matrix kernel = nullspace(conditions);
  std::vector<GVector> gens;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) gens.push_back(column(chart, kernel, c));
  return SubbundleFrame::make(chart, std::move(gens), FrameLabel::custom);
}

SubbundleFrame eigenframe_E10(const GACS& s) {
  const SubbundleFrame comp = orthogonal_complement_frame(s.e_plus, s.e_minus);
  std::vector<GVector> gens;
  for (const auto& a : comp.generators) gens.push_back(eigen_generator(s.phi, a));
  return SubbundleFrame::make(s.chart(), std::move(gens), FrameLabel::e10);
}

SubbundleFrame frame_Lpm(const GACS& s, int sign) {
  std::vector<GVector> gens{sign > 0 ? s.e_plus : s.e_minus};
  for (auto& g : eigenframe_E10(s).generators) gens.push_back(std::move(g));
  return SubbundleFrame::make(s.chart(), std::move(gens), sign > 0 ? FrameLabel::l_plus : FrameLabel::l_minus);
}

SubbundleFrame eigenframe_L(const GCS& j) {
  std::vector<GVector> gens;
  for (const auto& a : coordinate_frame(j.chart())) gens.push_back(eigen_generator(j.j, a));
  return SubbundleFrame::make(j.chart(), std::move(gens), FrameLabel::l_bundle);
}

Membership span_membership(const SubbundleFrame& frame, const GVector& v) {
  require_same_chart(frame.chart, v.chart, "span_membership");
  const SpanEliminator::Result r = SpanEliminator(frame.matrix()).reduce(v.comps);
  Membership out{r.member, {}, {v.chart, r.residual}};
  for (Eigen::Index k = 0; k < r.coefficients.size(); ++k) out.coefficients.push_back(r.coefficients(k));
  return out;
}

std::string Involutivity::witness(const SubbundleFrame& frame) const {
  if (involutive) return {};
  return "[[" + to_string(frame.generators[first]) + ", " + to_string(frame.generators[second]) +
         "]] = " + to_string(bracket) + "; residual " + to_string(residual);
}

Involutivity is_involutive(const SubbundleFrame& frame) {
  const auto& gens = frame.generators;
  bool isotropic = true;
  for (std::size_t i = 0; i < gens.size() && isotropic; ++i)
    for (std::size_t j = i; j < gens.size() && isotropic; ++j)
      if (!neutral_pairing(gens[i], gens[j]).is_zero()) isotropic = false;

  const SpanEliminator span(frame.matrix());
  Involutivity out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const GVector bracket = courant_bracket(gens[i], gens[j]);
      const auto r = span.reduce(bracket.comps);
      if (!r.member) {
        out.involutive = false;
        out.first = i;
        out.second = j;
        out.bracket = bracket;
        out.residual = {frame.chart, r.residual};
        return out;
      }
    }
  if (!isotropic)
    throw PreconditionError("frame is not isotropic; closure of generator brackets does not decide involutivity");
  return out;
}

GVector nijenhuis(const GEndo& j, const GVector& a, const GVector& b) {
  const GVector ja = apply(j, a);
  const GVector jb = apply(j, b);
  return courant_bracket(ja, jb) - apply(j, courant_bracket(a, jb)) - apply(j, courant_bracket(ja, b)) +
         apply(j, apply(j, courant_bracket(a, b)));
}

GVector nijenhuis(const GCS& j, const GVector& a, const GVector& b) { return nijenhuis(j.j, a, b); }

std::string NijenhuisWitness::str(const Chart& chart) const {
  return "N(" + frame_label(chart, first) + ", " + frame_label(chart, second) + ") = " + to_string(value);
}

std::optional<NijenhuisWitness> nijenhuis_on_frame(const GEndo& j) {
  const std::size_t size = 2 * j.n();
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b) {
      GVector n = nijenhuis(j, GVector::basis(j.chart, a), GVector::basis(j.chart, b));
      if (!is_zero(n)) return NijenhuisWitness{a, b, std::move(n)};
    }
  return std::nullopt;
}

GcsIntegrability is_integrable_gcs(const GCS& j, std::uint64_t seed) {
  GcsIntegrability out;
  out.nijenhuis = nijenhuis_on_frame(j.j);
  const SubbundleFrame l = eigenframe_L(j);
  out.eigenbundle = is_involutive(l);
  out.integrable = !out.nijenhuis && out.eigenbundle.involutive;

  out.report.add("nijenhuis", "N_J vanishes on all coordinate frame pairs", !out.nijenhuis,
                 out.nijenhuis ? out.nijenhuis->str(j.chart()) : "");
  out.report.add("involutive_L", "the +i eigenbundle L is Courant involutive", out.eigenbundle.involutive,
                 out.eigenbundle.witness(l));
  const bool agree = !out.nijenhuis == out.eigenbundle.involutive;
  out.report.add("agreement", "N_J = 0 exactly when L is involutive", agree);
  if (!agree) out.report.theorem_violation = true;

  RandomSource rnd(seed);
  std::string tensor_witness;
  for (int trial = 0; trial < 3 && tensor_witness.empty(); ++trial) {
    const Scalar f = rnd.polynomial(j.chart(), 2);
    const GVector a = random_gvector(rnd, j.chart());
    const GVector b = random_gvector(rnd, j.chart());
    const GVector diff = nijenhuis(j.j, f * a, b) - f * nijenhuis(j.j, a, b);
    if (!is_zero(diff)) tensor_witness = "f = " + to_string(f) + ": " + to_string(diff);
  }
  out.report.add("tensoriality", "N_J(f a, b) = f N_J(a, b) on random data", tensor_witness.empty(), tensor_witness);
  if (!tensor_witness.empty()) out.report.theorem_violation = true;
  return out;
}

const char* to_string(GacsClass c) {
  switch (c) {
    case GacsClass::not_integrable: return "not integrable";
    case GacsClass::plus_only: return "integrable via L+ only";
    case GacsClass::minus_only: return "integrable via L- only";
    case GacsClass::strong: return "strong";
  }
  return "not integrable";
}

GacsClassification classify_gacs(const GACS& s) {
  GacsClassification out;
  out.frame_plus = frame_Lpm(s, +1);
  out.frame_minus = frame_Lpm(s, -1);
  out.plus = is_involutive(out.frame_plus);
  out.minus = is_involutive(out.frame_minus);
  if (out.plus.involutive && out.minus.involutive)
    out.verdict = GacsClass::strong;
  else if (out.plus.involutive)
    out.verdict = GacsClass::plus_only;
  else if (out.minus.involutive)
    out.verdict = GacsClass::minus_only;
  out.report.add("involutive_L+", "L+ = L_E+ (+) E10 is Courant involutive", out.plus.involutive,
                 out.plus.witness(out.frame_plus));
  out.report.add("involutive_L-", "L- = L_E- (+) E10 is Courant involutive", out.minus.involutive,
                 out.minus.witness(out.frame_minus));
  return out;
}

CheckReport lemma1_report(const GACS& s) {
  CheckReport r;
  std::string wp;
  std::string wm;
  for (const auto& a : coordinate_frame(s.chart())) {
    const GVector pa = apply(s.phi, a);
    const Scalar p = neutral_pairing(s.e_plus, pa);
    const Scalar m = neutral_pairing(s.e_minus, pa);
    if (wp.empty() && !p.is_zero()) wp = "<E+, Phi(" + to_string(a) + ")> = " + to_string(p.reduced());
    if (wm.empty() && !m.is_zero()) wm = "<E-, Phi(" + to_string(a) + ")> = " + to_string(m.reduced());
  }
  r.add("lemma1_plus", "<E+, Phi a> = 0 on the coordinate frame", wp.empty(), wp);
  r.add("lemma1_minus", "<E-, Phi a> = 0 on the coordinate frame", wm.empty(), wm);
  return r;
}

Lemma2 lemma2_containments(const GACS& s) {
  const SubbundleFrame e10 = eigenframe_E10(s);
  const SpanEliminator span(e10.matrix());
  Lemma2 out;
  for (int sign : {+1, -1}) {
    const SubbundleFrame l = frame_Lpm(s, sign);
    std::string witness;
    for (const auto& g : l.generators) {
      for (const auto& h : e10.generators) {
        const GVector b = courant_bracket(g, h);
        const auto r = span.reduce(b.comps);
        if (!r.member) {
          witness = "[[" + to_string(g) + ", " + to_string(h) + "]] has residual " + to_string(GVector{s.chart(), r.residual});
          break;
        }
      }
      if (!witness.empty()) break;
    }
    const bool contained = witness.empty();
    (sign > 0 ? out.plus_contained : out.minus_contained) = contained;
    const std::string tag = sign > 0 ? "+" : "-";
    out.report.add({"lemma2_L" + tag, "[[L" + tag + ", E10]] is contained in E10",
                    contained ? Verdict::pass : Verdict::warning, witness});
  }
  return out;
}

}  // namespace gg
