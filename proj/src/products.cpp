#include "gg/products.hpp"

#include "gg/elimination.hpp"
#include "gg/errors.hpp"

namespace gg {

namespace {

Eigen::Index idx(std::size_t k) { return static_cast<Eigen::Index>(k); }

/// Product-frame index of the k-th frame element of a factor at `offset`.
Eigen::Index lifted_slot(std::size_t k, std::size_t factor_dim, std::size_t offset, std::size_t product_dim) {
  return idx(k < factor_dim ? offset + k : product_dim + offset + (k - factor_dim));
}

Check finding(std::string id, std::string description, bool ok, std::string witness) {
  return {std::move(id), std::move(description), ok ? Verdict::pass : Verdict::warning,
          ok ? std::string() : std::move(witness)};
}

void require_axioms(const CheckReport& r, const std::string& what) {
  for (const auto& c : r.checks)
    if (c.verdict == Verdict::fail)
      throw PreconditionError(what + " fails " + c.description + (c.witness.empty() ? "" : " (" + c.witness + ")"));
}

std::string class_witness(const GacsClassification& c) {
  std::string out = to_string(c.verdict);
  if (!c.plus.involutive) out += "; L+: " + c.plus.witness(c.frame_plus);
  if (!c.minus.involutive) out += "; L-: " + c.minus.witness(c.frame_minus);
  return out;
}

/// Integrability sub-checks of a factor or product are findings inside a
/// theorem report, not failures of the report.
CheckReport as_findings(CheckReport r) {
  for (auto& c : r.checks)
    if ((c.id == "nijenhuis" || c.id == "involutive_L") && c.verdict == Verdict::fail) c.verdict = Verdict::warning;
  return r;
}

bool integrable(GacsClass c) { return c != GacsClass::not_integrable; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

GVector lift(const GVector& a, Side side, const Chart& product) {
  return GVector::from(lift(a.vec(), side, product), lift(a.form(), side, product));
}

GEndo lift(const GEndo& e, Side side, const Chart& product) {
  const std::size_t off = product.factor_offset(e.chart, side == Side::right);
  const std::size_t nf = e.n();
  const std::size_t n = product.dim();
  GEndo out = GEndo::zero(product);
  for (std::size_t c = 0; c < 2 * nf; ++c)
    for (std::size_t r = 0; r < 2 * nf; ++r)
      out.m(lifted_slot(r, nf, off, n), lifted_slot(c, nf, off, n)) = e.m(idx(r), idx(c));
  return out;
}

GCS product_gcs(const GACS& left, const GACS& right) {
  require_axioms(check_gacs_axioms(left), "left factor");
  require_axioms(check_gacs_axioms(right), "right factor");
  const Chart chart = Chart::product(left.chart(), right.chart());
  const GVector p1 = lift(left.e_plus, Side::left, chart);
  const GVector m1 = lift(left.e_minus, Side::left, chart);
  const GVector p2 = lift(right.e_plus, Side::right, chart);
  const GVector m2 = lift(right.e_minus, Side::right, chart);
  const GEndo j = lift(left.phi, Side::left, chart) + lift(right.phi, Side::right, chart) - tensor_term(p1, p2) -
                  tensor_term(m1, m2) + tensor_term(p2, p1) + tensor_term(m2, m1);
  return {j};
}

SubbundleFrame product_eigenframe(const GACS& left, const GACS& right) {
  const Chart chart = Chart::product(left.chart(), right.chart());
  std::vector<GVector> gens;
  for (const auto& g : eigenframe_E10(left).generators) gens.push_back(lift(g, Side::left, chart));
  for (const auto& g : eigenframe_E10(right).generators) gens.push_back(lift(g, Side::right, chart));
  const Scalar i = imaginary_unit();
  gens.push_back(lift(left.e_minus, Side::left, chart) - i * lift(right.e_plus, Side::right, chart));
  gens.push_back(lift(left.e_plus, Side::left, chart) - i * lift(right.e_minus, Side::right, chart));
  return SubbundleFrame::make(chart, std::move(gens), FrameLabel::l_bundle);
}

SpanComparison compare_spans(const SubbundleFrame& a, const SubbundleFrame& b) {
  require_same_chart(a.chart, b.chart, "compare_spans");
  const SpanEliminator span_a(a.matrix());
  const SpanEliminator span_b(b.matrix());
  for (const auto& g : a.generators)
    if (!span_b.reduce(g.comps).member) return {false, to_string(g) + " is not in the second span"};
  for (const auto& g : b.generators)
    if (!span_a.reduce(g.comps).member) return {false, to_string(g) + " is not in the first span"};
  return {true, {}};
}

Theorem1 theorem1_verify(const GACS& left, const GACS& right, std::uint64_t seed) {
  Theorem1 out{product_gcs(left, right), classify_gacs(left), classify_gacs(right),
               courant_bracket(left.e_plus, left.e_minus), courant_bracket(right.e_plus, right.e_minus),
               {}, {}};
  const Chart& chart = out.product.chart();
  CheckReport& r = out.report;
  r.append(check_gcs_axioms(out.product), "product.");

  out.integrability = is_integrable_gcs(out.product, seed);
  const bool left_strong = out.left.verdict == GacsClass::strong;
  const bool right_strong = out.right.verdict == GacsClass::strong;
  const bool left_zero = is_zero(out.bracket_left);
  const bool right_zero = is_zero(out.bracket_right);
  r.add(finding("left_strong", "left factor is strong", left_strong, class_witness(out.left)));
  r.add(finding("right_strong", "right factor is strong", right_strong, class_witness(out.right)));
  r.add(finding("left_bracket", "[[E+, E-]] = 0 on the left factor", left_zero, to_string(out.bracket_left)));
  r.add(finding("right_bracket", "[[E+, E-]] = 0 on the right factor", right_zero, to_string(out.bracket_right)));
  r.add(finding("product_integrable", "product structure is integrable", out.integrability.integrable,
                out.integrability.nijenhuis ? out.integrability.nijenhuis->str(chart)
                                            : out.integrability.eigenbundle.witness(eigenframe_L(out.product))));
  r.append(as_findings(out.integrability.report), "product.");

  const bool conditions = left_strong && right_strong && left_zero && right_zero;
  const bool holds = conditions == out.integrability.integrable;
  r.add("biconditional", "product integrable iff both factors strong with vanishing [[E+, E-]]", holds,
        holds ? "" : "conditions " + yes_no(conditions) + ", integrable " + yes_no(out.integrability.integrable));
  if (!holds) r.theorem_violation = true;

  const SubbundleFrame frame = product_eigenframe(left, right);
  std::string eigen_witness;
  for (const auto& g : frame.generators) {
    const GVector defect = apply(out.product.j, g) - imaginary_unit() * g;
    if (!is_zero(defect)) {
      eigen_witness = "J g - i g = " + to_string(defect) + " for g = " + to_string(g);
      break;
    }
  }
  r.add("eigenframe_eigenvectors", "the four generator families are +i eigenvectors", eigen_witness.empty(),
        eigen_witness);
  const SpanComparison spans = compare_spans(frame, eigenframe_L(out.product));
  r.add("eigenframe_span", "the four generator families span the +i eigenbundle", spans.equal, spans.witness);
  return out;
}

GACS product_gacs(const GACS& s, const GCS& j) {
  require_axioms(check_gacs_axioms(s), "contact factor");
  require_axioms(check_gcs_axioms(j), "complex factor");
  const Chart chart = Chart::product(s.chart(), j.chart());
  const GEndo psi = lift(s.phi, Side::left, chart) + lift(j.j, Side::right, chart);
  return {psi, lift(s.e_plus, Side::left, chart), lift(s.e_minus, Side::left, chart)};
}

Theorem2 theorem2_verify(const GACS& s, const GCS& j, std::uint64_t seed) {
  Theorem2 out{product_gacs(s, j), classify_gacs(s), is_integrable_gcs(j, seed), {}, {}};
  out.classification = classify_gacs(out.product);
  CheckReport& r = out.report;
  r.append(check_gacs_axioms(out.product), "product.");

  const bool s_int = integrable(out.left.verdict);
  const bool s_strong = out.left.verdict == GacsClass::strong;
  const bool j_int = out.right.integrable;
  const bool p_int = integrable(out.classification.verdict);
  const bool p_strong = out.classification.verdict == GacsClass::strong;
  r.add(finding("left_integrable", "contact factor is integrable", s_int, class_witness(out.left)));
  r.add(finding("left_strong", "contact factor is strong", s_strong, class_witness(out.left)));
  r.add(finding("right_integrable", "complex factor is integrable", j_int,
                out.right.nijenhuis ? out.right.nijenhuis->str(j.chart()) : ""));
  r.append(as_findings(out.right.report), "right.");
  r.add(finding("product_integrable", "product is integrable", p_int, class_witness(out.classification)));
  r.add(finding("product_strong", "product is strong", p_strong, class_witness(out.classification)));

  const bool int_holds = p_int == (s_int && j_int);
  r.add("biconditional_integrable", "product integrable iff both factors integrable", int_holds,
        int_holds ? "" : "factors " + yes_no(s_int && j_int) + ", product " + yes_no(p_int));
  const bool strong_holds = p_strong == (s_strong && j_int);
  r.add("biconditional_strong", "product strong iff contact factor strong and complex factor integrable",
        strong_holds, strong_holds ? "" : "factors " + yes_no(s_strong && j_int) + ", product " + yes_no(p_strong));
  if (!int_holds || !strong_holds) r.theorem_violation = true;

  const Chart& chart = out.product.chart();
  std::vector<GVector> gens;
  for (const auto& g : eigenframe_E10(s).generators) gens.push_back(lift(g, Side::left, chart));
  for (const auto& g : eigenframe_L(j).generators) gens.push_back(lift(g, Side::right, chart));
  const SubbundleFrame expected = SubbundleFrame::make(chart, std::move(gens), FrameLabel::e10);
  const SpanComparison spans = compare_spans(eigenframe_E10(out.product), expected);
  r.add("eigenframe_span", "E10 of the product is lifted E10 (+) lifted L", spans.equal, spans.witness);
  return out;
}

ClassicalComplex morimoto_product(const ClassicalACS& left, const ClassicalACS& right) {
  require_axioms(check_classical_axioms(left), "left factor");
  require_axioms(check_classical_axioms(right), "right factor");
  const Chart chart = Chart::product(left.chart(), right.chart());
  const auto n1 = idx(left.chart().dim());
  const auto n2 = idx(right.chart().dim());
  Matrix j(n1 + n2, n1 + n2);
  j << left.phi, -left.xi.comps * right.eta.comps.transpose(), right.xi.comps * left.eta.comps.transpose(),
      right.phi;
  return {chart, j};
}

ClassicalACS standard_line(const std::string& t) {
  const Chart line({t});
  return {Matrix::Zero(1, 1), VectorField::coordinate_field(line, 0), OneForm::differential(line, 0)};
}

GACS standard_line_structure(const std::string& t) {
  const ClassicalACS a = standard_line(t);
  return {GEndo::zero(a.chart()), GVector::from(a.eta), GVector::from(a.xi)};
}

ClassicalComplex classical_cone_j(const ClassicalACS& a, const std::string& t) {
  require_axioms(check_classical_axioms(a), "classical structure");
  const Chart chart = Chart::product(a.chart(), Chart({t}));
  const auto n = idx(a.chart().dim());
  Matrix j = Matrix::Zero(n + 1, n + 1);
  j.topLeftCorner(n, n) = a.phi;
  j.topRightCorner(n, 1) = -a.xi.comps;
  j.bottomLeftCorner(1, n) = a.eta.comps.transpose();
  return {chart, j};
}

NormalityTensors normality_tensors(const ClassicalACS& a) {
  require_axioms(check_classical_axioms(a), "classical structure");
  const Chart& chart = a.chart();
  const std::size_t n = chart.dim();
  const auto phi = [&](const VectorField& x) { return VectorField{chart, a.phi * x.comps}; };
  const TwoForm d_eta = d(a.eta);
  std::vector<VectorField> e;
  for (std::size_t k = 0; k < n; ++k) e.push_back(VectorField::coordinate_field(chart, k));
  const auto label = [&](std::size_t k) { return "D" + chart.coord(k).name(); };

  std::string w1;
  std::string w2;
  std::string w3;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const VectorField& x = e[i];
      const VectorField& y = e[j];
      const VectorField torsion = phi(phi(lie_bracket(x, y))) + lie_bracket(phi(x), phi(y)) -
                                  phi(lie_bracket(phi(x), y)) - phi(lie_bracket(x, phi(y)));
      const VectorField t1 = torsion + evaluate(d_eta, x, y) * a.xi;
      if (w1.empty() && !is_zero(t1)) w1 = "T1(" + label(i) + ", " + label(j) + ") = " + to_string(t1);
      const Scalar t2 = pair(lie_derivative(phi(x), a.eta), y) - pair(lie_derivative(phi(y), a.eta), x);
      if (w2.empty() && !t2.is_zero()) w2 = "T2(" + label(i) + ", " + label(j) + ") = " + to_string(t2.reduced());
    }
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField t3 = lie_bracket(a.xi, phi(e[i])) - phi(lie_bracket(a.xi, e[i]));
    if (w3.empty() && !is_zero(t3)) w3 = "T3(" + label(i) + ") = " + to_string(t3);
  }
  const OneForm t4 = lie_derivative(a.xi, a.eta);
  const std::string w4 = is_zero(t4) ? "" : "T4 = " + to_string(t4);

  NormalityTensors out;
  out.report.add(finding("T1", "[phi,phi](X,Y) + d eta(X,Y) xi = 0", w1.empty(), w1));
  out.report.add(finding("T2", "(L_{phi X} eta)(Y) - (L_{phi Y} eta)(X) = 0", w2.empty(), w2));
  out.report.add(finding("T3", "(L_xi phi)(X) = 0", w3.empty(), w3));
  out.report.add(finding("T4", "L_xi eta = 0", w4.empty(), w4));
  out.is_normal = w1.empty() && w2.empty() && w3.empty() && w4.empty();
  return out;
}

NormalityCorrespondence normality_correspondence(const ClassicalACS& a, const std::string& t, std::uint64_t seed) {
  NormalityCorrespondence out;
  out.tensors = normality_tensors(a);
  const GACS s = from_almost_contact(a);
  out.product = product_gcs(s, standard_line_structure(t));
  out.cone = classical_cone_j(a, t);
  out.integrability = is_integrable_gcs(out.product, seed);
  const Chart& chart = out.product.chart();
  CheckReport& r = out.report;

  r.append(out.tensors.report, "normality.");
  r.add(finding("normal", "all four normality tensors vanish", out.tensors.is_normal, "see normality checks"));
  r.add(finding("product_integrable", "product with the standard line structure is integrable",
                out.integrability.integrable,
                out.integrability.nijenhuis ? out.integrability.nijenhuis->str(chart) : ""));
  r.append(as_findings(out.integrability.report), "product.");
  const bool i_holds = out.tensors.is_normal == out.integrability.integrable;
  r.add("integrable_iff_normal", "product integrable iff the structure is normal", i_holds,
        i_holds ? "" : "normal " + yes_no(out.tensors.is_normal) + ", integrable " + yes_no(out.integrability.integrable));

  const GVector bracket = courant_bracket(s.e_plus, s.e_minus);
  const GVector lie = GVector::from(lie_derivative(a.xi, a.eta));
  const bool bracket_zero = is_zero(bracket);
  const bool lie_zero = is_zero(lie);
  const bool ii_holds = bracket_zero == lie_zero;
  r.add("bracket_iff_lie", "[[E+, E-]] = 0 iff L_xi eta = 0", ii_holds,
        ii_holds ? "" : "[[E+, E-]] = " + to_string(bracket) + ", L_xi eta = " + to_string(lie));
  const GVector diff = bracket - lie;
  r.add("bracket_equals_lie", "[[E+, E-]] = L_xi eta", is_zero(diff), is_zero(diff) ? "" : to_string(diff));
  if (!i_holds || !ii_holds) r.theorem_violation = true;

  const GCS cone = from_complex(out.cone.chart, out.cone.j);
  const Matrix literal = out.product.j.m - cone.j.m;
  r.add("cone_blocks", "product equals from_complex(J) blockwise", is_zero(literal),
        matrix_witness(chart, literal));
  const Matrix conjugate = out.product.j.m + cone.j.m;
  r.add("cone_blocks_conjugate", "product equals from_complex(-J) blockwise", is_zero(conjugate),
        matrix_witness(chart, conjugate));
  return out;
}

}  // namespace gg
