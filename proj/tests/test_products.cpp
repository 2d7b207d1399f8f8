#include "doctest.h"

#include "examples.hpp"
#include "gg/errors.hpp"

using namespace gg;
using ex::S;

namespace {

const std::vector<std::string> uvw{"u", "v", "w"};

Verdict verdict(const CheckReport& r, const std::string& id) {
  const Check* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, "missing check " << id);
  return c->verdict;
}

std::string witness(const CheckReport& r, const std::string& id) {
  const Check* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, "missing check " << id);
  return c->witness;
}

bool all_pass(const CheckReport& r) {
  for (const auto& c : r.checks)
    if (c.verdict != Verdict::pass) return false;
  return !r.checks.empty();
}

Matrix minus_identity(Eigen::Index n) { return Matrix::Identity(n, n) * Scalar(-1); }

bool same_matrix(const Matrix& a, const Matrix& b) { return a.rows() == b.rows() && ex::zero(a - b); }

}  // namespace

TEST_SUITE("products") {
  TEST_CASE("product GCS of two lines") {
    const GACS t = standard_line_structure("t");
    const GACS s = standard_line_structure("s");
    const GCS j = product_gcs(t, s);
    const Chart& c = j.chart();
    CHECK(c.names() == std::vector<std::string>{"t", "s"});
    // slots: Dt, Ds, dt, ds
    CHECK(ex::same(j.j * GVector::basis(c, 0), GVector::basis(c, 3)));
    CHECK(ex::same(j.j * GVector::basis(c, 3), -GVector::basis(c, 0)));
    CHECK(all_pass(check_gcs_axioms(j)));
    CHECK_THROWS_AS(product_gcs(t, standard_line_structure("t")), Error);
  }

  TEST_CASE("product GCS acts as Phi1 off the kernel") {
    const GACS a = ex::cosymplectic();
    const GCS j = product_gcs(a, ex::cosymplectic(uvw));
    CHECK(all_pass(check_gcs_axioms(j)));
    for (std::size_t k : {0u, 1u, 3u, 4u}) {
      const GVector e = GVector::basis(a.chart(), k);
      CHECK(ex::same(j.j * lift(e, Side::left, j.chart()), lift(a.phi * e, Side::left, j.chart())));
    }
  }

  TEST_CASE("product eigenframe") {
    for (const auto& [l, r] : {std::pair{standard_line_structure("t"), standard_line_structure("s")},
                               std::pair{ex::cosymplectic(), ex::cosymplectic(uvw)},
                               std::pair{ex::darboux_contact(), ex::cosymplectic(uvw)}}) {
      const GCS j = product_gcs(l, r);
      const SubbundleFrame f = product_eigenframe(l, r);
      for (const auto& g : f.generators) CHECK(is_zero(j.j * g - imaginary_unit() * g));
      CHECK(compare_spans(f, eigenframe_L(j)).equal);
    }
    const SubbundleFrame lines = product_eigenframe(standard_line_structure("t"), standard_line_structure("s"));
    CHECK(lines.generators.size() == 2);
    const Chart& c = lines.chart;
    // (E-1, -i E+2) = Dt - i ds and (E+1, -i E-2) = dt - i Ds
    CHECK(ex::same(lines.generators[0], ex::section(c, {"1", "0", "0", "-i"})));
    CHECK(ex::same(lines.generators[1], ex::section(c, {"0", "-i", "1", "0"})));
  }

  TEST_CASE("Theorem 1 examples") {
    const Theorem1 cc = theorem1_verify(ex::cosymplectic(), ex::cosymplectic(uvw));
    CHECK(cc.integrability.integrable);
    CHECK(all_pass(cc.report));
    CHECK_FALSE(cc.report.theorem_violation);

    const Theorem1 ll = theorem1_verify(standard_line_structure("t"), standard_line_structure("s"));
    CHECK(ll.integrability.integrable);
    CHECK(all_pass(ll.report));

    const Theorem1 ec = theorem1_verify(ex::darboux_contact(), ex::cosymplectic(uvw));
    CHECK_FALSE(ec.integrability.integrable);
    CHECK(verdict(ec.report, "biconditional") == Verdict::pass);
    CHECK(verdict(ec.report, "left_strong") == Verdict::warning);
    CHECK_FALSE(ec.report.theorem_violation);
    REQUIRE(ec.integrability.nijenhuis.has_value());
    const auto& pair = ex::oracle_strings("product.contact_cos.first_pair");
    CHECK(ec.integrability.nijenhuis->first == std::stoul(pair[0]));
    CHECK(ec.integrability.nijenhuis->second == std::stoul(pair[1]));
    CHECK(ex::same(ec.integrability.nijenhuis->value, ex::oracle_section(ec.product.chart(), "product.contact_cos.value")));
    CHECK(ec.integrability.nijenhuis->str(ec.product.chart()) == "N(Dx, Dy) = Dz");
  }

  TEST_CASE("Theorem 1 with strong factors and a nonzero bracket") {
    const GACS tw = from_almost_contact(ex::twisted_classical());
    const Theorem1 r = theorem1_verify(tw, ex::cosymplectic(uvw));
    CHECK(verdict(r.report, "left_strong") == Verdict::pass);
    CHECK(verdict(r.report, "left_bracket") == Verdict::warning);
    CHECK_FALSE(r.integrability.integrable);
    CHECK(verdict(r.report, "biconditional") == Verdict::pass);
    CHECK_FALSE(r.report.theorem_violation);
  }

  TEST_CASE("N on (E+1, 0), (E-1, 0) carries -[[E+2, E-2]] in the right slot") {
    const GACS l = from_almost_contact(ex::twisted_classical());
    const GACS r = from_almost_contact(ex::twisted_classical(uvw));
    const GCS j = product_gcs(l, r);
    const Chart& c = j.chart();
    const GVector n = nijenhuis(j, lift(l.e_plus, Side::left, c), lift(l.e_minus, Side::left, c));
    CHECK(ex::same(n, ex::oracle_section(c, "product.twisted.N_E+1_E-1")));
    const GVector bl = lift(courant_bracket(l.e_plus, l.e_minus), Side::left, c);
    const GVector br = lift(courant_bracket(r.e_plus, r.e_minus), Side::right, c);
    CHECK(ex::same(n, -bl - br));
    CHECK_FALSE(ex::same(n, -bl + br));
  }

  TEST_CASE("bracket naturality for lifts") {
    const GACS a = from_almost_contact(ex::twisted_classical());
    const Chart p = Chart::product(a.chart(), Chart(uvw));
    CHECK(ex::same(courant_bracket(lift(a.e_plus, Side::left, p), lift(a.e_minus, Side::left, p)),
                   lift(courant_bracket(a.e_plus, a.e_minus), Side::left, p)));
    const GVector b = lift(ex::section(Chart(uvw), {"u*v", "0", "1", "w", "0", "u"}), Side::right, p);
    CHECK(is_zero(courant_bracket(lift(GVector::basis(a.chart(), 0), Side::left, p), b)));
  }

  TEST_CASE("product GACS") {
    const GACS ps = product_gacs(standard_line_structure("t"), ex::symplectic_dxdy());
    CHECK(ps.chart().dim() == 3);
    CHECK(all_pass(check_gacs_axioms(ps)));
    CHECK(is_zero(ps.phi * ps.e_plus));
    CHECK(is_zero(ps.phi * ps.e_minus));
    const GACS pc = product_gacs(ex::cosymplectic({"a", "b", "c"}), ex::std_complex());
    CHECK(pc.chart().dim() == 5);
    CHECK(all_pass(check_gacs_axioms(pc)));
  }

  TEST_CASE("Theorem 2 examples") {
    const Theorem2 ls = theorem2_verify(standard_line_structure("t"), ex::symplectic_dxdy());
    CHECK(ls.classification.verdict == GacsClass::strong);
    CHECK(all_pass(ls.report));

    const Theorem2 es = theorem2_verify(ex::darboux_contact({"a", "b", "c"}), ex::symplectic_dxdy());
    CHECK(es.classification.verdict != GacsClass::strong);
    CHECK(verdict(es.report, "biconditional_strong") == Verdict::pass);
    CHECK(verdict(es.report, "biconditional_integrable") == Verdict::pass);
    CHECK(verdict(es.report, "eigenframe_span") == Verdict::pass);

    // (1 + x^2) dx^dy is closed, hence integrable, hence the product is strong
    const Theorem2 cw = theorem2_verify(ex::cosymplectic({"a", "b", "c"}), ex::symplectic_weighted_r2());
    CHECK(cw.right.integrable);
    CHECK(cw.classification.verdict == GacsClass::strong);
    CHECK_FALSE(cw.report.theorem_violation);

    const Theorem2 cn = theorem2_verify(ex::cosymplectic({"a", "b", "c"}), ex::symplectic_nonclosed_r4());
    CHECK_FALSE(cn.right.integrable);
    CHECK(cn.classification.verdict == GacsClass::not_integrable);
    CHECK(verdict(cn.report, "biconditional_integrable") == Verdict::pass);
    CHECK(verdict(cn.report, "biconditional_strong") == Verdict::pass);
    CHECK(verdict(cn.report, "eigenframe_span") == Verdict::pass);
    CHECK_FALSE(cn.report.theorem_violation);
  }

  TEST_CASE("Morimoto product and the cone structure") {
    const ClassicalACS a = ex::cosymplectic_classical();
    const ClassicalACS b = ex::cosymplectic_classical(uvw);
    const ClassicalComplex m = morimoto_product(a, b);
    CHECK(same_matrix(m.j * m.j, minus_identity(6)));
    const Chart& c = m.chart;
    const Vector xi1 = lift(a.xi, Side::left, c).comps;
    const Vector xi2 = lift(b.xi, Side::right, c).comps;
    CHECK(ex::same(Vector(m.j * xi1), xi2));
    CHECK(ex::same(Vector(m.j * xi2), Vector(-xi1)));
    const ClassicalComplex s = morimoto_product(ex::sasakian_classical(), b);
    CHECK(same_matrix(s.j * s.j, minus_identity(6)));

    const ClassicalComplex cone = classical_cone_j(a, "t");
    CHECK(same_matrix(cone.j * cone.j, minus_identity(4)));
    const Vector xi = lift(a.xi, Side::left, cone.chart).comps;
    const Vector dt = VectorField::coordinate_field(cone.chart, 3).comps;
    CHECK(ex::same(Vector(cone.j * xi), dt));
    CHECK(ex::same(Vector(cone.j * dt), Vector(-xi)));
    CHECK(same_matrix(cone.j, morimoto_product(a, standard_line("t")).j));
    const ClassicalACS sas = ex::sasakian_classical();
    CHECK(same_matrix(classical_cone_j(sas, "t").j, morimoto_product(sas, standard_line("t")).j));
  }

  TEST_CASE("normality tensors against the component oracle") {
    const std::vector<std::pair<std::string, ClassicalACS>> cases{
        {"cosymplectic", ex::cosymplectic_classical()},
        {"sasakian", ex::sasakian_classical()},
        {"perturbed_y", ex::perturbed_classical("1 + y^2")},
        {"perturbed_z", ex::perturbed_classical("1 + z^2")},
        {"twisted", ex::twisted_classical()}};
    for (const auto& [name, a] : cases) {
      CAPTURE(name);
      const NormalityTensors t = normality_tensors(a);
      const auto& flags = ex::oracle_strings("normality." + name);
      bool normal = true;
      for (int k = 0; k < 4; ++k) {
        const std::string id = "T" + std::to_string(k + 1);
        const bool nonzero = flags[static_cast<std::size_t>(k)] == "1";
        normal = normal && !nonzero;
        CHECK(verdict(t.report, id) == (nonzero ? Verdict::warning : Verdict::pass));
      }
      CHECK(t.is_normal == normal);
    }
  }

  TEST_CASE("normality correspondence") {
    for (const ClassicalACS& a : {ex::cosymplectic_classical(), ex::sasakian_classical()}) {
      const NormalityCorrespondence r = normality_correspondence(a, "t");
      CHECK(r.tensors.is_normal);
      CHECK(r.integrability.integrable);
      CHECK(verdict(r.report, "integrable_iff_normal") == Verdict::pass);
      CHECK(verdict(r.report, "bracket_iff_lie") == Verdict::pass);
      CHECK(verdict(r.report, "bracket_equals_lie") == Verdict::pass);
      CHECK(verdict(r.report, "cone_blocks_conjugate") == Verdict::pass);
      CHECK(verdict(r.report, "cone_blocks") == Verdict::fail);
      CHECK(r.product.j == from_complex(r.cone.chart, Matrix(-r.cone.j)).j);
    }
    CHECK(witness(normality_correspondence(ex::cosymplectic_classical(), "t").report, "cone_blocks") ==
          "row Dy, column Dx: 2");

    const NormalityCorrespondence nz = normality_correspondence(ex::perturbed_classical("1 + z^2"), "t");
    CHECK_FALSE(nz.tensors.is_normal);
    CHECK_FALSE(nz.integrability.integrable);
    CHECK(nz.integrability.nijenhuis.has_value());
    CHECK(verdict(nz.report, "integrable_iff_normal") == Verdict::pass);
    CHECK_FALSE(nz.report.theorem_violation);

    const NormalityCorrespondence tw = normality_correspondence(ex::twisted_classical(), "t");
    CHECK(verdict(tw.report, "bracket_equals_lie") == Verdict::pass);
    CHECK(verdict(tw.report, "bracket_iff_lie") == Verdict::pass);
    CHECK_FALSE(tw.integrability.integrable);
    CHECK(verdict(tw.report, "integrable_iff_normal") == Verdict::pass);
  }
}
