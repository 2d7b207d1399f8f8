#include "doctest.h"

#include "examples.hpp"
#include "gg/elimination.hpp"
#include "gg/errors.hpp"

using namespace gg;
using ex::S;

namespace {

const Chart c2({"x", "y"});
const Chart c3({"x", "y", "z"});

GVector G(const Chart& c, const std::vector<std::string>& comps) { return ex::section(c, comps); }

bool all_pass(const CheckReport& r) {
  for (const auto& c : r.checks)
    if (c.verdict != Verdict::pass) return false;
  return !r.checks.empty();
}

const Check& check(const CheckReport& r, const std::string& id) {
  const Check* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, "missing check " << id);
  return *c;
}

/// <Phi a, b> + <a, Phi b> on the full coordinate frame.
bool skew_on_frame(const GEndo& e) {
  for (const auto& a : coordinate_frame(e.chart))
    for (const auto& b : coordinate_frame(e.chart))
      if (!(neutral_pairing(e * a, b) + neutral_pairing(a, e * b)).is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("ggcore") {
  TEST_CASE("neutral pairing") {
    const GVector dx_vec = GVector::basis(c2, 0);
    const GVector dx_form = GVector::basis(c2, 2);
    CHECK(neutral_pairing(dx_vec, dx_form) == rational(1, 2));
    CHECK(neutral_pairing(dx_vec + dx_form, dx_vec + dx_form) == Scalar(1));
    const GACS line = standard_line_structure("t");
    CHECK(neutral_pairing(line.e_plus, line.e_minus) == rational(1, 2));
    const GVector a = G(c2, {"x", "y^2", "1", "x*y"});
    const GVector b = G(c2, {"1/(1 + y^2)", "0", "y", "-x"});
    CHECK(neutral_pairing(a, b) == neutral_pairing(b, a));
    CHECK(neutral_pairing(S(c2, "x + 1") * a, b) == S(c2, "x + 1") * neutral_pairing(a, b));
  }

  TEST_CASE("frame labels") {
    CHECK(frame_label(c3, 0) == "Dx");
    CHECK(frame_label(c3, 5) == "dz");
    CHECK(coordinate_frame(c3).size() == 6);
    CHECK(to_string(G(c3, {"1", "0", "y", "0", "-i", "0"})) == "Dx + y*Dz - i*dy");
  }

  TEST_CASE("Courant bracket against the independent expansion") {
    CHECK(is_zero(courant_bracket(GVector::basis(c2, 0), GVector::basis(c2, 1))));
    CHECK(ex::same(courant_bracket(GVector::basis(c2, 0), G(c2, {"0", "0", "y", "0"})),
                   ex::oracle_section(c2, "courant.Dx_ydx")));
    const GVector eta = G(c3, {"0", "0", "0", "-y", "0", "1"});
    const GVector xi = GVector::basis(c3, 2);
    CHECK(ex::same(courant_bracket(eta, xi), ex::oracle_section(c3, "courant.eta_xi")));
    const GVector s1 = G(c3, {"0", "0", "x*y", "z", "0", "0"});
    const GVector s2 = G(c3, {"1", "x^2", "0", "-1", "0", "y*z"});
    const GVector s3 = G(c3, {"y/(1 + x^2)", "0", "1", "0", "x*z", "0"});
    CHECK(ex::same(courant_bracket(s1, s2), ex::oracle_section(c3, "courant.mixed")));
    CHECK(ex::same(courant_bracket(s3, s2), ex::oracle_section(c3, "courant.rational")));
    CHECK(is_zero(courant_bracket(s3, s2) + courant_bracket(s2, s3)));
    CHECK_THROWS_AS(courant_bracket(s1, GVector::basis(c2, 0)), ChartMismatch);
  }

  TEST_CASE("endomorphisms: apply, adjoint, compose") {
    Matrix a = ex::mat(c2, {"x", "1", "y", "0"});
    const GEndo e = GEndo::from_blocks(a, Bivector::zero(c2), TwoForm::zero(c2), Matrix::Zero(2, 2));
    const GEndo adj = adjoint(e);
    CHECK(ex::same(Vector(adj.block_b().reshaped()), Vector(Matrix(a.transpose()).reshaped())));
    CHECK(ex::zero(adj.block_a()));
    // defining identity of the adjoint on the frame
    const GEndo f{c2, ex::mat(Chart({"x", "y", "u", "v"}), {"x", "1", "0", "2", "y", "0", "1", "x*y", "3", "0", "y", "1",
                                                            "0", "1", "1", "x"})};
    for (const auto& p : coordinate_frame(c2))
      for (const auto& q : coordinate_frame(c2))
        CHECK(neutral_pairing(f * p, q) == neutral_pairing(p, adjoint(f) * q));
    CHECK((f * f) * f == f * (f * f));
    CHECK(compose(f, GEndo::identity(c2)) == f);
  }

  TEST_CASE("tensor term uses the dual pairing") {
    const GACS s = ex::cosymplectic();
    const GEndo t = tensor_term(s.e_plus, s.e_minus) + tensor_term(s.e_minus, s.e_plus);
    CHECK(ex::same(t * s.e_plus, s.e_plus));
    CHECK(ex::same(t * s.e_minus, s.e_minus));
    // (xi (x) eta)(X + a) = eta(X) xi for Darboux data
    const GVector eta = G(c3, {"0", "0", "0", "-y", "0", "1"});
    const GVector xi = GVector::basis(c3, 2);
    const GVector b = G(c3, {"x", "y", "1", "z", "x^2", "7"});
    CHECK(ex::same(tensor_term(xi, eta) * b, S(c3, "1 - x*y") * xi));
    CHECK(is_zero(tensor_term(xi, GVector::basis(c3, 0)) * GVector::basis(c3, 1)));
  }

  TEST_CASE("complex structures") {
    const GCS j = ex::std_complex();
    CHECK(all_pass(check_gcs_axioms(j)));
    CHECK(ex::zero(j.j.block_pi().comps));
    CHECK(ex::zero(j.j.block_sigma().comps));
    // blocks diag(-J, J^T)
    CHECK(ex::same(j.j * GVector::basis(c2, 0), -GVector::basis(c2, 1)));
    CHECK(ex::same(j.j * GVector::basis(c2, 2), -GVector::basis(c2, 3)));
    CHECK_THROWS_AS(from_complex(c2, Matrix::Identity(2, 2)), PreconditionError);
    CHECK(skew_on_frame(j.j));
  }

  TEST_CASE("symplectic structures") {
    const GCS j = ex::symplectic_dxdy();
    CHECK(all_pass(check_gcs_axioms(j)));
    // J(Dx) = i_Dx w = dy, J(dx) = -w^{-1}(dx) = Dy
    CHECK(ex::same(j.j * GVector::basis(c2, 0), GVector::basis(c2, 3)));
    CHECK(ex::same(j.j * GVector::basis(c2, 2), GVector::basis(c2, 1)));
    CHECK(j.j * j.j == -1 * GEndo::identity(c2));
    const Chart c4({"x", "y", "z", "w"});
    const GCS j4 = from_symplectic(
        ex::two_form(c4, {"0", "1", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "1", "0", "0", "-1", "0"}));
    CHECK(all_pass(check_gcs_axioms(j4)));
    const GCS jx = from_symplectic(ex::two_form(c2, {"0", "x", "-x", "0"}));
    CHECK(all_pass(check_gcs_axioms(jx)));
    // w(Dx) = x dy, so J(dx) = -w^{-1}(dx) = Dy / x
    CHECK(ex::same(jx.j * GVector::basis(c2, 2), S(c2, "1/x") * GVector::basis(c2, 1)));
    CHECK_THROWS_AS(from_symplectic(TwoForm::zero(c2)), PreconditionError);
    CHECK(skew_on_frame(j4.j));
    for (const auto& a : coordinate_frame(c4))
      for (const auto& b : coordinate_frame(c4)) CHECK(neutral_pairing(j4.j * a, j4.j * b) == neutral_pairing(a, b));
  }

  TEST_CASE("almost contact structures") {
    const GACS cos = ex::cosymplectic();
    CHECK(all_pass(check_gacs_axioms(cos)));
    CHECK(adjoint(cos.phi) == -1 * cos.phi);
    CHECK(all_pass(check_classical_axioms(ex::sasakian_classical())));
    CHECK(all_pass(check_gacs_axioms(from_almost_contact(ex::sasakian_classical()))));
    CHECK(all_pass(check_gacs_axioms(from_almost_contact(standard_line("t")))));
    CHECK(all_pass(check_gacs_axioms(standard_line_structure("t"))));
    // phi^2 = -Id + eta (x) xi fails for the plain rotation with eta = dz - y dx
    ClassicalACS bad = ex::cosymplectic_classical();
    bad.eta = ex::darboux_eta(c3);
    const CheckReport r = check_classical_axioms(bad);
    CHECK(check(r, "phi_square").verdict == Verdict::fail);
    CHECK(check(r, "phi_square").witness == "row Dz, column Dx: y");
    CHECK_THROWS_AS(from_almost_contact(bad), PreconditionError);
  }

  TEST_CASE("gacs axiom failures carry witnesses") {
    const GACS cos = ex::cosymplectic();
    const CheckReport r = check_gacs_axioms(cos.phi, GVector::basis(c3, 2), GVector::basis(c3, 2));
    CHECK(check(r, "dual_pairing").verdict == Verdict::fail);
    CHECK(check(r, "skew").verdict == Verdict::pass);
    CHECK_FALSE(check(r, "dual_pairing").witness.empty());
  }

  TEST_CASE("contact structures") {
    const OneForm eta = ex::darboux_eta(c3);
    const ContactData cd = contact_data(eta);
    CHECK(ex::same(cd.reeb.comps, ex::oracle_vector(c3, "contact.darboux.reeb")));
    CHECK(cd.d_eta.comps(0, 1) == Scalar(1));
    CHECK(ex::same(Vector(cd.rho.reshaped()), ex::oracle_vector(c3, "contact.darboux.rho")));
    CHECK(ex::same(Vector(cd.rho.col(1)), ex::form(c3, {"-1", "0", "0"}).comps));
    CHECK(ex::same(Vector(Matrix(cd.pi.comps.transpose()).reshaped()), ex::oracle_vector(c3, "contact.darboux.pi")));
    CHECK(all_pass(check_gacs_axioms(cd.structure)));
    CHECK(ex::same(cd.structure.e_plus, GVector::from(eta)));
    CHECK(ex::same(cd.structure.e_minus, GVector::basis(c3, 2)));

    const ContactData tw = contact_data(ex::form(c3, {"-y", "0", "1 + x^2"}));
    CHECK(ex::same(tw.reeb.comps, ex::oracle_vector(c3, "contact.twisted.reeb")));
    CHECK(ex::same(Vector(Matrix(tw.pi.comps.transpose()).reshaped()), ex::oracle_vector(c3, "contact.twisted.pi")));
    CHECK(all_pass(check_gacs_axioms(tw.structure)));

    CHECK_THROWS_AS(from_contact(OneForm::differential(c3, 2)), PreconditionError);
    CHECK_THROWS_AS(from_contact(OneForm::differential(c2, 1)), PreconditionError);
  }

  TEST_CASE("Phi squared identity and Lemma 1 on every example") {
    for (const GACS& s : {ex::cosymplectic(), ex::darboux_contact(), from_almost_contact(ex::sasakian_classical()),
                          standard_line_structure("t"), from_almost_contact(ex::twisted_classical())}) {
      CHECK(skew_on_frame(s.phi));
      CHECK(s.phi * s.phi ==
            Scalar(-1) * GEndo::identity(s.chart()) + tensor_term(s.e_plus, s.e_minus) + tensor_term(s.e_minus, s.e_plus));
      CHECK(is_zero(s.phi * s.e_plus));
      CHECK(is_zero(s.phi * s.e_minus));
      for (const auto& a : coordinate_frame(s.chart())) {
        CHECK(neutral_pairing(s.e_plus, s.phi * a).is_zero());
        CHECK(neutral_pairing(s.e_minus, s.phi * a).is_zero());
      }
    }
  }
}

TEST_SUITE("elimination") {
  TEST_CASE("row echelon, rank and nullspace") {
    const Matrix m = ex::mat(c3, {"1", "x", "x^2", "y", "x*y", "x^2*y", "0", "1", "z"});
    const RowEchelon re(m);
    CHECK(re.rank() == 2);
    const Matrix k = nullspace(m);
    REQUIRE(k.cols() == 1);
    CHECK(ex::zero(m * k.col(0)));
    CHECK(ex::zero(RowEchelon(Matrix::Zero(2, 3)).rref));
  }

  TEST_CASE("pivot rule prefers low degree") {
    const Matrix m = ex::mat(c2, {"x^2", "1", "y", "x"});
    const RowEchelon re(m);
    REQUIRE(re.rank() == 2);
    CHECK(re.pivots[0] == std::pair<Eigen::Index, Eigen::Index>{0, 1});
  }

  TEST_CASE("inverse, solve and determinant") {
    const Matrix m = ex::mat(c2, {"1", "x", "y", "1 + x^2"});
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(ex::zero(m * *inv - Matrix::Identity(2, 2)));
    CHECK(determinant(m) == S(c2, "1 + x^2 - x*y"));
    CHECK_FALSE(inverse(ex::mat(c2, {"x", "y", "x^2", "x*y"})).has_value());
    CHECK(determinant(ex::mat(c2, {"x", "y", "x^2", "x*y"})).is_zero());
    const Vector b = ex::vec(c2, {"1", "x"});
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(ex::same(Vector(m * *sol), b));
    CHECK_FALSE(solve(ex::mat(c2, {"1", "1", "1", "1"}), ex::vec(c2, {"0", "1"})).has_value());
  }

  TEST_CASE("span eliminator membership and coefficients") {
    Matrix g(4, 2);
    g.col(0) = ex::vec(c2, {"1", "0", "0", "0"});
    g.col(1) = ex::vec(c2, {"0", "0", "-y", "1"});
    const SpanEliminator se(g);
    CHECK(se.rank() == 2);
    const auto in = se.reduce(ex::vec(c2, {"x", "0", "y^2", "-y"}));
    CHECK(in.member);
    CHECK(ex::same(Vector(g * in.coefficients), ex::vec(c2, {"x", "0", "y^2", "-y"})));
    CHECK(se.reduce(ex::vec(c2, {"0", "0", "0", "0"})).member);
  }

  TEST_CASE("half dy is not in span{Dx, dz - y dx}") {
    Matrix g(6, 2);
    g.col(0) = ex::vec(c3, {"1", "0", "0", "0", "0", "0"});
    g.col(1) = ex::vec(c3, {"0", "0", "0", "-y", "0", "1"});
    const auto r = SpanEliminator(g).reduce(ex::vec(c3, {"0", "0", "0", "0", "1/2", "0"}));
    CHECK_FALSE(r.member);
    CHECK(ex::same(r.residual, ex::vec(c3, {"0", "0", "0", "0", "1/2", "0"})));
  }

  TEST_CASE("numeric rank at a point") {
    const Matrix m = ex::mat(c2, {"x", "y", "1", "1"});
    const Symbol x("x"), y("y");
    CHECK(rank_at(m, {{x, GaussianRational(2)}, {y, GaussianRational(3)}}) == 2);
    CHECK(rank_at(m, {{x, GaussianRational(2)}, {y, GaussianRational(2)}}) == 1);
    CHECK_THROWS_AS(rank_at(ex::mat(c2, {"1/x", "0", "0", "1"}), {{x, GaussianRational(0)}, {y, GaussianRational(1)}}),
                    PoleError);
  }
}
