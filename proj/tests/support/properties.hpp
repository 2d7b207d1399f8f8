#pragma once

// Seeded randomized identities shared by the property tests and the acceptance runner.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "examples.hpp"
#include "gg/integrability.hpp"
#include "gg/random.hpp"

namespace prop {

using namespace gg;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// One case: returns an empty string on success, otherwise a description.
using Case = std::function<std::string(RandomSource&)>;

inline Outcome run(const std::string& name, std::uint64_t seed, int cases, const Case& body) {
  Outcome out{name, 0, 0, {}};
  RandomSource rnd(seed ^ std::hash<std::string>{}(name));
  for (int k = 0; k < cases; ++k) {
    ++out.cases;
    std::string why = body(rnd);
    if (why.empty()) continue;
    if (++out.failures == 1) out.first_failure = "case " + std::to_string(k) + ": " + why;
  }
  return out;
}

inline GVector section(RandomSource& rnd, const Chart& c) {
  return GVector::from(rnd.vector_field(c), rnd.one_form(c));
}

inline const Chart& r3() {
  static const Chart c({"x", "y", "z"});
  return c;
}

inline std::string courant_antisymmetry(RandomSource& rnd) {
  const GVector a = section(rnd, r3());
  const GVector b = section(rnd, r3());
  const GVector s = courant_bracket(a, b) + courant_bracket(b, a);
  return is_zero(s) ? "" : "a = " + to_string(a) + ", b = " + to_string(b) + ", sum " + to_string(s);
}

/// [[a, f b]] = f [[a, b]] + (X_a f) b - <a, b> df
inline std::string anomaly_identity(RandomSource& rnd) {
  const Chart& c = r3();
  const GVector a = section(rnd, c);
  const GVector b = section(rnd, c);
  const Scalar f = rnd.polynomial(c, 2);
  const VectorField xa{c, a.comps.head(3)};
  const Scalar xaf = interior(xa, d(c, f));
  const GVector rhs = f * courant_bracket(a, b) + xaf * b - neutral_pairing(a, b) * GVector::from(d(c, f));
  const GVector diff = courant_bracket(a, f * b) - rhs;
  return is_zero(diff) ? "" : "f = " + to_string(f) + ", residual " + to_string(diff);
}

inline std::string d_squared(RandomSource& rnd) {
  const Scalar f = rnd.polynomial(r3(), 3, 4);
  return is_zero(d(d(r3(), f))) ? "" : "f = " + to_string(f);
}

inline std::string jacobi(RandomSource& rnd) {
  const Chart& c = r3();
  const VectorField x = rnd.vector_field(c);
  const VectorField y = rnd.vector_field(c);
  const VectorField z = rnd.vector_field(c);
  const VectorField s = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                        lie_bracket(lie_bracket(z, x), y);
  return is_zero(s) ? "" : "X = " + to_string(x) + ", residual " + to_string(s);
}

inline std::string product_rule(RandomSource& rnd) {
  const Chart& c = r3();
  const Scalar a = rnd.polynomial(c, 3);
  const Scalar b = rnd.polynomial(c, 3) / (Scalar(1) + rnd.polynomial(c, 2) * rnd.polynomial(c, 2) + rational(1));
  const auto k = static_cast<std::size_t>(rnd.integer(0, 2));
  const Scalar diff = partial(c, a * b, k) - (partial(c, a, k) * b + a * partial(c, b, k));
  return diff.is_zero() ? "" : "a = " + to_string(a) + ", b = " + to_string(b);
}

inline std::string mixed_partials(RandomSource& rnd) {
  const Chart& c = r3();
  const Scalar a = rnd.polynomial(c, 3, 4) / (rnd.polynomial(c, 2) + rational(5) + coordinate("x") * coordinate("x"));
  const auto i = static_cast<std::size_t>(rnd.integer(0, 2));
  const auto j = static_cast<std::size_t>(rnd.integer(0, 2));
  const Scalar diff = partial(c, partial(c, a, i), j) - partial(c, partial(c, a, j), i);
  return diff.is_zero() ? "" : "a = " + to_string(a);
}

/// N(f a, b) = f N(a, b)
inline Case nijenhuis_tensoriality(GCS j) {
  return [j = std::move(j)](RandomSource& rnd) -> std::string {
    const Chart& c = j.chart();
    const GVector a = section(rnd, c);
    const GVector b = section(rnd, c);
    const Scalar f = rnd.polynomial(c, 2);
    const GVector diff = nijenhuis(j, f * a, b) - f * nijenhuis(j, a, b);
    return is_zero(diff) ? "" : "a = " + to_string(a) + ", f = " + to_string(f) + ", residual " + to_string(diff);
  };
}

/// L_X(f alpha) = (i_X df) alpha + f L_X alpha
inline std::string cartan(RandomSource& rnd) {
  const Chart& c = r3();
  const VectorField x = rnd.vector_field(c);
  const OneForm a = rnd.one_form(c);
  const Scalar f = rnd.polynomial(c);
  const OneForm diff = lie_derivative(x, f * a) - (interior(x, d(c, f)) * a + f * lie_derivative(x, a));
  return is_zero(diff) ? "" : "X = " + to_string(x) + ", residual " + to_string(diff);
}

inline std::string lift_naturality(RandomSource& rnd) {
  const Chart& left = r3();
  static const Chart right({"u", "v"});
  static const Chart p = Chart::product(left, right);
  const VectorField x = rnd.vector_field(left);
  const VectorField y = rnd.vector_field(left);
  const VectorField u = rnd.vector_field(right);
  const VectorField same =
      lie_bracket(lift(x, Side::left, p), lift(y, Side::left, p)) - lift(lie_bracket(x, y), Side::left, p);
  if (!is_zero(same)) return "same side, X = " + to_string(x) + ", Y = " + to_string(y);
  const VectorField cross = lie_bracket(lift(x, Side::left, p), lift(u, Side::right, p));
  return is_zero(cross) ? "" : "opposite sides, X = " + to_string(x) + ", U = " + to_string(u);
}

/// Arithmetic commutes with evaluation at integer points away from poles.
inline std::string evaluation(RandomSource& rnd) {
  const Chart& c = r3();
  const Scalar a = rnd.polynomial(c, 3);
  const Scalar b = rnd.polynomial(c, 2) + rational(1, 2);
  const ScalarPoint p = rnd.point(c);
  const GaussianRational ea = eval_at(a, p);
  const GaussianRational eb = eval_at(b, p);
  if (eval_at(a + b, p) != ea + eb || eval_at(a * b, p) != ea * eb || eval_at(a - b, p) != ea - eb)
    return "a = " + to_string(a) + ", b = " + to_string(b);
  if (!gg::is_zero(eb) && eval_at(a / b, p) != ea / eb) return "quotient, a = " + to_string(a);
  return "";
}

/// <J a, J b> = <a, b> for a GCS, and <Phi a, b> + <a, Phi b> = 0 for a GACS.
inline Case gcs_isometry(GCS j) {
  return [j = std::move(j)](RandomSource& rnd) -> std::string {
    const GVector a = section(rnd, j.chart());
    const GVector b = section(rnd, j.chart());
    const Scalar diff = neutral_pairing(j.j * a, j.j * b) - neutral_pairing(a, b);
    return diff.is_zero() ? "" : "a = " + to_string(a) + ", residual " + to_string(diff);
  };
}

inline Case gacs_skew(GACS s) {
  return [s = std::move(s)](RandomSource& rnd) -> std::string {
    const GVector a = section(rnd, s.chart());
    const GVector b = section(rnd, s.chart());
    const Scalar diff = neutral_pairing(s.phi * a, b) + neutral_pairing(a, s.phi * b);
    return diff.is_zero() ? "" : "a = " + to_string(a) + ", residual " + to_string(diff);
  };
}

/// probe_rank agrees with generic_rank on a random frame with a forced dependency.
inline std::string rank_probe(RandomSource& rnd) {
  const Chart& c = r3();
  std::vector<GVector> gens;
  const long k = rnd.integer(1, 4);
  for (long t = 0; t < k; ++t) gens.push_back(section(rnd, c));
  gens.push_back(rnd.polynomial(c) * gens.front() + gens.back());
  const SubbundleFrame f = SubbundleFrame::make(c, gens, FrameLabel::custom);
  const auto probed = probe_rank(f, rnd.engine()());
  return probed == f.generic_rank ? ""
                                  : "generic " + std::to_string(f.generic_rank) + ", probed " + std::to_string(probed);
}

/// The kernel suites run by acceptance criterion 8.
inline std::vector<Outcome> kernel_suites(std::uint64_t seed, int cases) {
  return {run("courant antisymmetry", seed, cases, courant_antisymmetry),
          run("anomaly identity", seed, cases, anomaly_identity),
          run("d squared", seed, cases, d_squared),
          run("jacobi", seed, cases, jacobi),
          run("product rule", seed, cases, product_rule),
          run("nijenhuis tensoriality, complex R2", seed, cases, nijenhuis_tensoriality(ex::std_complex())),
          run("nijenhuis tensoriality, symplectic R2", seed, cases, nijenhuis_tensoriality(ex::symplectic_dxdy()))};
}

}  // namespace prop
