#pragma once

#include <cstdint>
#include <random>

#include "gg/calculus.hpp"

namespace gg {

/// Deterministic source of random geometric data for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Polynomial in the chart coordinates with up to `terms` terms of total
  /// degree at most `max_degree` and small integer coefficients.
  Scalar polynomial(const Chart& chart, int max_degree = 2, int terms = 3) {
    Scalar out;
    for (int t = 0; t < terms; ++t) {
      Scalar mono(static_cast<int>(integer(-3, 3)));
      const long degree = integer(0, max_degree);
      for (long k = 0; k < degree; ++k)
        mono *= coordinate(chart.coord(static_cast<std::size_t>(integer(0, static_cast<long>(chart.dim()) - 1))));
      out += mono;
    }
    return out;
  }

  VectorField vector_field(const Chart& chart, int max_degree = 2) {
    VectorField x = VectorField::zero(chart);
    for (Eigen::Index k = 0; k < x.comps.size(); ++k) x.comps(k) = polynomial(chart, max_degree);
    return x;
  }

  OneForm one_form(const Chart& chart, int max_degree = 2) {
    OneForm a = OneForm::zero(chart);
    for (Eigen::Index k = 0; k < a.comps.size(); ++k) a.comps(k) = polynomial(chart, max_degree);
    return a;
  }

  /// Point with integer coordinates in [lo, hi].
  ScalarPoint point(const Chart& chart, long lo = -9, long hi = 9) {
    ScalarPoint p;
    for (Symbol s : chart.coords()) p[s] = GaussianRational(static_cast<int>(integer(lo, hi)));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gg
