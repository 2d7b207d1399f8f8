#pragma once

#include <optional>
#include <vector>

#include "gg/scalar.hpp"

namespace gg {

/// Reduced row echelon form over the rational-function field.
///
/// Pivot rule: among the unused rows and the unused columns in
/// [0, pivot_cols), take the nonzero entry whose numerator has the smallest
/// total degree; ties go to the lower column, then the lower row. Entries are
/// passed through `reduced()` after every update.
struct RowEchelon {
  Matrix rref;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;  // (row, col), in the order chosen

  explicit RowEchelon(Matrix m) : RowEchelon(std::move(m), -1) {}
  RowEchelon(Matrix m, Eigen::Index pivot_cols);

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Columns span the right kernel of `m`; one column per free variable.
Matrix nullspace(const Matrix& m);

/// Exact inverse; nullopt when `m` is singular over the function field.
std::optional<Matrix> inverse(const Matrix& m);

/// Some solution of a x = b (the free variables set to zero); nullopt when
/// the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

Scalar determinant(const Matrix& m);

/// Column elimination over the span of a fixed generator set, reused for
/// many membership queries. Each step picks a (generator, slot) pivot by the
/// same degree rule as RowEchelon, scans generators first, and clears that
/// slot from every other generator.
class SpanEliminator {
 public:
  /// Columns of `generators` span the module.
  explicit SpanEliminator(const Matrix& generators);

  struct Result {
    bool member = false;
    /// Coefficients on the original generators; meaningful when `member`.
    Vector coefficients;
    /// What is left of the query after reduction; zero iff `member`.
    Vector residual;
  };

  Result reduce(const Vector& v) const;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots_.size()); }

 private:
  Matrix reduced_;    // reduced generators, one per column
  Matrix transform_;  // reduced_ = generators * transform_
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots_;  // (slot, column)
};

/// Rank of the numeric matrix obtained by evaluating `m` at `point`.
/// Throws PoleError when an entry's denominator vanishes there.
Eigen::Index rank_at(const Matrix& m, const ScalarPoint& point);

}  // namespace gg
