#include "gg/elimination.hpp"

#include <limits>
#include <utility>

#include "gg/errors.hpp"

namespace gg {

RowEchelon::RowEchelon(Matrix m, Eigen::Index pivot_cols) : rref(std::move(m)) {
  const Eigen::Index rows = rref.rows();
  const Eigen::Index cols = pivot_cols < 0 ? rref.cols() : pivot_cols;
  std::vector<bool> row_used(static_cast<std::size_t>(rows), false);
  std::vector<bool> col_used(static_cast<std::size_t>(cols), false);

  while (true) {
    Eigen::Index best_r = -1;
    Eigen::Index best_c = -1;
    std::uint32_t best_deg = std::numeric_limits<std::uint32_t>::max();
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (col_used[static_cast<std::size_t>(c)]) continue;
      for (Eigen::Index r = 0; r < rows; ++r) {
        if (row_used[static_cast<std::size_t>(r)] || rref(r, c).is_zero()) continue;
        const std::uint32_t deg = rref(r, c).num().total_degree();
        if (deg < best_deg) {
          best_deg = deg;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r < 0) break;

    const Scalar pivot = rref(best_r, best_c);
    for (Eigen::Index c = 0; c < rref.cols(); ++c)
      if (!rref(best_r, c).is_zero()) rref(best_r, c) = (rref(best_r, c) / pivot).reduced();
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == best_r || rref(r, best_c).is_zero()) continue;
      const Scalar factor = rref(r, best_c);
      for (Eigen::Index c = 0; c < rref.cols(); ++c)
        if (!rref(best_r, c).is_zero()) rref(r, c) = (rref(r, c) - factor * rref(best_r, c)).reduced();
    }
    row_used[static_cast<std::size_t>(best_r)] = true;
    col_used[static_cast<std::size_t>(best_c)] = true;
    pivots.emplace_back(best_r, best_c);
  }
}

Matrix nullspace(const Matrix& m) {
  const RowEchelon ech(m);
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> pivot_row_of(static_cast<std::size_t>(n), -1);
  for (const auto& [r, c] : ech.pivots) pivot_row_of[static_cast<std::size_t>(c)] = r;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (pivot_row_of[static_cast<std::size_t>(c)] < 0) free_cols.push_back(c);

  Matrix basis = Matrix::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(f, col) = Scalar(1);
    for (const auto& [r, c] : ech.pivots) basis(c, col) = -ech.rref(r, f);
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  Matrix aug(n, 2 * n);
  aug << m, Matrix::Identity(n, n);
  const RowEchelon ech(std::move(aug), n);
  if (ech.rank() != n) return std::nullopt;
  Matrix inv(n, n);
  for (const auto& [r, c] : ech.pivots) inv.row(c) = ech.rref.block(r, n, 1, n);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  const Eigen::Index n = a.cols();
  Matrix aug(a.rows(), n + 1);
  aug << a, b;
  const RowEchelon ech(std::move(aug), n);
  std::vector<bool> is_pivot_row(static_cast<std::size_t>(a.rows()), false);
  for (const auto& p : ech.pivots) is_pivot_row[static_cast<std::size_t>(p.first)] = true;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    if (!is_pivot_row[static_cast<std::size_t>(r)] && !ech.rref(r, n).is_zero()) return std::nullopt;
  Vector x = Vector::Zero(n);
  for (const auto& [r, c] : ech.pivots) x(c) = ech.rref(r, n);
  return x;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  Matrix a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    std::uint32_t best_deg = std::numeric_limits<std::uint32_t>::max();
    for (Eigen::Index r = k; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const std::uint32_t deg = a(r, k).num().total_degree();
      if (deg < best_deg) {
        best_deg = deg;
        best = r;
      }
    }
    if (best < 0) return Scalar(0);
    if (best != k) {
      a.row(k).swap(a.row(best));
      det = -det;
    }
    det = (det * a(k, k)).reduced();
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Scalar factor = a(r, k) / a(k, k);
      for (Eigen::Index c = k; c < n; ++c)
        if (!a(k, c).is_zero()) a(r, c) = (a(r, c) - factor * a(k, c)).reduced();
    }
  }
  return det;
}

Eigen::Index rank_at(const Matrix& m, const ScalarPoint& point) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<GaussianRational>> a(rows, std::vector<GaussianRational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)).evaluate(point);

  Eigen::Index rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const GaussianRational f = a[r][c] / a[row][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace gg

namespace gg {

SpanEliminator::SpanEliminator(const Matrix& generators)
    : reduced_(generators), transform_(Matrix::Identity(generators.cols(), generators.cols())) {
  const Eigen::Index slots = reduced_.rows();
  const Eigen::Index cols = reduced_.cols();
  std::vector<bool> col_used(static_cast<std::size_t>(cols), false);
  std::vector<bool> slot_used(static_cast<std::size_t>(slots), false);

  while (true) {
    Eigen::Index best_s = -1;
    Eigen::Index best_c = -1;
    std::uint32_t best_deg = std::numeric_limits<std::uint32_t>::max();
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (col_used[static_cast<std::size_t>(c)]) continue;
      for (Eigen::Index s = 0; s < slots; ++s) {
        if (slot_used[static_cast<std::size_t>(s)] || reduced_(s, c).is_zero()) continue;
        const std::uint32_t deg = reduced_(s, c).num().total_degree();
        if (deg < best_deg) {
          best_deg = deg;
          best_s = s;
          best_c = c;
        }
      }
    }
    if (best_c < 0) break;

    const Scalar pivot = reduced_(best_s, best_c);
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (c == best_c || reduced_(best_s, c).is_zero()) continue;
      const Scalar factor = (reduced_(best_s, c) / pivot).reduced();
      for (Eigen::Index s = 0; s < slots; ++s)
        if (!reduced_(s, best_c).is_zero()) reduced_(s, c) = (reduced_(s, c) - factor * reduced_(s, best_c)).reduced();
      for (Eigen::Index k = 0; k < cols; ++k)
        if (!transform_(k, best_c).is_zero())
          transform_(k, c) = (transform_(k, c) - factor * transform_(k, best_c)).reduced();
    }
    col_used[static_cast<std::size_t>(best_c)] = true;
    slot_used[static_cast<std::size_t>(best_s)] = true;
    pivots_.emplace_back(best_s, best_c);
  }
}

SpanEliminator::Result SpanEliminator::reduce(const Vector& v) const {
  if (v.rows() != reduced_.rows()) throw PreconditionError("span query has the wrong number of slots");
  Result out;
  out.residual = v;
  Vector reduced_coeffs = Vector::Zero(reduced_.cols());
  for (const auto& [s, c] : pivots_) {
    if (out.residual(s).is_zero()) continue;
    const Scalar factor = (out.residual(s) / reduced_(s, c)).reduced();
    reduced_coeffs(c) = factor;
    for (Eigen::Index k = 0; k < reduced_.rows(); ++k)
      if (!reduced_(k, c).is_zero()) out.residual(k) = (out.residual(k) - factor * reduced_(k, c)).reduced();
  }
  out.member = is_zero(out.residual);
  out.coefficients = reduced(transform_ * reduced_coeffs);
  return out;
}

}  // namespace gg
