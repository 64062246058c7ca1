#include "rttkit/linalg.hpp"

#include <utility>

#include "rttkit/errors.hpp"

namespace rttkit {

std::vector<Scalar> solve(DenseMatrix a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw ShapeError("solve: right-hand side has the wrong length");
  for (const auto& r : a)
    if (r.size() != n) throw ShapeError("solve: matrix is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw SingularError("solve: singular system");
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    const Scalar inv = 1 / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Scalar f = a[r][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::size_t rank(DenseMatrix a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t q = r + 1; q < a.size(); ++q) {
      if (a[q][col] == 0) continue;
      const Scalar f = a[q][col] / a[r][col];
      for (std::size_t k = col; k < cols; ++k) a[q][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

bool RowEchelon::try_add(const std::vector<Scalar>& row) {
  if (row.size() != width_) throw ShapeError("RowEchelon: row has the wrong width");
  std::vector<Scalar> v = row;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& coef = v[pivots_[k]];
    if (coef == 0) continue;
    const Scalar f = coef;
    for (std::size_t c = 0; c < width_; ++c)
      if (rows_[k][c] != 0) v[c] -= f * rows_[k][c];
  }
  std::size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;
  const Scalar inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // Keep earlier rows reduced against the new pivot.
  for (auto& r : rows_) {
    if (r[p] == 0) continue;
    const Scalar f = r[p];
    for (std::size_t c = 0; c < width_; ++c)
      if (v[c] != 0) r[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace rttkit
