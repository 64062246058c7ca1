#pragma once

#include <cstddef>
#include <vector>

#include "rttkit/scalar.hpp"
#include "rttkit/sparse.hpp"

namespace rttkit {

/// Solves A x = b exactly for square A. Throws SingularError.
std::vector<Scalar> solve(DenseMatrix a, std::vector<Scalar> b);

/// Rank over Q.
std::size_t rank(DenseMatrix a);

/// Incrementally maintained reduced row-echelon basis; used to pick a
/// well-posed square subsystem out of a stream of candidate equations.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : width_(width) {}
  /// Adds `row` if it is independent of the rows kept so far.
  bool try_add(const std::vector<Scalar>& row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rttkit
