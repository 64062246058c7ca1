#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "rttkit/scalar.hpp"
#include "rttkit/space.hpp"

namespace rttkit {

/// Sparse vector in H. Zero coordinates are never stored.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(SpaceShape shape) : shape_(shape) {}

  static StateVector basis(SpaceShape shape, std::size_t index);

  const SpaceShape& shape() const { return shape_; }
  const std::map<std::size_t, Scalar>& entries() const { return entries_; }
  Scalar at(std::size_t index) const;
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  void add_to(std::size_t index, const Scalar& value);

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(const Scalar& s);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(StateVector a, const Scalar& s) { return a *= s; }
  friend StateVector operator*(const Scalar& s, StateVector a) { return a *= s; }
  bool operator==(const StateVector& other) const;
  bool operator!=(const StateVector& other) const { return !(*this == other); }

 private:
  SpaceShape shape_;
  std::map<std::size_t, Scalar> entries_;
};

/// Σ_k left_k right_k (bilinear, no conjugation).
Scalar dot(const StateVector& left, const StateVector& right);

/// Sparse linear map on H stored row-wise with columns sorted ascending.
class SparseOperator {
 public:
  struct Entry {
    std::uint32_t col;
    Scalar value;
  };
  using Row = std::vector<Entry>;
  using Triplet = std::tuple<std::size_t, std::size_t, Scalar>;

  SparseOperator() = default;
  /// Zero operator.
  explicit SparseOperator(SpaceShape shape);

  static SparseOperator identity(SpaceShape shape);
  static SparseOperator multiple_of_identity(SpaceShape shape, const Scalar& s);
  /// Duplicate (row, col) pairs are summed; zeros are dropped.
  static SparseOperator from_triplets(SpaceShape shape, std::vector<Triplet> triplets);
  /// Internal fast path: rows must already be sorted by column and zero-free.
  static SparseOperator from_rows(SpaceShape shape, std::vector<Row> rows);

  const SpaceShape& shape() const { return shape_; }
  std::size_t dim() const { return shape_.dim; }
  const Row& row(std::size_t r) const { return rows_[r]; }
  Scalar at(std::size_t r, std::size_t c) const;
  std::size_t nnz() const;
  bool is_zero() const;
  bool is_multiple_of_identity() const;

  StateVector apply(const StateVector& v) const;
  /// Row vector times operator: (vᵀA)ᵀ.
  StateVector apply_left(const StateVector& v) const;

  SparseOperator& operator+=(const SparseOperator& other);
  SparseOperator& operator-=(const SparseOperator& other);
  SparseOperator& operator*=(const Scalar& s);
  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(SparseOperator a, const Scalar& s) { return a *= s; }
  friend SparseOperator operator*(const Scalar& s, SparseOperator a) { return a *= s; }
  SparseOperator operator-() const;
  bool operator==(const SparseOperator& other) const;
  bool operator!=(const SparseOperator& other) const { return !(*this == other); }

 private:
  SpaceShape shape_;
  std::vector<Row> rows_;
};

/// E_ij acting on `site`, identity elsewhere.
SparseOperator elementary(SpaceShape shape, int site, int i, int j);

SparseOperator compose(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
/// a1 · a2 · ... · ak (left to right). Throws ShapeError on an empty list.
SparseOperator compose_all(const std::vector<const SparseOperator*>& factors);
SparseOperator add(const SparseOperator& a, const SparseOperator& b);
SparseOperator scale(const SparseOperator& a, const Scalar& s);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

/// Exact inverse by Gauss–Jordan elimination with sparsest-row pivoting.
/// Throws SingularError if `a` is not invertible.
SparseOperator invert(const SparseOperator& a);

using DenseMatrix = std::vector<std::vector<Scalar>>;
DenseMatrix to_dense(const SparseOperator& a);
SparseOperator from_dense(SpaceShape shape, const DenseMatrix& m);

}  // namespace rttkit
