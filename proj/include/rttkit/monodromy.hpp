#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rttkit/scalar.hpp"
#include "rttkit/sparse.hpp"

namespace rttkit {

/// The N×N block of operators T_ij(u) at one spectral point (1-based access).
struct OperatorMatrix {
  int n = 0;
  std::vector<SparseOperator> data;

  OperatorMatrix() = default;
  OperatorMatrix(int n_, SpaceShape shape) : n(n_), data(static_cast<std::size_t>(n_ * n_), SparseOperator(shape)) {}
  const SparseOperator& at(int i, int j) const;
  SparseOperator& at(int i, int j);
};

/// Thread-safe memo table keyed by spectral point. Two threads racing on the
/// same key may both compute; the first insertion wins.
template <class Value>
class PointCache {
 public:
  template <class Fn>
  std::shared_ptr<const Value> get(const Scalar& u, Fn&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(u);
      if (it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(u, std::move(value)).first->second;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::map<Scalar, std::shared_ptr<const Value>> table_;
};

/// Anything that provides monodromy entries, a vacuum and vacuum eigenvalues.
/// Indices are 1-based throughout.
class MonodromySource {
 public:
  virtual ~MonodromySource() = default;

  virtual SpaceShape shape() const = 0;
  int n() const { return shape().n; }
  virtual Scalar c() const = 0;

  /// Full matrix T(u); implementations cache per point.
  virtual std::shared_ptr<const OperatorMatrix> matrix(const Scalar& u) const = 0;
  SparseOperator entry(int i, int j, const Scalar& u) const;

  virtual StateVector vacuum() const { return StateVector::basis(shape(), 0); }
  /// Closed-form eigenvalue of T_ii(u) on the vacuum.
  virtual Scalar lambda(int i, const Scalar& u) const = 0;
  /// α_i(u) = λ_i(u)/λ_{i+1}(u), 1 <= i < N.
  Scalar alpha(int i, const Scalar& u) const;

  /// T_ij[0], the u^{-1} coefficient of T_ij(u). Only sources normalized to
  /// T(u) -> I provide it; others throw DomainError.
  virtual bool has_zero_modes() const { return false; }
  virtual SparseOperator zero_mode(int i, int j) const;

  /// Points a with a pole of T(u) at u = a. Callers add their own shifts.
  virtual std::vector<Scalar> singular_points() const = 0;
  virtual std::string describe() const = 0;

 protected:
  void check_indices(int i, int j) const;
};

}  // namespace rttkit
