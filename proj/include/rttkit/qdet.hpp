#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "rttkit/monodromy.hpp"

namespace rttkit {

/// Σ_p sgn(p) T_{a_1 b_p(1)}(u) T_{a_2 b_p(2)}(u-c) ··· T_{a_m b_p(m)}(u-(m-1)c),
/// products taken left to right. Index lists must be strictly increasing,
/// of equal length m, 1 <= m <= N.
SparseOperator quantum_minor(const MonodromySource& source, const std::vector<int>& rows,
                             const std::vector<int>& cols, const Scalar& u);

/// Full-size quantum minor.
SparseOperator qdet(const MonodromySource& source, const Scalar& u);

/// T̃_ij(u) = (-1)^{i+j} · minor(rows ≠ j, cols ≠ i)(u-c) · qdet(u)^{-1}.
/// Throws SingularError if qdet(u) is not invertible.
SparseOperator inverse_entry(const MonodromySource& source, int i, int j, const Scalar& u);

/// T̂_ij(u) = T̃_{N+1-j, N+1-i}(u) over a base source.
class HattedSource final : public MonodromySource {
 public:
  explicit HattedSource(std::shared_ptr<const MonodromySource> base);

  SpaceShape shape() const override { return base_->shape(); }
  Scalar c() const override { return base_->c(); }
  std::shared_ptr<const OperatorMatrix> matrix(const Scalar& u) const override;
  StateVector vacuum() const override { return base_->vacuum(); }
  /// λ̂_i(u) from the base eigenvalues (see hat_lambda).
  Scalar lambda(int i, const Scalar& u) const override;
  /// T̂_ij[0] = -T_{N+1-j, N+1-i}[0], available when the base has zero modes.
  bool has_zero_modes() const override { return base_->has_zero_modes(); }
  SparseOperator zero_mode(int i, int j) const override;
  std::vector<Scalar> singular_points() const override;
  std::string describe() const override;

  const MonodromySource& base() const { return *base_; }
  std::shared_ptr<const MonodromySource> base_ptr() const { return base_; }
  /// The inverse monodromy T̃(u) of the base.
  std::shared_ptr<const OperatorMatrix> tilde(const Scalar& u) const;
  std::shared_ptr<const SparseOperator> qdet_at(const Scalar& u) const;
  /// Cached quantum minor of the base.
  SparseOperator minor(const std::vector<int>& rows, const std::vector<int>& cols, const Scalar& u) const;

 private:
  using MinorKey = std::tuple<std::vector<int>, std::vector<int>, Scalar>;

  std::shared_ptr<const MonodromySource> base_;
  PointCache<OperatorMatrix> tilde_cache_;
  PointCache<OperatorMatrix> hat_cache_;
  PointCache<SparseOperator> qdet_cache_;
  mutable std::mutex minor_mutex_;
  mutable std::map<MinorKey, SparseOperator> minors_;
};

std::shared_ptr<HattedSource> hatted_source(std::shared_ptr<const MonodromySource> base);

/// λ̂_i(u) = [1/λ_{N-i+1}(u-(N-i)c)] ∏_{ℓ=1}^{N-i} λ_ℓ(u-ℓc)/λ_ℓ(u-(ℓ-1)c).
Scalar hat_lambda(const MonodromySource& base, int i, const Scalar& u);

/// B^g(u) = T_23(u)T̂_13(u) - T_13(u)T̂_12(u), N = 3 only.
SparseOperator bg_operator(const HattedSource& hatted, const Scalar& u);

}  // namespace rttkit
