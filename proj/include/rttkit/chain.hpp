#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rttkit/monodromy.hpp"

namespace rttkit {

/// Site representation. Fundamental sites carry L(w) = I + (c/w)P. Conjugate
/// (dual) sites carry T_ij contributions δ_ij - (c/w) E_{N+1-i,N+1-j}; they
/// make λ_N depend on u, which fundamental-only chains cannot do.
enum class SiteKind { Fundamental, Conjugate };

/// T(u) = K · L_L(u - z_L) ··· L_1(u - z_1) with K = diag(κ).
class ChainRealization final : public MonodromySource {
 public:
  /// Empty `twist` means κ = (1, …, 1); empty `kinds` means all fundamental.
  ChainRealization(int n, Scalar c, std::vector<Scalar> z, std::vector<Scalar> twist = {},
                   std::vector<SiteKind> kinds = {});

  SpaceShape shape() const override { return shape_; }
  Scalar c() const override { return c_; }
  std::shared_ptr<const OperatorMatrix> matrix(const Scalar& u) const override;
  Scalar lambda(int i, const Scalar& u) const override;
  bool has_zero_modes() const override { return !twisted(); }
  /// T_ij[0] = c Σ_a ρ_a(e_ji), ρ(e_ji) = E_ji (fundamental) or -E_{i'j'} (conjugate).
  SparseOperator zero_mode(int i, int j) const override;
  std::vector<Scalar> singular_points() const override { return z_; }
  std::string describe() const override;

  bool twisted() const;
  const std::vector<Scalar>& inhomogeneities() const { return z_; }
  const std::vector<Scalar>& twist() const { return twist_; }
  const std::vector<SiteKind>& kinds() const { return kinds_; }

 private:
  OperatorMatrix compute(const Scalar& u) const;

  SpaceShape shape_;
  Scalar c_;
  std::vector<Scalar> z_;
  std::vector<Scalar> twist_;
  std::vector<SiteKind> kinds_;
  PointCache<OperatorMatrix> cache_;
};

/// Wraps a source and multiplies one entry T_ij(u) by a constant. A negative
/// control: the result violates the RTT relation unless factor == 1.
class CorruptedSource final : public MonodromySource {
 public:
  CorruptedSource(std::shared_ptr<const MonodromySource> base, int i, int j, Scalar factor);

  SpaceShape shape() const override { return base_->shape(); }
  Scalar c() const override { return base_->c(); }
  std::shared_ptr<const OperatorMatrix> matrix(const Scalar& u) const override;
  Scalar lambda(int i, const Scalar& u) const override;
  std::vector<Scalar> singular_points() const override { return base_->singular_points(); }
  std::string describe() const override;

 private:
  std::shared_ptr<const MonodromySource> base_;
  int i_, j_;
  Scalar factor_;
  PointCache<OperatorMatrix> cache_;
};

}  // namespace rttkit
