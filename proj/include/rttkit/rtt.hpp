#pragma once

#include <array>
#include <optional>
#include <string>

#include "rttkit/monodromy.hpp"

namespace rttkit {

struct RttReport {
  bool passed = false;
  std::size_t tuples_checked = 0;
  /// First failing (i, j, k, l), 1-based.
  std::optional<std::array<int, 4>> failing;
  std::string detail;
};

/// Checks [T_ij(u), T_kl(v)] = g(u,v)(T_il(u)T_kj(v) - T_il(v)T_kj(u)) for all
/// N^4 index tuples. Stops at the first failing tuple.
RttReport rtt_residual(const MonodromySource& source, const Scalar& u, const Scalar& v);

/// Same relation with g(u,v) replaced by g(v,u): the exchange relation obeyed
/// by the inverse monodromy T̃.
RttReport rtt_residual_opposite(const MonodromySource& source, const Scalar& u, const Scalar& v);

/// Σ_i T_ii(u).
SparseOperator transfer_matrix(const MonodromySource& source, const Scalar& u);

}  // namespace rttkit
