#include "rttkit/rtt.hpp"

#include <vector>

#include "rttkit/errors.hpp"
#include "rttkit/rmatrix.hpp"

namespace rttkit {

namespace {

RttReport residual(const MonodromySource& source, const Scalar& u, const Scalar& v, const Scalar& g) {
  const int n = source.n();
  const auto tu = source.matrix(u);
  const auto tv = source.matrix(v);
  const auto idx = [n](int a, int b) { return static_cast<std::size_t>((a - 1) * n + (b - 1)); };
  // uv[(a,b),(p,q)] = T_ab(u) T_pq(v); vu[(p,q),(a,b)] = T_pq(v) T_ab(u).
  const std::size_t m = static_cast<std::size_t>(n * n);
  std::vector<SparseOperator> uv(m * m), vu(m * m);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
          uv[idx(a, b) * m + idx(p, q)] = tu->at(a, b) * tv->at(p, q);
          vu[idx(p, q) * m + idx(a, b)] = tv->at(p, q) * tu->at(a, b);
        }
  RttReport report;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          ++report.tuples_checked;
          const auto lhs = uv[idx(i, j) * m + idx(k, l)] - vu[idx(k, l) * m + idx(i, j)];
          // T_il(u) T_kj(v) - T_il(v) T_kj(u)
          const auto rhs = (uv[idx(i, l) * m + idx(k, j)] - vu[idx(i, l) * m + idx(k, j)]) * g;
          if (lhs != rhs) {
            report.failing = std::array<int, 4>{i, j, k, l};
            report.detail = "nonzero residual at (i,j,k,l)=(" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) + "," + std::to_string(l) + "), u=" + to_string(u) +
                            ", v=" + to_string(v);
            return report;
          }
        }
  report.passed = true;
  return report;
}

}  // namespace

RttReport rtt_residual(const MonodromySource& source, const Scalar& u, const Scalar& v) {
  return residual(source, u, v, g_scalar(u, v, source.c()));
}

RttReport rtt_residual_opposite(const MonodromySource& source, const Scalar& u, const Scalar& v) {
  return residual(source, u, v, g_scalar(v, u, source.c()));
}

SparseOperator transfer_matrix(const MonodromySource& source, const Scalar& u) {
  const auto t = source.matrix(u);
  SparseOperator out(source.shape());
  for (int i = 1; i <= source.n(); ++i) out += t->at(i, i);
  return out;
}

}  // namespace rttkit
