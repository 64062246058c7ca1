#pragma once

// Test-only dense reference implementation. Nothing here calls the library's
// chain propagation, minors or Gauss code; values are rebuilt from matrix
// units and plain dense arithmetic.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rttkit/scalar.hpp"
#include "rttkit/sparse.hpp"

namespace oracle {

using rttkit::Scalar;

struct Dense {
  std::size_t n = 0;
  std::vector<Scalar> a;

  Dense() = default;
  explicit Dense(std::size_t n_) : n(n_), a(n_ * n_) {}
  static Dense identity(std::size_t n) {
    Dense d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
    return d;
  }
  Scalar& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool operator==(const Dense& o) const { return n == o.n && a == o.a; }
  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
};

inline Dense operator*(const Dense& x, const Dense& y) {
  Dense z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

inline Dense operator+(Dense x, const Dense& y) {
  for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] += y.a[k];
  return x;
}

inline Dense operator-(Dense x, const Dense& y) {
  for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
  return x;
}

inline Dense operator*(const Scalar& s, Dense x) {
  for (auto& v : x.a) v *= s;
  return x;
}

/// Gauss–Jordan with first-nonzero pivoting.
inline Dense inverse(Dense m) {
  const std::size_t n = m.n;
  Dense inv = Dense::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) throw std::runtime_error("oracle::inverse: singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(p, j), m(col, j));
      std::swap(inv(p, j), inv(col, j));
    }
    const Scalar piv = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= piv;
      inv(col, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

inline Dense from_sparse(const rttkit::SparseOperator& op) {
  Dense d(op.dim());
  for (std::size_t r = 0; r < op.dim(); ++r)
    for (const auto& e : op.row(r)) d(r, e.col) = e.value;
  return d;
}

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// E_ab (1-based colors) on `site` of (C^n)^{⊗l}; site 1 is the least
/// significant base-n digit.
inline Dense unit(int n, int l, int site, int a, int b) {
  const std::size_t dim = ipow(static_cast<std::size_t>(n), l);
  const std::size_t stride = ipow(static_cast<std::size_t>(n), site - 1);
  Dense d(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const int color = static_cast<int>((x / stride) % static_cast<std::size_t>(n)) + 1;
    if (color != b) continue;
    const std::size_t y = x + (static_cast<std::size_t>(a) - static_cast<std::size_t>(b)) * stride;
    d(y, x) = 1;
  }
  return d;
}

/// Operator-valued n×n matrix; block (i,j) (0-based) is an operator on H.
struct Block {
  int n = 0;
  std::vector<Dense> e;
  Dense& at(int i, int j) { return e[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  const Dense& at(int i, int j) const { return e[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
};

inline Block block_product(const Block& x, const Block& y) {
  Block z{x.n, std::vector<Dense>(x.e.size(), Dense(x.e[0].n))};
  for (int i = 1; i <= x.n; ++i)
    for (int j = 1; j <= x.n; ++j)
      for (int k = 1; k <= x.n; ++k) z.at(i, j) = z.at(i, j) + x.at(i, k) * y.at(k, j);
  return z;
}

/// T(u) = diag(κ) L_l(u - z_l) ··· L_1(u - z_1). Fundamental site: entry
/// (i,j) is δ_ij + (c/w) E_ji; conjugate site: δ_ij - (c/w) E_{n+1-i,n+1-j}.
inline Block chain(int n, const Scalar& c, const std::vector<Scalar>& z, const std::vector<bool>& conjugate,
                   const std::vector<Scalar>& kappa, const Scalar& u) {
  const int l = static_cast<int>(z.size());
  const std::size_t dim = ipow(static_cast<std::size_t>(n), l);
  Block t{n, std::vector<Dense>(static_cast<std::size_t>(n * n), Dense(dim))};
  for (int i = 1; i <= n; ++i) t.at(i, i) = kappa.empty() ? Dense::identity(dim) : kappa[i - 1] * Dense::identity(dim);
  for (int site = l; site >= 1; --site) {
    const Scalar w = u - z[static_cast<std::size_t>(site - 1)];
    Block lax{n, std::vector<Dense>(static_cast<std::size_t>(n * n), Dense(dim))};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Dense d = i == j ? Dense::identity(dim) : Dense(dim);
        if (!conjugate.empty() && conjugate[static_cast<std::size_t>(site - 1)])
          d = d - (c / w) * unit(n, l, site, n + 1 - i, n + 1 - j);
        else
          d = d + (c / w) * unit(n, l, site, j, i);
        lax.at(i, j) = d;
      }
    t = block_product(t, lax);
  }
  return t;
}

/// The full (n·dim)-square matrix with block (i,j) = T_ij.
inline Dense flatten(const Block& t) {
  const std::size_t dim = t.e[0].n;
  Dense d(static_cast<std::size_t>(t.n) * dim);
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n; ++j)
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t s = 0; s < dim; ++s)
          d(static_cast<std::size_t>(i - 1) * dim + r, static_cast<std::size_t>(j - 1) * dim + s) = t.at(i, j)(r, s);
  return d;
}

inline Block unflatten(const Dense& d, int n) {
  const std::size_t dim = d.n / static_cast<std::size_t>(n);
  Block t{n, std::vector<Dense>(static_cast<std::size_t>(n * n), Dense(dim))};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t s = 0; s < dim; ++s)
          t.at(i, j)(r, s) = d(static_cast<std::size_t>(i - 1) * dim + r, static_cast<std::size_t>(j - 1) * dim + s);
  return t;
}

/// RTT in components: T_ij(u)T_kl(v) + g T_kj(u)T_il(v) = T_kl(v)T_ij(u) + g T_kj(v)T_il(u).
inline bool rtt_holds(const Block& tu, const Block& tv, const Scalar& g) {
  const int n = tu.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const Dense lhs = tu.at(i, j) * tv.at(k, l) + g * (tu.at(k, j) * tv.at(i, l));
          const Dense rhs = tv.at(k, l) * tu.at(i, j) + g * (tv.at(k, j) * tu.at(i, l));
          if (!(lhs == rhs)) return false;
        }
  return true;
}

/// Top coefficient of the interpolating polynomial through (x_k, y_k) (degree
/// x.size() - 1), via Newton divided differences.
inline Scalar leading_coefficient(const std::vector<Scalar>& x, std::vector<Scalar> y) {
  const std::size_t m = x.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t k = m - 1; k >= level; --k) {
      y[k] = (y[k] - y[k - 1]) / (x[k] - x[k - level]);
      if (k == level) break;
    }
  return y[m - 1];
}

inline Scalar g(const Scalar& u, const Scalar& v, const Scalar& c) { return c / (u - v); }
inline Scalar f(const Scalar& u, const Scalar& v, const Scalar& c) { return (u - v + c) / (u - v); }

inline std::vector<Scalar> column0(const Dense& d) {
  std::vector<Scalar> out(d.n);
  for (std::size_t r = 0; r < d.n; ++r) out[r] = d(r, 0);
  return out;
}

inline std::vector<Scalar> to_vector(const rttkit::StateVector& v, std::size_t dim) {
  std::vector<Scalar> out(dim);
  for (const auto& [k, x] : v.entries()) out[k] = x;
  return out;
}

}  // namespace oracle
