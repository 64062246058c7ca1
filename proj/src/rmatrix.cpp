#include "rttkit/rmatrix.hpp"

#include "rttkit/errors.hpp"

namespace rttkit {

Scalar g_scalar(const Scalar& u, const Scalar& v, const Scalar& c) {
  if (u == v) throw PoleError("g(u,v) has a pole at u = v = " + to_string(u));
  return c / (u - v);
}

Scalar f_scalar(const Scalar& u, const Scalar& v, const Scalar& c) {
  if (u == v) throw PoleError("f(u,v) has a pole at u = v = " + to_string(u));
  return (u - v + c) / (u - v);
}

Scalar h_scalar(const Scalar& u, const Scalar& v, const Scalar& c) {
  if (c == 0) throw DomainError("h(u,v) requires c != 0");
  return (u - v + c) / c;
}

namespace {

template <class Fn>
Scalar double_product(const std::vector<Scalar>& a, const std::vector<Scalar>& b, Fn fn,
                      const char* name) {
  Scalar r = 1;
  for (const auto& x : a)
    for (const auto& y : b) {
      try {
        r *= fn(x, y);
      } catch (const PoleError&) {
        throw PoleError(std::string(name) + ": pole at pair (" + to_string(x) + ", " + to_string(y) + ")");
      }
    }
  return r;
}

}  // namespace

Scalar product_f(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& c) {
  return double_product(a, b, [&](const Scalar& x, const Scalar& y) { return f_scalar(x, y, c); },
                        "product_f");
}

Scalar product_g(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& c) {
  return double_product(a, b, [&](const Scalar& x, const Scalar& y) { return g_scalar(x, y, c); },
                        "product_g");
}

Scalar product_h(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& c) {
  return double_product(a, b, [&](const Scalar& x, const Scalar& y) { return h_scalar(x, y, c); },
                        "product_h");
}

SparseOperator permutation_operator(SpaceShape shape, int a, int b) {
  std::vector<SparseOperator::Row> rows(shape.dim);
  for (std::size_t col = 0; col < shape.dim; ++col) {
    const int ca = shape.color(col, a);
    const int cb = shape.color(col, b);
    const std::size_t r = shape.with_color(shape.with_color(col, a, cb), b, ca);
    rows[r].push_back({static_cast<std::uint32_t>(col), Scalar(1)});
  }
  return SparseOperator::from_rows(shape, std::move(rows));
}

SparseOperator r_operator(SpaceShape shape, int a, int b, const Scalar& u, const Scalar& v,
                          const Scalar& c) {
  return SparseOperator::identity(shape) + permutation_operator(shape, a, b) * g_scalar(u, v, c);
}

SparseOperator r_matrix(int n, const Scalar& u, const Scalar& v, const Scalar& c) {
  return r_operator(SpaceShape(n, 2), 1, 2, u, v, c);
}

bool yang_baxter_holds(int n, const Scalar& u, const Scalar& v, const Scalar& w, const Scalar& c) {
  const SpaceShape s(n, 3);
  const auto r12 = r_operator(s, 1, 2, u, v, c);
  const auto r13 = r_operator(s, 1, 3, u, w, c);
  const auto r23 = r_operator(s, 2, 3, v, w, c);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

}  // namespace rttkit
