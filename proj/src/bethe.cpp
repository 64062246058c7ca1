#include "rttkit/bethe.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "rttkit/errors.hpp"
#include "rttkit/rmatrix.hpp"

namespace rttkit {

namespace {

std::vector<Scalar> pick(const std::vector<Scalar>& set, std::uint32_t mask, bool inside) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < set.size(); ++k)
    if (((mask >> k) & 1U) == static_cast<std::uint32_t>(inside)) out.push_back(set[k]);
  return out;
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Scalar f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

std::string factor_text(const OperatorFactor& f) {
  return "T" + std::to_string(f.i) + std::to_string(f.j) + "(" + to_string(f.point) + ")";
}

}  // namespace

BetheParams::BetheParams(int n_, std::vector<std::vector<Scalar>> sets_) : n(n_), sets(std::move(sets_)) {
  if (n < 2) throw DomainError("BetheParams: N must be at least 2");
  if (sets.size() != static_cast<std::size_t>(n - 1))
    throw ShapeError("BetheParams: expected N-1 parameter sets");
}

std::size_t BetheParams::total() const {
  std::size_t t = 0;
  for (const auto& s : sets) t += s.size();
  return t;
}

std::vector<std::size_t> BetheParams::cardinalities() const {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(s.size());
  return out;
}

const std::vector<Scalar>& BetheParams::set(int s) const {
  if (s < 1 || s > n - 1) throw IndexError("BetheParams: set index out of range");
  return sets[static_cast<std::size_t>(s - 1)];
}

std::vector<Scalar> BetheParams::all_points() const {
  std::vector<Scalar> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  return out;
}

void BetheParams::validate(const Scalar& c) const {
  for (const auto& s : sets)
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (s[a] == s[b]) throw GenericityError("Bethe parameters repeat within a set: " + rttkit::to_string(s[a]));
  for (int s = 1; s + 1 <= n - 1; ++s)
    for (const auto& hi : set(s + 1))
      for (const auto& lo : set(s))
        if (hi == lo || hi == lo - c)
          throw GenericityError("Bethe parameters collide across sets " + std::to_string(s) + " and " +
                                std::to_string(s + 1));
}

std::string BetheParams::to_string() const {
  std::string out = "{";
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (s) out += "; ";
    out += rttkit::to_string(sets[s]);
  }
  return out + "}";
}

BetheParams mu_map(const BetheParams& params, const Scalar& c) {
  const int n = params.n;
  std::vector<std::vector<Scalar>> sets(static_cast<std::size_t>(n - 1));
  for (int s = 1; s <= n - 1; ++s) {
    for (const auto& t : params.set(n - s)) sets[static_cast<std::size_t>(s - 1)].push_back(t - s * c);
  }
  return BetheParams(n, std::move(sets));
}

Scalar neighbour_f_product(const BetheParams& params, const Scalar& c) {
  Scalar r = 1;
  for (int s = 1; s <= params.n - 2; ++s) r *= product_f(params.set(s + 1), params.set(s), c);
  return r;
}

Scalar izergin_korepin(const std::vector<Scalar>& x, const std::vector<Scalar>& y, const Scalar& c) {
  if (x.size() != y.size()) throw ShapeError("izergin_korepin: sets of different size");
  const std::size_t n = x.size();
  Scalar r = 1;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) r *= g_scalar(x[k], x[j], c) * g_scalar(y[j], y[k], c);
  r *= product_h(x, y, c);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar h = h_scalar(x[j], y[k], c);
      if (h == 0) throw GenericityError("izergin_korepin: h(x,y) vanishes");
      m[j][k] = g_scalar(x[j], y[k], c) / h;
    }
  return r * determinant(std::move(m));
}

OperatorPolynomial bethe_polynomial(const BetheParams& params, const Scalar& c) {
  params.validate(c);
  OperatorPolynomial poly;
  poly.n = params.n;
  poly.c = c;
  if (params.n == 2) {
    auto t = params.set(1);
    std::sort(t.begin(), t.end());
    Monomial m{Scalar(1), {}, {}};
    for (auto it = t.rbegin(); it != t.rend(); ++it) m.factors.push_back({1, 2, *it});
    for (const auto& x : t) m.divisors.push_back({2, x});
    poly.monomials.push_back(std::move(m));
    return poly;
  }
  if (params.n != 3) throw DomainError("bethe_polynomial: only N = 2 and N = 3 are supported");
  auto u = params.set(1);
  auto v = params.set(2);
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  const Scalar norm = product_f(v, u, c);
  // Sum over partitions ū → {ū_I, ū_II}, v̄ → {v̄_I, v̄_II} with #ū_I = #v̄_I:
  // K(v̄_I|ū_I) f(v̄_II, v̄_I) f(ū_I, ū_II) T13(v̄_I) T23(v̄_II) T12(ū_II)|0⟩
  // divided by λ2(ū_II) λ3(v̄) f(v̄, ū).
  for (std::uint32_t mu = 0; mu < (1U << u.size()); ++mu)
    for (std::uint32_t mv = 0; mv < (1U << v.size()); ++mv) {
      if (std::popcount(mu) != std::popcount(mv)) continue;
      const auto u1 = pick(u, mu, true), u2 = pick(u, mu, false);
      const auto v1 = pick(v, mv, true), v2 = pick(v, mv, false);
      Monomial m;
      m.prefactor = izergin_korepin(v1, u1, c) * product_f(v2, v1, c) * product_f(u1, u2, c) / norm;
      for (auto it = v1.rbegin(); it != v1.rend(); ++it) m.factors.push_back({1, 3, *it});
      for (auto it = v2.rbegin(); it != v2.rend(); ++it) m.factors.push_back({2, 3, *it});
      for (auto it = u2.rbegin(); it != u2.rend(); ++it) m.factors.push_back({1, 2, *it});
      for (const auto& x : u2) m.divisors.push_back({2, x});
      for (const auto& x : v) m.divisors.push_back({3, x});
      poly.monomials.push_back(std::move(m));
    }
  return poly;
}

OperatorPolynomial dual_polynomial(const OperatorPolynomial& poly) {
  OperatorPolynomial out = poly;
  out.dual = !poly.dual;
  for (auto& m : out.monomials) {
    std::reverse(m.factors.begin(), m.factors.end());
    for (auto& f : m.factors) std::swap(f.i, f.j);
  }
  return out;
}

StateVector evaluate(const OperatorPolynomial& poly, const MonodromySource& source) {
  if (source.n() != poly.n) throw ShapeError("evaluate: polynomial and source have different N");
  if (source.c() != poly.c) throw DomainError("evaluate: polynomial and source use different c");
  StateVector out(source.shape());
  const StateVector vac = source.vacuum();
  for (const auto& m : poly.monomials) {
    Scalar weight = m.prefactor;
    for (const auto& d : m.divisors) {
      const Scalar l = source.lambda(d.color, d.point);
      if (l == 0)
        throw GenericityError("evaluate: lambda_" + std::to_string(d.color) + " vanishes at " + to_string(d.point));
      weight /= l;
    }
    if (weight == 0) continue;
    StateVector v = vac;
    if (poly.dual) {
      for (auto it = m.factors.begin(); it != m.factors.end() && !v.is_zero(); ++it)
        v = source.matrix(it->point)->at(it->i, it->j).apply_left(v);
    } else {
      for (auto it = m.factors.rbegin(); it != m.factors.rend() && !v.is_zero(); ++it)
        v = source.matrix(it->point)->at(it->i, it->j).apply(v);
    }
    out += v * weight;
  }
  return out;
}

CheckList main_term_check(const OperatorPolynomial& poly, const BetheParams& params, const MonodromySource& source) {
  CheckList out;
  const Scalar c = poly.c;
  // Expected factor multiset: {(s, s+1, t) : t ∈ t̄^s}.
  std::vector<std::tuple<int, int, Scalar>> expected;
  for (int s = 1; s <= params.n - 1; ++s)
    for (const auto& t : params.set(s)) expected.emplace_back(s, s + 1, t);
  std::sort(expected.begin(), expected.end());
  OperatorPolynomial main = poly;
  main.dual = false;
  main.monomials.clear();
  for (const auto& m : poly.monomials) {
    std::vector<std::tuple<int, int, Scalar>> got;
    for (const auto& f : m.factors) got.emplace_back(poly.dual ? f.j : f.i, poly.dual ? f.i : f.j, f.point);
    std::sort(got.begin(), got.end());
    if (got != expected) continue;
    Monomial copy = m;
    if (poly.dual) {
      std::reverse(copy.factors.begin(), copy.factors.end());
      for (auto& f : copy.factors) std::swap(f.i, f.j);
    }
    main.monomials.push_back(std::move(copy));
  }
  out.add("mtb", "main monomials present", !main.monomials.empty());
  // Direct right-hand side: T_{N-1,N}(t̄^{N-1}) ··· T_12(t̄^1)|0⟩ with its normalization.
  StateVector direct = source.vacuum();
  Scalar denom = neighbour_f_product(params, c);
  for (int s = 1; s <= params.n - 1; ++s)
    for (const auto& t : params.set(s)) {
      direct = source.matrix(t)->at(s, s + 1).apply(direct);
      denom *= source.lambda(s + 1, t);
    }
  if (denom == 0) throw GenericityError("main_term_check: vanishing normalization");
  direct *= 1 / denom;
  const StateVector got = evaluate(main, source);
  out.add("mtb", params.to_string(), got == direct);
  return out;
}

std::string serialize(const OperatorPolynomial& poly) {
  std::vector<std::string> lines;
  for (const auto& m : poly.monomials) {
    auto divisors = m.divisors;
    std::sort(divisors.begin(), divisors.end(), [](const LambdaDivisor& a, const LambdaDivisor& b) {
      return a.color != b.color ? a.color < b.color : a.point < b.point;
    });
    std::string line = to_string(m.prefactor) + " |";
    for (const auto& d : divisors) line += " lambda" + std::to_string(d.color) + "(" + to_string(d.point) + ")";
    line += " |";
    for (const auto& f : m.factors) line += " " + factor_text(f);
    lines.push_back(line);
  }
  std::sort(lines.begin(), lines.end());
  std::string out = std::string(poly.dual ? "dual " : "") + "N=" + std::to_string(poly.n) + " c=" + to_string(poly.c) + "\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Theorem1Result verify_theorem1(const HattedSource& hatted, const BetheParams& params, const Theorem1Options& options) {
  const Scalar c = hatted.c();
  const BetheParams mu = mu_map(params, c);
  auto lhs_poly = bethe_polynomial(params, c);
  auto rhs_poly = bethe_polynomial(mu, c);
  if (options.dual) {
    lhs_poly = dual_polynomial(lhs_poly);
    rhs_poly = dual_polynomial(rhs_poly);
  }
  Theorem1Result r;
  r.lhs = evaluate(lhs_poly, hatted);
  Scalar factor = 1;
  if (!options.drop_sign && params.total() % 2 == 1) factor = -1;
  if (!options.drop_f) factor /= neighbour_f_product(params, c);
  r.rhs = evaluate(rhs_poly, hatted.base()) * factor;
  r.passed = r.lhs == r.rhs;
  if (!r.passed) {
    std::size_t first = 0;
    for (std::size_t k = 0; k < r.lhs.shape().dim; ++k)
      if (r.lhs.at(k) != r.rhs.at(k)) {
        first = k;
        break;
      }
    r.detail = "coordinate " + std::to_string(first) + ": lhs=" + to_string(r.lhs.at(first)) +
               " rhs=" + to_string(r.rhs.at(first));
  }
  return r;
}

}  // namespace rttkit
