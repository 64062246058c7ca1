#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rttkit/monodromy.hpp"
#include "rttkit/qdet.hpp"
#include "rttkit/verdict.hpp"

namespace rttkit {

/// Bethe parameters t̄ = {t̄^1, …, t̄^{N-1}}; sets[s-1] holds t̄^s.
struct BetheParams {
  int n = 2;
  std::vector<std::vector<Scalar>> sets;

  BetheParams() = default;
  BetheParams(int n_, std::vector<std::vector<Scalar>> sets_);

  std::size_t total() const;
  std::vector<std::size_t> cardinalities() const;
  const std::vector<Scalar>& set(int s) const;
  /// Every parameter, set by set.
  std::vector<Scalar> all_points() const;
  /// Throws GenericityError on repeated values within a set, or on
  /// t^{s+1}_j ∈ {t^s_k, t^s_k - c} across neighbouring sets.
  void validate(const Scalar& c) const;
  std::string to_string() const;
  bool operator==(const BetheParams& other) const { return n == other.n && sets == other.sets; }
};

/// μ(t̄): new set s is old set N-s shifted by -s·c.
BetheParams mu_map(const BetheParams& params, const Scalar& c);

/// ∏_{s=1}^{N-2} f(t̄^{s+1}, t̄^s).
Scalar neighbour_f_product(const BetheParams& params, const Scalar& c);

struct OperatorFactor {
  int i;
  int j;
  Scalar point;
};

struct LambdaDivisor {
  int color;
  Scalar point;
};

/// prefactor · [∏ λ_color(point)]^{-1} · factors[0] factors[1] ··· factors[m-1].
struct Monomial {
  Scalar prefactor;
  std::vector<LambdaDivisor> divisors;
  std::vector<OperatorFactor> factors;
};

/// Formal sum of monomials. A Bethe polynomial is applied to the vacuum |0⟩;
/// a dual polynomial is the functional ⟨0| factors… .
struct OperatorPolynomial {
  int n = 2;
  Scalar c;
  bool dual = false;
  std::vector<Monomial> monomials;
};

/// Izergin–Korepin partition function K_n(x̄|ȳ); K_0 = 1, K_1(x|y) = g(x,y).
Scalar izergin_korepin(const std::vector<Scalar>& x, const std::vector<Scalar>& y, const Scalar& c);

/// Off-shell Bethe vector with main term
/// T_{N-1,N}(t̄^{N-1})···T_12(t̄^1)|0⟩ / [∏ λ_{s+1}(t̄^s) ∏ f(t̄^{s+1}, t̄^s)].
/// Supports N = 2 and N = 3.
OperatorPolynomial bethe_polynomial(const BetheParams& params, const Scalar& c);

/// ψ: reverses every factor list and sends T_ij to T_ji.
OperatorPolynomial dual_polynomial(const OperatorPolynomial& poly);

/// Vector (or, for dual polynomials, the row vector of the functional).
StateVector evaluate(const OperatorPolynomial& poly, const MonodromySource& source);

/// Combined main-term monomials against the direct product of entries.
CheckList main_term_check(const OperatorPolynomial& poly, const BetheParams& params,
                          const MonodromySource& source);

/// Sorted one-monomial-per-line text form with exact "p/q" rationals.
std::string serialize(const OperatorPolynomial& poly);

struct Theorem1Options {
  bool dual = false;
  /// Negative controls: leave out the sign or the f-product.
  bool drop_sign = false;
  bool drop_f = false;
};

struct Theorem1Result {
  bool passed = false;
  StateVector lhs;
  StateVector rhs;
  std::string detail;
};

/// B̂(t̄) against (-1)^{#t̄} [∏ f(t̄^{s+1}, t̄^s)]^{-1} B(μ(t̄)), or the dual
/// analogue for C. `hatted` must wrap `base`.
Theorem1Result verify_theorem1(const HattedSource& hatted, const BetheParams& params,
                               const Theorem1Options& options = {});

}  // namespace rttkit
