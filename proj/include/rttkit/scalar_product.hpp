#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rttkit/bethe.hpp"
#include "rttkit/sampling.hpp"
#include "rttkit/verdict.hpp"

namespace rttkit {

/// Split of every x̄^k and t̄^k into subsets I and II with #x̄^k_I = #t̄^k_I.
/// Bit b of x_mask[k-1] set means x̄^k[b] ∈ x̄^k_I (positions, not values).
struct Partition {
  std::vector<std::uint32_t> x_mask;
  std::vector<std::uint32_t> t_mask;

  /// e.g. "x1:I=01|t1:I=10;x2:..." in color order.
  std::string descriptor(const BetheParams& x) const;
  bool operator==(const Partition& o) const { return x_mask == o.x_mask && t_mask == o.t_mask; }
  bool operator<(const Partition& o) const {
    return x_mask != o.x_mask ? x_mask < o.x_mask : t_mask < o.t_mask;
  }
};

/// C(x̄)B(t̄); exactly 0 if some #x̄^k != #t̄^k.
Scalar scalar_product(const MonodromySource& source, const BetheParams& x, const BetheParams& t);

/// All ∏_k Σ_s C(a_k, s)^2 partitions in a fixed order.
std::vector<Partition> enumerate_partitions(const BetheParams& x, const BetheParams& t);

/// ∏_k α_k(x̄^k_I) α_k(t̄^k_II) on `source`.
Scalar alpha_moment(const MonodromySource& source, const BetheParams& x, const BetheParams& t,
                    const Partition& p);

/// Partition carried through μ: new color k takes the masks of old color N-k.
Partition mu_partition(const Partition& p, int n);

struct WTable {
  BetheParams x;
  BetheParams t;
  std::vector<Partition> partitions;
  std::vector<Scalar> values;
  std::size_t ensemble_size = 0;
  std::size_t held_out = 0;

  const Scalar& at(const Partition& p) const;
  /// {"partition descriptor": "p/q", ...} plus metadata.
  std::string to_json() const;
};

using SourceGenerator = std::function<std::shared_ptr<const MonodromySource>()>;

/// Fits S_r = Σ_p W_p M_{r,p} over realizations drawn from `next`. Members
/// that add rank go into the square fit; the rest are held out and must be
/// reproduced exactly. Throws SingularError if the rank does not fill up within
/// `max_members`, InconsistencyError if a held-out member disagrees.
WTable extract_w_table(const BetheParams& x, const BetheParams& t, const Scalar& c, const SourceGenerator& next,
                       std::size_t held_out = 4, std::size_t max_members = 0);

/// Random twisted chains whose α_k vary enough to separate all moments:
/// fundamental sites only for N = 2, two fundamental plus two conjugate
/// sites for N = 3. Poles avoid `points` up to shifts of 2N+2.
SourceGenerator chain_ensemble(int n, const Scalar& c, std::vector<Scalar> points, Sampler sampler);

/// Z(x̄|t̄): the entry with x̄_I = x̄ and t̄_I = t̄.
Scalar highest_coefficient(const WTable& table);

/// W_p(x̄,t̄) ∏_{k=1}^{N-2} f(x̄^{k+1},x̄^k) f(t̄^{k+1},t̄^k) = W_{μ(p)}(μ(x̄), μ(t̄)) for every p.
CheckList verify_ww1(const WTable& table, const WTable& mu_table, const Scalar& c, bool drop_f = false);

/// Z(μ(x̄)|μ(t̄)) = Z(x̄|t̄) ∏_{k=1}^{N-2} f(x̄^{k+1},x̄^k) f(t̄^{k+1},t̄^k).
CheckList verify_zz1(const WTable& table, const WTable& mu_table, const Scalar& c, bool drop_f = false);

/// Ĉ(x̄)B̂(t̄) ∏_{k=1}^{N-2} f(x̄^{k+1},x̄^k) f(t̄^{k+1},t̄^k) = C(μ(x̄))B(μ(t̄)) on one realization.
CheckList verify_product_identity(const HattedSource& hatted, const BetheParams& x, const BetheParams& t);

/// Sum-formula reconstruction on further realizations.
CheckList verify_reconstruction(const WTable& table, const std::vector<std::shared_ptr<const MonodromySource>>& sources);

}  // namespace rttkit
