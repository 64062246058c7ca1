#include "rttkit/scalar_product.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

#include "rttkit/chain.hpp"
#include "rttkit/errors.hpp"
#include "rttkit/linalg.hpp"
#include "rttkit/rmatrix.hpp"

namespace rttkit {

namespace {

std::vector<Scalar> pick(const std::vector<Scalar>& set, std::uint32_t mask, bool inside) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < set.size(); ++k)
    if (((mask >> k) & 1U) == static_cast<std::uint32_t>(inside)) out.push_back(set[k]);
  return out;
}

std::string mask_text(std::uint32_t mask, std::size_t width) {
  std::string s;
  for (std::size_t b = 0; b < width; ++b) s += ((mask >> b) & 1U) ? '1' : '0';
  return s;
}

bool same_cardinalities(const BetheParams& x, const BetheParams& t) {
  return x.n == t.n && x.cardinalities() == t.cardinalities();
}

Scalar pair_f_product(const BetheParams& x, const BetheParams& t, const Scalar& c) {
  return neighbour_f_product(x, c) * neighbour_f_product(t, c);
}

}  // namespace

std::string Partition::descriptor(const BetheParams& x) const {
  std::string out;
  for (std::size_t k = 0; k < x_mask.size(); ++k) {
    if (k) out += ";";
    const std::size_t w = x.sets[k].size();
    out += "x" + std::to_string(k + 1) + "=" + mask_text(x_mask[k], w) + ",t" + std::to_string(k + 1) + "=" +
           mask_text(t_mask[k], w);
  }
  return out;
}

Scalar scalar_product(const MonodromySource& source, const BetheParams& x, const BetheParams& t) {
  if (!same_cardinalities(x, t)) return Scalar(0);
  const Scalar c = source.c();
  const auto left = evaluate(dual_polynomial(bethe_polynomial(x, c)), source);
  const auto right = evaluate(bethe_polynomial(t, c), source);
  return dot(left, right);
}

std::vector<Partition> enumerate_partitions(const BetheParams& x, const BetheParams& t) {
  if (!same_cardinalities(x, t)) throw ShapeError("enumerate_partitions: cardinalities differ");
  std::vector<Partition> out{Partition{}};
  for (std::size_t k = 0; k < x.sets.size(); ++k) {
    const std::size_t a = x.sets[k].size();
    std::vector<Partition> next;
    for (const auto& p : out)
      for (std::uint32_t mx = 0; mx < (1U << a); ++mx)
        for (std::uint32_t mt = 0; mt < (1U << a); ++mt) {
          if (std::popcount(mx) != std::popcount(mt)) continue;
          Partition q = p;
          q.x_mask.push_back(mx);
          q.t_mask.push_back(mt);
          next.push_back(std::move(q));
        }
    out = std::move(next);
  }
  return out;
}

Scalar alpha_moment(const MonodromySource& source, const BetheParams& x, const BetheParams& t, const Partition& p) {
  Scalar m = 1;
  for (std::size_t k = 0; k < x.sets.size(); ++k) {
    const int color = static_cast<int>(k) + 1;
    for (const auto& v : pick(x.sets[k], p.x_mask[k], true)) m *= source.alpha(color, v);
    for (const auto& v : pick(t.sets[k], p.t_mask[k], false)) m *= source.alpha(color, v);
  }
  return m;
}

Partition mu_partition(const Partition& p, int n) {
  Partition q;
  for (int k = 1; k <= n - 1; ++k) {
    q.x_mask.push_back(p.x_mask[static_cast<std::size_t>(n - k - 1)]);
    q.t_mask.push_back(p.t_mask[static_cast<std::size_t>(n - k - 1)]);
  }
  return q;
}

const Scalar& WTable::at(const Partition& p) const {
  for (std::size_t k = 0; k < partitions.size(); ++k)
    if (partitions[k] == p) return values[k];
  throw IndexError("WTable: partition " + p.descriptor(x) + " not present");
}

std::string WTable::to_json() const {
  nlohmann::ordered_json j;
  j["x"] = x.to_string();
  j["t"] = t.to_string();
  j["ensemble_size"] = ensemble_size;
  j["held_out"] = held_out;
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < partitions.size(); ++k) w[partitions[k].descriptor(x)] = rttkit::to_string(values[k]);
  j["coefficients"] = w;
  return j.dump(2);
}

WTable extract_w_table(const BetheParams& x, const BetheParams& t, const Scalar& c, const SourceGenerator& next,
                       std::size_t held_out, std::size_t max_members) {
  WTable table;
  table.x = x;
  table.t = t;
  table.partitions = enumerate_partitions(x, t);
  const std::size_t np = table.partitions.size();
  if (max_members == 0) max_members = 4 * np + 40;
  RowEchelon echelon(np);
  DenseMatrix fit_rows;
  std::vector<Scalar> fit_rhs;
  DenseMatrix check_rows;
  std::vector<Scalar> check_rhs;
  std::size_t drawn = 0;
  while (fit_rows.size() < np || check_rows.size() < held_out) {
    if (drawn >= max_members)
      throw SingularError("extract_w_table: moment matrix reached rank " + std::to_string(echelon.rank()) + " of " +
                          std::to_string(np) + " after " + std::to_string(drawn) + " realizations");
    ++drawn;
    std::vector<Scalar> row(np);
    Scalar s;
    try {
      auto source = next();
      if (source->c() != c) throw DomainError("extract_w_table: ensemble member has a different c");
      for (std::size_t p = 0; p < np; ++p) row[p] = alpha_moment(*source, x, t, table.partitions[p]);
      s = scalar_product(*source, x, t);
    } catch (const PoleError&) {
      continue;
    } catch (const GenericityError&) {
      continue;
    }
    if (fit_rows.size() < np && echelon.try_add(row)) {
      fit_rows.push_back(std::move(row));
      fit_rhs.push_back(std::move(s));
    } else {
      check_rows.push_back(std::move(row));
      check_rhs.push_back(std::move(s));
    }
  }
  table.values = solve(fit_rows, fit_rhs);
  for (std::size_t r = 0; r < check_rows.size(); ++r) {
    Scalar recon = 0;
    for (std::size_t p = 0; p < np; ++p) recon += table.values[p] * check_rows[r][p];
    if (recon != check_rhs[r])
      throw InconsistencyError("extract_w_table: held-out realization " + std::to_string(r) +
                               " is not reproduced by the sum formula (" + to_string(recon) + " vs " +
                               to_string(check_rhs[r]) + ")");
  }
  table.ensemble_size = fit_rows.size() + check_rows.size();
  table.held_out = check_rows.size();
  return table;
}

SourceGenerator chain_ensemble(int n, const Scalar& c, std::vector<Scalar> points, Sampler sampler) {
  auto state = std::make_shared<Sampler>(std::move(sampler));
  return [n, c, points = std::move(points), state]() -> std::shared_ptr<const MonodromySource> {
    std::vector<SiteKind> kinds;
    if (n == 2) {
      kinds.assign(static_cast<std::size_t>(state->uniform(2, 3)), SiteKind::Fundamental);
    } else {
      kinds = {SiteKind::Fundamental, SiteKind::Fundamental, SiteKind::Conjugate, SiteKind::Conjugate};
    }
    auto z = state->generic_set(kinds.size(), points, c, 2 * n + 2);
    std::vector<Scalar> twist;
    for (int i = 0; i < n; ++i) twist.push_back(state->nonzero());
    return std::make_shared<ChainRealization>(n, c, std::move(z), std::move(twist), std::move(kinds));
  };
}

Scalar highest_coefficient(const WTable& table) {
  Partition top;
  for (const auto& s : table.x.sets) top.x_mask.push_back(static_cast<std::uint32_t>((1U << s.size()) - 1));
  top.t_mask = top.x_mask;
  return table.at(top);
}

CheckList verify_ww1(const WTable& table, const WTable& mu_table, const Scalar& c, bool drop_f) {
  CheckList out;
  const int n = table.x.n;
  const Scalar fp = drop_f ? Scalar(1) : pair_f_product(table.x, table.t, c);
  for (std::size_t k = 0; k < table.partitions.size(); ++k) {
    const auto& p = table.partitions[k];
    const Scalar lhs = table.values[k] * fp;
    const Scalar rhs = mu_table.at(mu_partition(p, n));
    out.add("WW1", p.descriptor(table.x), lhs == rhs,
            lhs == rhs ? std::string() : "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
  }
  return out;
}

CheckList verify_zz1(const WTable& table, const WTable& mu_table, const Scalar& c, bool drop_f) {
  CheckList out;
  const Scalar fp = drop_f ? Scalar(1) : pair_f_product(table.x, table.t, c);
  const Scalar lhs = highest_coefficient(mu_table);
  const Scalar rhs = highest_coefficient(table) * fp;
  out.add("ZZ1", table.x.to_string() + "|" + table.t.to_string(), lhs == rhs,
          lhs == rhs ? std::string() : "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
  return out;
}

CheckList verify_product_identity(const HattedSource& hatted, const BetheParams& x, const BetheParams& t) {
  CheckList out;
  const Scalar c = hatted.c();
  const Scalar lhs = scalar_product(hatted, x, t) * pair_f_product(x, t, c);
  const Scalar rhs = scalar_product(hatted.base(), mu_map(x, c), mu_map(t, c));
  out.add("sumforsh2", x.to_string() + "|" + t.to_string(), lhs == rhs,
          lhs == rhs ? std::string() : "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
  return out;
}

CheckList verify_reconstruction(const WTable& table, const std::vector<std::shared_ptr<const MonodromySource>>& sources) {
  CheckList out;
  for (std::size_t r = 0; r < sources.size(); ++r) {
    Scalar recon = 0;
    for (std::size_t p = 0; p < table.partitions.size(); ++p)
      recon += table.values[p] * alpha_moment(*sources[r], table.x, table.t, table.partitions[p]);
    const Scalar s = scalar_product(*sources[r], table.x, table.t);
    out.add("sumfor", sources[r]->describe(), recon == s,
            recon == s ? std::string() : "sum=" + to_string(recon) + " direct=" + to_string(s));
  }
  return out;
}

}  // namespace rttkit
