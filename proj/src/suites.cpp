#include "rttkit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <thread>

#include "json.hpp"

#include "rttkit/bethe.hpp"
#include "rttkit/chain.hpp"
#include "rttkit/errors.hpp"
#include "rttkit/gauss.hpp"
#include "rttkit/qdet.hpp"
#include "rttkit/rmatrix.hpp"
#include "rttkit/rtt.hpp"
#include "rttkit/sampling.hpp"
#include "rttkit/scalar_product.hpp"

namespace rttkit {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kMaxResample = 8;

struct Outcome {
  bool passed = false;
  std::size_t checks = 0;
  std::string failed_anchor;
  std::string detail;
  bool skipped = false;
};

Outcome from_checks(const CheckList& list) {
  Outcome o;
  o.passed = list.passed();
  o.checks = list.size();
  if (const Check* f = list.first_failure()) {
    o.failed_anchor = f->anchor;
    o.detail = f->label + (f->detail.empty() ? "" : ": " + f->detail);
  }
  return o;
}

struct CaseSpec {
  std::string suite;
  std::string key;
  std::string anchor;
  bool negative_control = false;
  Sampler sampler{0};
  std::function<Outcome(Sampler&, json&)> body;
};

json points_json(const std::vector<Scalar>& points) {
  json a = json::array();
  for (const auto& p : points) a.push_back(to_string(p));
  return a;
}

json params_json(const BetheParams& params) {
  json a = json::array();
  for (const auto& s : params.sets) a.push_back(points_json(s));
  return a;
}

int depth_for(int n) { return 2 * n + 2; }

std::vector<Scalar> joined(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Inhomogeneous chain with random site kinds (roughly one in three conjugate).
std::shared_ptr<const ChainRealization> random_chain(Sampler& s, int n, int l, const Scalar& c, bool twisted,
                                                     const std::vector<Scalar>& avoid = {}) {
  const auto z = s.generic_set(static_cast<std::size_t>(l), avoid, c, depth_for(n));
  std::vector<Scalar> twist;
  if (twisted)
    for (int i = 0; i < n; ++i) twist.push_back(s.nonzero());
  std::vector<SiteKind> kinds;
  for (int a = 0; a < l; ++a) kinds.push_back(s.uniform(0, 2) == 0 ? SiteKind::Conjugate : SiteKind::Fundamental);
  return std::make_shared<ChainRealization>(n, c, z, twist, kinds);
}

/// Retries `fn` with fresh draws while it hits a non-invertible operator.
Outcome with_resample(json& params, const std::function<Outcome()>& fn) {
  for (int attempt = 0;; ++attempt) {
    try {
      return fn();
    } catch (const SingularError& e) {
      if (attempt + 1 >= kMaxResample) throw;
      params["resampled"] = attempt + 1;
    }
  }
}

std::string nl_key(const std::string& suite, int n, int l) {
  return suite + "/N=" + std::to_string(n) + "/L=" + std::to_string(l);
}

std::string cards_key(const std::vector<std::size_t>& cards) {
  std::string out = "a=";
  for (std::size_t s = 0; s < cards.size(); ++s) out += (s ? "," : "") + std::to_string(cards[s]);
  return out;
}

/// Cardinality grid: a ∈ {1..cap} for N = 2, all (a_1, a_2) ≤ (cap, cap) except (0,0) for N = 3.
std::vector<std::vector<std::size_t>> cardinality_grid(int n, int cap_n2, int cap_set) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 2) {
    for (int a = 1; a <= cap_n2; ++a) out.push_back({static_cast<std::size_t>(a)});
  } else if (n == 3) {
    for (int a2 = 0; a2 <= cap_set; ++a2)
      for (int a1 = 0; a1 <= cap_set; ++a1)
        if (a1 + a2 > 0) out.push_back({static_cast<std::size_t>(a1), static_cast<std::size_t>(a2)});
  }
  return out;
}

BetheParams draw_params(Sampler& s, int n, const std::vector<std::size_t>& cards, const std::vector<Scalar>& avoid,
                        const Scalar& c) {
  std::size_t total = 0;
  for (auto a : cards) total += a;
  const auto pts = s.generic_set(total, avoid, c, depth_for(n));
  std::vector<std::vector<Scalar>> sets;
  std::size_t at = 0;
  for (auto a : cards) {
    sets.emplace_back(pts.begin() + static_cast<std::ptrdiff_t>(at), pts.begin() + static_cast<std::ptrdiff_t>(at + a));
    at += a;
  }
  BetheParams p(n, std::move(sets));
  p.validate(c);
  return p;
}

// ---------------------------------------------------------------- rtt

enum class RttKind { Chain, Twisted, Hat };

void add_rtt_suite(const RunConfig& cfg, Sampler& master, std::vector<CaseSpec>& out) {
  const Scalar c = cfg.c;
  const bool mutate = cfg.mutate == "rrt2";
  for (int n : cfg.n) {
    out.push_back({"rtt", "rtt/N=" + std::to_string(n) + "/R-matrix", "Rmat", false, master.fork(),
                   [n, c](Sampler& s, json& p) {
                     Outcome o{true, 0, "", ""};
                     json triples = json::array();
                     for (int k = 0; k < 5; ++k) {
                       const auto pts = s.generic_set(3, {}, c, 1);
                       triples.push_back(points_json(pts));
                       ++o.checks;
                       if (!yang_baxter_holds(n, pts[0], pts[1], pts[2], c))
                         return Outcome{false, o.checks, "Rmat", "Yang-Baxter fails at " + to_string(pts)};
                     }
                     p["points"] = triples;
                     return o;
                   }});
    for (int l : cfg.l) {
      const std::pair<RttKind, const char*> kinds[] = {
          {RttKind::Chain, "chain"}, {RttKind::Twisted, "twisted"}, {RttKind::Hat, "hat"}};
      for (const auto& [kind, name] : kinds) {
        const int pairs = cfg.rtt_pairs;
        out.push_back({"rtt", nl_key("rtt", n, l) + "/" + name, "rrt2", false, master.fork(),
                       [=](Sampler& s, json& p) {
                         std::shared_ptr<const MonodromySource> src = random_chain(s, n, l, c, kind != RttKind::Chain);
                         if (kind == RttKind::Hat) src = hatted_source(src);
                         if (mutate) src = std::make_shared<CorruptedSource>(src, 1, 2, Scalar(2));
                         p["source"] = src->describe();
                         const auto sing = src->singular_points();
                         json drawn = json::array();
                         std::size_t tuples = 0;
                         for (int k = 0; k < pairs; ++k) {
                           const Scalar u = s.generic(sing, c, depth_for(n));
                           const Scalar v = s.generic(joined(sing, {u}), c, depth_for(n));
                           drawn.push_back(points_json({u, v}));
                           const auto r = rtt_residual(*src, u, v);
                           tuples += r.tuples_checked;
                           if (!r.passed) {
                             p["points"] = drawn;
                             return Outcome{false, static_cast<std::size_t>(k + 1), "rrt2",
                                            "u=" + to_string(u) + ", v=" + to_string(v) + ": " + r.detail};
                           }
                         }
                         p["points"] = drawn;
                         return Outcome{true, static_cast<std::size_t>(pairs), "",
                                        std::to_string(tuples) + " index tuples"};
                       }});
      }
      out.push_back({"rtt", nl_key("rtt", n, l) + "/transfer", "rtt", false, master.fork(),
                     [=](Sampler& s, json& p) {
                       auto src = random_chain(s, n, l, c, true);
                       p["source"] = src->describe();
                       const auto sing = src->singular_points();
                       const Scalar u = s.generic(sing, c, depth_for(n));
                       const Scalar v = s.generic(joined(sing, {u}), c, depth_for(n));
                       p["points"] = points_json({u, v});
                       const bool ok = commutator(transfer_matrix(*src, u), transfer_matrix(*src, v)).is_zero();
                       return Outcome{ok, 1, ok ? "" : "rtt", ok ? "" : "[t(u), t(v)] != 0"};
                     }});
      out.push_back({"rtt", nl_key("rtt", n, l) + "/corrupted-T12", "rrt2", true, master.fork(),
                     [=](Sampler& s, json& p) {
                       auto src = std::make_shared<CorruptedSource>(random_chain(s, n, l, c, false), 1, 2, Scalar(2));
                       p["source"] = src->describe();
                       const auto sing = src->singular_points();
                       const Scalar u = s.generic(sing, c, depth_for(n));
                       const Scalar v = s.generic(joined(sing, {u}), c, depth_for(n));
                       p["points"] = points_json({u, v});
                       const auto r = rtt_residual(*src, u, v);
                       return Outcome{r.passed, 1, r.passed ? "" : "rrt2", r.detail};
                     }});
    }
  }
}

// ---------------------------------------------------------------- qdet

void add_qdet_suite(const RunConfig& cfg, Sampler& master, std::vector<CaseSpec>& out) {
  const Scalar c = cfg.c;
  const bool mutate = cfg.mutate == "inver";
  for (int n : cfg.n) {
    for (int l : cfg.l) {
      auto make_base = [=](Sampler& s, bool twisted) -> std::shared_ptr<const MonodromySource> {
        std::shared_ptr<const MonodromySource> base = random_chain(s, n, l, c, twisted);
        if (mutate) base = std::make_shared<CorruptedSource>(base, 1, 2, Scalar(2));
        return base;
      };
      const int qpoints = cfg.qdet_points;
      const int hpoints = cfg.hat_points;

      out.push_back({"qdet", nl_key("qdet", n, l) + "/inverse", "inver", false, master.fork(),
                     [=](Sampler& s, json& p) {
                       auto hat = hatted_source(make_base(s, true));
                       p["source"] = hat->base().describe();
                       json drawn = json::array();
                       const auto sing = hat->singular_points();
                       for (int k = 0; k < qpoints; ++k) {
                         Outcome o = with_resample(p, [&]() {
                           const Scalar u = s.generic(sing, c, depth_for(n));
                           const auto t = hat->base().matrix(u);
                           const auto tt = hat->tilde(u);
                           drawn.push_back(to_string(u));
                           if (!is_identity(matrix_product(*tt, *t)))
                             return Outcome{false, 0, "inver", "T~(u)T(u) != I at u=" + to_string(u)};
                           if (!is_identity(matrix_product(*t, *tt)))
                             return Outcome{false, 0, "inver", "T(u)T~(u) != I at u=" + to_string(u)};
                           return Outcome{true, 0, "", ""};
                         });
                         if (!o.passed) {
                           p["points"] = drawn;
                           o.checks = static_cast<std::size_t>(2 * k + 2);
                           return o;
                         }
                       }
                       p["points"] = drawn;
                       return Outcome{true, static_cast<std::size_t>(2 * qpoints), "", ""};
                     }});

      out.push_back({"qdet", nl_key("qdet", n, l) + "/center", "qminor", false, master.fork(),
                     [=](Sampler& s, json& p) {
                       auto base = make_base(s, true);
                       p["source"] = base->describe();
                       const auto sing = base->singular_points();
                       json drawn = json::array();
                       std::size_t checks = 0;
                       for (int k = 0; k < qpoints; ++k) {
                         const Scalar u = s.generic(sing, c, depth_for(n));
                         const Scalar v = s.generic(joined(sing, {u}), c, depth_for(n));
                         drawn.push_back(points_json({u, v}));
                         const auto q = qdet(*base, u);
                         const auto tv = base->matrix(v);
                         for (int i = 1; i <= n; ++i)
                           for (int j = 1; j <= n; ++j) {
                             ++checks;
                             if (!commutator(q, tv->at(i, j)).is_zero()) {
                               p["points"] = drawn;
                               return Outcome{false, checks, "qminor",
                                              "[qdet(u), T_" + std::to_string(i) + std::to_string(j) +
                                                  "(v)] != 0 at u=" + to_string(u) + ", v=" + to_string(v)};
                             }
                           }
                       }
                       p["points"] = drawn;
                       return Outcome{true, checks, "", ""};
                     }});

      out.push_back({"qdet", nl_key("qdet", n, l) + "/vacuum", "qminor", false, master.fork(),
                     [=](Sampler& s, json& p) {
                       auto base = make_base(s, false);
                       p["source"] = base->describe();
                       const auto sing = base->singular_points();
                       json drawn = json::array();
                       for (int k = 0; k < qpoints; ++k) {
                         const Scalar u = s.generic(sing, c, depth_for(n));
                         drawn.push_back(to_string(u));
                         Scalar expected = 1;
                         for (int i = 1; i <= n; ++i) expected *= base->lambda(i, u - (i - 1) * c);
                         const auto vac = base->vacuum();
                         if (!(qdet(*base, u).apply(vac) == expected * vac)) {
                           p["points"] = drawn;
                           return Outcome{false, static_cast<std::size_t>(k + 1), "qminor",
                                          "qdet(u)|0> != " + to_string(expected) + "|0> at u=" + to_string(u)};
                         }
                       }
                       p["points"] = drawn;
                       return Outcome{true, static_cast<std::size_t>(qpoints), "", ""};
                     }});

      out.push_back({"qdet", nl_key("qdet", n, l) + "/hat-vacuum", "Hlam", false, master.fork(),
                     [=](Sampler& s, json& p) {
                       auto hat = hatted_source(make_base(s, true));
                       p["source"] = hat->base().describe();
                       const auto sing = hat->singular_points();
                       const auto vac = hat->vacuum();
                       json drawn = json::array();
                       std::size_t checks = 0;
                       for (int k = 0; k < hpoints; ++k) {
                         Outcome o = with_resample(p, [&]() {
                           const Scalar u = s.generic(sing, c, depth_for(n));
                           const auto m = hat->matrix(u);
                           drawn.push_back(to_string(u));
                           for (int i = 1; i <= n; ++i)
                             for (int j = 1; j <= n; ++j) {
                               if (i < j) continue;
                               ++checks;
                               const auto image = m->at(i, j).apply(vac);
                               if (i > j && !image.is_zero())
                                 return Outcome{false, checks, "HTvac",
                                                "T^_" + std::to_string(i) + std::to_string(j) + "(u)|0> != 0 at u=" +
                                                    to_string(u)};
                               if (i == j && !(image == hat->lambda(i, u) * vac))
                                 return Outcome{false, checks, "Hlam",
                                                "T^_" + std::to_string(i) + std::to_string(i) +
                                                    "(u)|0> != lambda^_i(u)|0> at u=" + to_string(u)};
                             }
                           return Outcome{true, checks, "", ""};
                         });
                         if (!o.passed) {
                           p["points"] = drawn;
                           return o;
                         }
                       }
                       p["points"] = drawn;
                       return Outcome{true, checks, "", ""};
                     }});

      out.push_back({"qdet", nl_key("qdet", n, l) + "/hat-alpha", "hal", false, master.fork(),
                     [=](Sampler& s, json& p) {
                       auto hat = hatted_source(make_base(s, true));
                       const auto& base = hat->base();
                       p["source"] = base.describe();
                       const auto sing = hat->singular_points();
                       const auto vac = hat->vacuum();
                       json drawn = json::array();
                       std::size_t checks = 0;
                       for (int k = 0; k < hpoints; ++k) {
                         Outcome o = with_resample(p, [&]() {
                           const Scalar u = s.generic(sing, c, depth_for(n));
                           const auto m = hat->matrix(u);
                           drawn.push_back(to_string(u));
                           std::vector<Scalar> eig;
                           for (int i = 1; i <= n; ++i) eig.push_back(m->at(i, i).apply(vac).at(0));
                           for (int i = 1; i < n; ++i) {
                             ++checks;
                             const Scalar direct = eig[static_cast<std::size_t>(i - 1)] / eig[static_cast<std::size_t>(i)];
                             const Scalar shifted = base.alpha(n - i, u - (n - i) * c);
                             if (direct != shifted)
                               return Outcome{false, checks, "hal",
                                              "alpha^_" + std::to_string(i) + "(u) = " + to_string(direct) + " vs " +
                                                  to_string(shifted) + " at u=" + to_string(u)};
                           }
                           return Outcome{true, checks, "", ""};
                         });
                         if (!o.passed) {
                           p["points"] = drawn;
                           return o;
                         }
                       }
                       p["points"] = drawn;
                       return Outcome{true, checks, "", ""};
                     }});
    }
  }
}

// ---------------------------------------------------------------- gauss

void add_gauss_suite(const RunConfig& cfg, Sampler& master, std::vector<CaseSpec>& out) {
  const Scalar c = cfg.c;
  const bool swap = cfg.mutate == "zm-comF";
  for (int n : cfg.n) {
    for (int l : cfg.l) {
      if (l > cfg.gauss_max_l) continue;
      for (bool twisted : {false, true}) {
        const std::string tag = twisted ? "/twisted" : "/chain";
        const int points = cfg.gauss_points;
        // One case per relation family; each runs at `points` random points.
        auto add = [&](const std::string& name, const std::string& anchor,
                       std::function<CheckList(const std::shared_ptr<HattedSource>&, const Scalar&, const Scalar&)> fn) {
          out.push_back({"gauss", nl_key("gauss", n, l) + tag + "/" + name, anchor, false, master.fork(),
                         [=](Sampler& s, json& p) {
                           auto hat = hatted_source(random_chain(s, n, l, c, twisted));
                           p["source"] = hat->base().describe();
                           const auto sing = hat->singular_points();
                           json drawn = json::array();
                           CheckList all;
                           for (int k = 0; k < points; ++k) {
                             Outcome o = with_resample(p, [&]() {
                               const Scalar u = s.generic(sing, c, depth_for(n));
                               const Scalar v = s.generic(joined(sing, {u}), c, depth_for(n));
                               auto list = fn(hat, u, v);
                               drawn.push_back(points_json({u, v}));
                               all.append(list);
                               return from_checks(list);
                             });
                             if (!o.passed) break;
                           }
                           p["points"] = drawn;
                           return from_checks(all);
                         }});
        };
        add("frame", "Gmat", [](const std::shared_ptr<HattedSource>& h, const Scalar& u, const Scalar&) {
          return verify_gauss_frame(h->base(), u);
        });
        add("exchange", "ap3", [](const std::shared_ptr<HattedSource>& h, const Scalar& u, const Scalar& v) {
          return verify_gauss_exchange_relations(h->base(), u, v);
        });
        if (!twisted)
          add("multiple-commutators", "zm-comF",
              [swap](const std::shared_ptr<HattedSource>& h, const Scalar& u, const Scalar&) {
                return verify_multiple_commutators(h->base(), u, swap);
              });
        add("hat-frame", "OrTh", [](const std::shared_ptr<HattedSource>& h, const Scalar& u, const Scalar&) {
          return verify_hat_gauss(*h, u);
        });
        add("induction", "b7", [](const std::shared_ptr<HattedSource>& h, const Scalar& u, const Scalar&) {
          return verify_induction_relations(*h, u);
        });
      }
      if (n >= 3)
        out.push_back({"gauss", nl_key("gauss", n, l) + "/swapped-commutators", "zm-comF", true, master.fork(),
                       [=](Sampler& s, json& p) {
                         auto base = random_chain(s, n, l, c, false);
                         p["source"] = base->describe();
                         return with_resample(p, [&]() {
                           const Scalar u = s.generic(base->singular_points(), c, depth_for(n));
                           p["points"] = points_json({u});
                           return from_checks(verify_multiple_commutators(*base, u, true));
                         });
                       }});
    }
  }
}

// ---------------------------------------------------------------- theorem1

void add_theorem1_suite(const RunConfig& cfg, Sampler& master, std::vector<CaseSpec>& out) {
  const Scalar c = cfg.c;
  const bool drop_sign = cfg.mutate == "mid";
  for (int n : cfg.n) {
    for (int l : cfg.l) {
      for (const auto& cards : cardinality_grid(n, cfg.theorem1_max_n2, cfg.theorem1_max_set)) {
        const std::string key = nl_key("theorem1", n, l) + "/" + cards_key(cards);
        // Shared draw so the identity cases and the controls see the same data.
        struct Draw {
          std::shared_ptr<HattedSource> hat;
          BetheParams params;
        };
        auto draw = [=](Sampler& s, json& p) {
          auto hat = hatted_source(random_chain(s, n, l, c, true));
          auto params = draw_params(s, n, cards, hat->singular_points(), c);
          p["source"] = hat->base().describe();
          p["t"] = params_json(params);
          return Draw{hat, params};
        };
        auto identity = [=](bool dual) {
          return [=](Sampler& s, json& p) {
            return with_resample(p, [&]() {
              const auto d = draw(s, p);
              Theorem1Options opt;
              opt.dual = dual;
              opt.drop_sign = drop_sign;
              const auto r = verify_theorem1(*d.hat, d.params, opt);
              p["nonzero"] = !r.lhs.is_zero();
              return Outcome{r.passed, 1, r.passed ? "" : (dual ? "midC" : "mid"), r.detail};
            });
          };
        };
        out.push_back({"theorem1", key + "/B", "mid", false, master.fork(), identity(false)});
        out.push_back({"theorem1", key + "/C", "midC", false, master.fork(), identity(true)});
        out.push_back({"theorem1", key + "/main-term", "mtb", false, master.fork(), [=](Sampler& s, json& p) {
                         return with_resample(p, [&]() {
                           const auto d = draw(s, p);
                           return from_checks(main_term_check(bethe_polynomial(d.params, c), d.params, d.hat->base()));
                         });
                       }});

        std::size_t total = 0;
        for (auto a : cards) total += a;
        // Controls are only meaningful where they change the right-hand side:
        // an odd #t for the sign, a nontrivial f-product for the f-factor.
        // Draws with a zero vector are redrawn.
        auto control = [=](bool sign) {
          return [=](Sampler& s, json& p) {
            for (int attempt = 0; attempt < kMaxResample; ++attempt) {
              Outcome o = with_resample(p, [&]() {
                const auto d = draw(s, p);
                Theorem1Options opt;
                opt.drop_sign = sign;
                opt.drop_f = !sign;
                const auto r = verify_theorem1(*d.hat, d.params, opt);
                if (r.lhs.is_zero()) return Outcome{true, 0, "", "zero vector"};
                return Outcome{r.passed, 1, r.passed ? "" : "mid", r.detail};
              });
              if (o.checks > 0) return o;
              p["redrawn"] = attempt + 1;
            }
            Outcome skip;
            skip.skipped = true;
            skip.detail = "B(t) vanishes on this chain for every draw";
            return skip;
          };
        };
        if (total % 2 == 1) out.push_back({"theorem1", key + "/drop-sign", "mid", true, master.fork(), control(true)});
        if (n == 3 && cards[0] > 0 && cards[1] > 0)
          out.push_back({"theorem1", key + "/drop-f", "mid", true, master.fork(), control(false)});
      }
    }
  }
}

// ---------------------------------------------------------------- scalar

bool same_table(const WTable& a, const WTable& b, std::string& detail) {
  if (a.partitions != b.partitions) {
    detail = "partition lists differ";
    return false;
  }
  for (std::size_t k = 0; k < a.values.size(); ++k)
    if (a.values[k] != b.values[k]) {
      detail = a.partitions[k].descriptor(a.x) + ": " + to_string(a.values[k]) + " vs " + to_string(b.values[k]);
      return false;
    }
  return true;
}

BetheParams shifted(const BetheParams& p, const Scalar& h) {
  auto sets = p.sets;
  for (auto& s : sets)
    for (auto& x : s) x += h;
  return BetheParams(p.n, sets);
}

void add_scalar_suite(const RunConfig& cfg, Sampler& master, std::vector<CaseSpec>& out) {
  const Scalar c = cfg.c;
  const bool drop_f = cfg.mutate == "WW1";
  const std::size_t held_out = static_cast<std::size_t>(cfg.held_out);
  for (int n : cfg.n) {
    for (const auto& cards : cardinality_grid(n, cfg.scalar_max_n2, cfg.scalar_max_set)) {
      const std::string key = "scalar/N=" + std::to_string(n) + "/" + cards_key(cards);
      const bool f_nontrivial = n == 3 && cards[0] > 0 && cards[1] > 0;
      for (bool control : {false, true}) {
        if (control && !f_nontrivial) continue;
        out.push_back(
            {"scalar", key + (control ? "/drop-f" : ""), "WW1", control, master.fork(), [=](Sampler& s, json& p) {
               const auto x = draw_params(s, n, cards, {}, c);
               const auto t = draw_params(s, n, cards, x.all_points(), c);
               const auto mx = mu_map(x, c);
               const auto mt = mu_map(t, c);
               p["x"] = params_json(x);
               p["t"] = params_json(t);
               auto avoid = joined(joined(x.all_points(), t.all_points()), joined(mx.all_points(), mt.all_points()));

               const auto table = extract_w_table(x, t, c, chain_ensemble(n, c, avoid, s.fork()), held_out);
               const auto mu_table = extract_w_table(mx, mt, c, chain_ensemble(n, c, avoid, s.fork()), held_out);
               p["partitions"] = table.partitions.size();
               p["ensemble"] = table.ensemble_size;
               p["held_out"] = table.held_out;
               if (control) return from_checks(verify_ww1(table, mu_table, c, true));

               CheckList checks;
               checks.add("sumfor", "held-out realizations", true, std::to_string(table.held_out) + " reproduced");
               auto next = chain_ensemble(n, c, avoid, s.fork());
               checks.append(verify_reconstruction(table, {next(), next()}));

               std::string detail;
               const auto again = extract_w_table(x, t, c, chain_ensemble(n, c, avoid, s.fork()), held_out);
               checks.add("sumfor", "second ensemble", same_table(table, again, detail), detail);

               const Scalar h = s.nonzero();
               const auto sx = shifted(x, h);
               const auto st = shifted(t, h);
               auto moved = extract_w_table(sx, st, c,
                                            chain_ensemble(n, c, joined(sx.all_points(), st.all_points()), s.fork()),
                                            held_out);
               moved.x = x;
               moved.t = t;
               detail.clear();
               checks.add("sumfor", "translation by " + to_string(h), same_table(table, moved, detail), detail);

               checks.append(verify_ww1(table, mu_table, c, drop_f));
               checks.append(verify_zz1(table, mu_table, c, drop_f));
               auto one = chain_ensemble(n, c, avoid, s.fork())();
               checks.append(verify_product_identity(*hatted_source(one), x, t));
               p["w"] = json::parse(table.to_json());
               return from_checks(checks);
             }});
      }
    }
  }
}

// ---------------------------------------------------------------- runner

CaseResult execute(const CaseSpec& spec) {
  CaseResult r;
  r.key = spec.key;
  r.anchor = spec.anchor;
  r.negative_control = spec.negative_control;
  json params = json::object();
  Sampler sampler = spec.sampler;
  const auto start = Clock::now();
  try {
    const Outcome o = spec.body(sampler, params);
    r.checks = o.checks;
    if (o.skipped) {
      r.passed = true;
      r.skipped = true;
      r.detail = o.detail;
    } else if (spec.negative_control) {
      r.passed = !o.passed;
      r.detail = o.passed ? "corruption went undetected" : "detected: [" + o.failed_anchor + "] " + o.detail;
    } else {
      r.passed = o.passed;
      if (!o.passed) {
        r.anchor = o.failed_anchor.empty() ? spec.anchor : o.failed_anchor;
        r.detail = o.detail;
      } else {
        r.detail = o.detail;
      }
    }
  } catch (const InconsistencyError& e) {
    r.passed = false;
    r.detail = std::string("inconsistent overdetermined system: ") + e.what();
  } catch (const Error& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  r.params_json = params.dump();
  return r;
}

json config_json(const RunConfig& cfg) {
  json j;
  j["suites"] = cfg.suites;
  j["n"] = cfg.n;
  j["l"] = cfg.l;
  j["c"] = to_string(cfg.c);
  j["seed"] = cfg.seed;
  j["bound"] = cfg.bound;
  j["rtt_pairs"] = cfg.rtt_pairs;
  j["qdet_points"] = cfg.qdet_points;
  j["hat_points"] = cfg.hat_points;
  j["gauss_points"] = cfg.gauss_points;
  j["gauss_max_l"] = cfg.gauss_max_l;
  j["theorem1_max_n2"] = cfg.theorem1_max_n2;
  j["theorem1_max_set"] = cfg.theorem1_max_set;
  j["scalar_max_n2"] = cfg.scalar_max_n2;
  j["scalar_max_set"] = cfg.scalar_max_set;
  j["held_out"] = cfg.held_out;
  j["mutate"] = cfg.mutate.empty() ? json(nullptr) : json(cfg.mutate);
  return j;
}

bool wants(const RunConfig& cfg, const std::string& suite) {
  for (const auto& s : cfg.suites)
    if (s == "all" || s == suite) return true;
  return false;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rtt", "qdet", "gauss", "theorem1", "scalar"};
  return names;
}

const std::vector<std::pair<std::string, std::string>>& mutation_keys() {
  static const std::vector<std::pair<std::string, std::string>> keys{
      {"rrt2", "rtt"}, {"inver", "qdet"}, {"zm-comF", "gauss"}, {"mid", "theorem1"}, {"WW1", "scalar"}};
  return keys;
}

std::string mutation_target(const std::string& key) {
  for (const auto& [k, suite] : mutation_keys())
    if (k == key) return suite;
  throw DomainError("unknown mutation key '" + key + "'");
}

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const SuiteResult* Report::suite(const std::string& name) const {
  for (const auto& s : suites)
    if (s.name == name) return &s;
  return nullptr;
}

std::string Report::to_json(bool include_timing) const {
  json j;
  j["schema"] = "rttkit.verify.report";
  j["version"] = kReportVersion;
  j["config"] = config_json(config);
  j["passed"] = passed();
  json suites_json = json::array();
  for (const auto& s : suites) {
    json sj;
    sj["name"] = s.name;
    sj["passed"] = s.passed();
    std::size_t failed = 0;
    json cases = json::array();
    for (const auto& c : s.cases) {
      json cj;
      cj["key"] = c.key;
      cj["anchor"] = c.anchor;
      cj["passed"] = c.passed;
      if (c.negative_control) cj["negative_control"] = true;
      if (c.skipped) cj["skipped"] = true;
      cj["checks"] = c.checks;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      cj["params"] = json::parse(c.params_json);
      if (include_timing) cj["elapsed_ms"] = c.elapsed_ms;
      if (!c.passed) ++failed;
      cases.push_back(std::move(cj));
    }
    sj["cases_total"] = s.cases.size();
    sj["cases_failed"] = failed;
    if (include_timing) sj["elapsed_ms"] = s.elapsed_ms;
    sj["cases"] = std::move(cases);
    suites_json.push_back(std::move(sj));
  }
  j["suites"] = std::move(suites_json);
  if (include_timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

void validate(const RunConfig& config) {
  for (const auto& s : config.suites)
    if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw DomainError("unknown suite '" + s + "'");
  for (int n : config.n)
    if (n != 2 && n != 3) throw DomainError("N must be 2 or 3, got " + std::to_string(n));
  for (int l : config.l)
    if (l < 1 || l > 6) throw DomainError("L must be in 1..6, got " + std::to_string(l));
  if (config.c == 0) throw DomainError("c must be nonzero");
  if (config.bound < 4) throw DomainError("bound must be at least 4");
  if (config.jobs < 1) throw DomainError("jobs must be positive");
  if (config.held_out < 1) throw DomainError("held_out must be positive");
  if (!config.mutate.empty()) mutation_target(config.mutate);
}

Report run(const RunConfig& config) {
  validate(config);
  const auto start = Clock::now();
  Report report;
  report.config = config;

  // Case specs (and their sampler streams) are laid out sequentially, so the
  // draws do not depend on the worker count or completion order.
  Sampler master(config.seed, config.bound);
  std::vector<CaseSpec> specs;
  using Adder = void (*)(const RunConfig&, Sampler&, std::vector<CaseSpec>&);
  const std::pair<const char*, Adder> adders[] = {{"rtt", add_rtt_suite},
                                                  {"qdet", add_qdet_suite},
                                                  {"gauss", add_gauss_suite},
                                                  {"theorem1", add_theorem1_suite},
                                                  {"scalar", add_scalar_suite}};
  for (const auto& [name, adder] : adders) {
    Sampler suite_sampler = master.fork();
    if (wants(config, name)) {
      report.suites.push_back(SuiteResult{name, {}, 0});
      adder(config, suite_sampler, specs);
    }
  }

  std::vector<CaseResult> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < specs.size(); k = next++) results[k] = execute(specs[k]);
  };
  const int jobs = std::min<int>(config.jobs, static_cast<int>(std::max<std::size_t>(specs.size(), 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < specs.size(); ++k)
    for (auto& s : report.suites)
      if (s.name == specs[k].suite) {
        s.elapsed_ms += results[k].elapsed_ms;
        s.cases.push_back(std::move(results[k]));
      }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

}  // namespace rttkit
