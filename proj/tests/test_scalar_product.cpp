#include "doctest.h"

#include <memory>

#include "json.hpp"
#include "oracle.hpp"
#include "rttkit/chain.hpp"
#include "rttkit/errors.hpp"
#include "rttkit/scalar_product.hpp"

using namespace rttkit;

namespace {

std::vector<Scalar> everything(const BetheParams& x, const BetheParams& t, const Scalar& c) {
  std::vector<Scalar> out;
  for (const auto* p : {&x, &t}) {
    for (const auto& v : p->all_points()) out.push_back(v);
    for (const auto& v : mu_map(*p, c).all_points()) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("partition counts") {
  BetheParams a(2, {{1, 2}});
  CHECK(enumerate_partitions(a, a).size() == 6);
  BetheParams b(3, {{1, 2}, {3, 4}});
  CHECK(enumerate_partitions(b, b).size() == 36);
  const auto parts = enumerate_partitions(b, b);
  CHECK(parts.front().descriptor(b) == "x1=00,t1=00;x2=00,t2=00");
  CHECK(mu_partition(parts[7], 3).x_mask[0] == parts[7].x_mask[1]);
  CHECK_THROWS_AS(enumerate_partitions(a, BetheParams(2, {{1}})), ShapeError);
}

TEST_CASE("scalar product vanishes for unequal cardinalities") {
  ChainRealization src(2, 1, {0, make_scalar(1, 2)});
  CHECK(scalar_product(src, BetheParams(2, {{3}}), BetheParams(2, {{4, 5}})) == 0);
}

TEST_CASE("N = 2, a = 1: W = g(x,t) on alpha(t) and g(t,x) on alpha(x)") {
  // <0|T21(x)T12(t)|0> / (λ2(x)λ2(t)) = g(x,t)(α(t) - α(x)).
  const Scalar c = 1, x = make_scalar(5, 3), t = make_scalar(-2, 7);
  const BetheParams bx(2, {{x}}), bt(2, {{t}});
  const auto table = extract_w_table(bx, bt, c, chain_ensemble(2, c, everything(bx, bt, c), Sampler(3)));
  for (std::size_t k = 0; k < table.partitions.size(); ++k) {
    const auto& p = table.partitions[k];
    // x_mask = 1 puts x in x̄_I: the moment is α(x); otherwise α(t).
    CHECK(table.values[k] == (p.x_mask[0] ? oracle::g(t, x, c) : oracle::g(x, t, c)));
  }
  CHECK(highest_coefficient(table) == oracle::g(t, x, c));
  ChainRealization src(2, c, {make_scalar(1, 9), 4}, {2, 3});
  CHECK(scalar_product(src, bx, bt) == oracle::g(x, t, c) * (src.alpha(1, t) - src.alpha(1, x)));
}

TEST_CASE("W tables are ensemble independent and satisfy WW1 / ZZ1") {
  const Scalar c = make_scalar(1, 2);
  const BetheParams x(3, {{make_scalar(3, 2)}, {make_scalar(-5, 7)}});
  const BetheParams t(3, {{make_scalar(2, 9)}, {make_scalar(9, 4)}});
  const auto pts = everything(x, t, c);
  const auto w = extract_w_table(x, t, c, chain_ensemble(3, c, pts, Sampler(5)));
  const auto again = extract_w_table(x, t, c, chain_ensemble(3, c, pts, Sampler(99)));
  CHECK(w.values == again.values);
  CHECK(w.held_out == 4);
  CHECK(w.ensemble_size >= w.partitions.size() + 4);
  const auto mu = extract_w_table(mu_map(x, c), mu_map(t, c), c, chain_ensemble(3, c, pts, Sampler(6)));
  CHECK(verify_ww1(w, mu, c).passed());
  CHECK(verify_zz1(w, mu, c).passed());
  CHECK(!verify_ww1(w, mu, c, true).passed());
  auto next = chain_ensemble(3, c, pts, Sampler(7));
  CHECK(verify_reconstruction(w, {next(), next()}).passed());
  auto doc = nlohmann::json::parse(w.to_json());
  CHECK(doc.dump().find("/") != std::string::npos);
}

TEST_CASE("held-out members expose a corrupted ensemble") {
  const Scalar c = 1;
  const BetheParams x(2, {{make_scalar(3, 2)}}), t(2, {{make_scalar(-4, 5)}});
  auto base = chain_ensemble(2, c, everything(x, t, c), Sampler(8));
  int k = 0;
  SourceGenerator bad = [&]() -> std::shared_ptr<const MonodromySource> {
    auto s = base();
    // Only later members are corrupted, so the square fit is clean.
    return ++k > 2 ? std::make_shared<CorruptedSource>(s, 2, 1, Scalar(3)) : s;
  };
  CHECK_THROWS_AS(extract_w_table(x, t, c, bad), InconsistencyError);
}

TEST_CASE("one-realization product identity") {
  const Scalar c = 1;
  auto one = std::make_shared<ChainRealization>(2, c, std::vector<Scalar>{make_scalar(1, 4)});
  CHECK(verify_product_identity(*hatted_source(one), BetheParams(2, {{3}}), BetheParams(2, {{make_scalar(-1, 3)}}))
            .passed());
  auto two = std::make_shared<ChainRealization>(3, c, std::vector<Scalar>{make_scalar(1, 5), make_scalar(-8, 3)},
                                                std::vector<Scalar>{2, 3, 7},
                                                std::vector<SiteKind>{SiteKind::Fundamental, SiteKind::Conjugate});
  const BetheParams x(3, {{make_scalar(3, 2)}, {make_scalar(-5, 7)}});
  const BetheParams t(3, {{make_scalar(2, 9)}, {make_scalar(9, 4)}});
  CHECK(verify_product_identity(*hatted_source(two), x, t).passed());
}
