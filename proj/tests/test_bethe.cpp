#include "doctest.h"

#include <memory>

#include "oracle.hpp"
#include "rttkit/bethe.hpp"
#include "rttkit/chain.hpp"
#include "rttkit/errors.hpp"
#include "rttkit/qdet.hpp"

using namespace rttkit;

namespace {

const std::vector<Scalar> kZ{make_scalar(1, 3), make_scalar(7, 5), make_scalar(-2, 9)};
const std::vector<bool> kConj{false, true, false};
const std::vector<Scalar> kKappa3{2, 3, 5};

std::shared_ptr<ChainRealization> chain3() {
  return std::make_shared<ChainRealization>(
      3, 1, kZ, kKappa3, std::vector<SiteKind>{SiteKind::Fundamental, SiteKind::Conjugate, SiteKind::Fundamental});
}

std::vector<Scalar> vec(const StateVector& v) { return oracle::to_vector(v, v.shape().dim); }

}  // namespace

TEST_CASE("Izergin-Korepin small cases") {
  CHECK(izergin_korepin({}, {}, 1) == 1);
  CHECK(izergin_korepin({3}, {1}, 1) == make_scalar(1, 2));
  const Scalar a = izergin_korepin({3, make_scalar(1, 2)}, {1, 7}, 1);
  CHECK(a == izergin_korepin({make_scalar(1, 2), 3}, {7, 1}, 1));
  CHECK_THROWS_AS(izergin_korepin({1}, {}, 1), ShapeError);
}

TEST_CASE("mu map and parameter validation") {
  BetheParams p(3, {{make_scalar(1, 2)}, {4, 9}});
  auto m = mu_map(p, 1);
  CHECK(m.set(1) == std::vector<Scalar>{3, 8});
  CHECK(m.set(2) == std::vector<Scalar>{make_scalar(-3, 2)});
  CHECK(mu_map(BetheParams(2, {{5}}), 2).set(1) == std::vector<Scalar>{3});
  CHECK_THROWS_AS(BetheParams(3, {{1, 1}, {}}).validate(1), GenericityError);
  CHECK_THROWS_AS(BetheParams(3, {{1}, {0}}).validate(1), GenericityError);
  CHECK_THROWS_AS(BetheParams(3, {{1}}), ShapeError);
  CHECK(neighbour_f_product(p, 1) == oracle::f(4, make_scalar(1, 2), 1) * oracle::f(9, make_scalar(1, 2), 1));
}

TEST_CASE("N = 2 vector is the normalized T12 string") {
  const std::vector<Scalar> z{make_scalar(1, 3), make_scalar(7, 5), 2};
  ChainRealization src(2, 1, z);
  const std::vector<Scalar> t{make_scalar(5, 2), make_scalar(-1, 6)};
  const auto b = evaluate(bethe_polynomial(BetheParams(2, {t}), 1), src);
  const auto t0 = oracle::chain(2, 1, z, {}, {}, t[0]);
  const auto t1 = oracle::chain(2, 1, z, {}, {}, t[1]);
  auto want = oracle::column0(t0.at(1, 2) * t1.at(1, 2));
  const Scalar norm = t0.at(2, 2)(0, 0) * t1.at(2, 2)(0, 0);
  for (auto& x : want) x /= norm;
  CHECK(vec(b) == want);
}

TEST_CASE("N = 3, (1,1) matches the trace-formula vector") {
  // [T_12(u)T_23(v) + g(v,u) T_13(u)T_22(v)]|0> / (λ_2(u) λ_3(v) f(v,u))
  auto src = chain3();
  const Scalar u = make_scalar(5, 2), v = make_scalar(-3, 7);
  const auto b = evaluate(bethe_polynomial(BetheParams(3, {{u}, {v}}), 1), *src);
  const auto tu = oracle::chain(3, 1, kZ, kConj, kKappa3, u);
  const auto tv = oracle::chain(3, 1, kZ, kConj, kKappa3, v);
  auto want = oracle::column0(tu.at(1, 2) * tv.at(2, 3) + oracle::g(v, u, 1) * (tu.at(1, 3) * tv.at(2, 2)));
  const Scalar norm = tu.at(2, 2)(0, 0) * tv.at(3, 3)(0, 0) * oracle::f(v, u, 1);
  for (auto& x : want) x /= norm;
  CHECK(vec(b) == want);
}

TEST_CASE("reductions to single-color strings") {
  auto src = chain3();
  const Scalar u = make_scalar(5, 2);
  const auto tu = oracle::chain(3, 1, kZ, kConj, kKappa3, u);
  auto lower = oracle::column0(tu.at(1, 2));
  for (auto& x : lower) x /= tu.at(2, 2)(0, 0);
  CHECK(vec(evaluate(bethe_polynomial(BetheParams(3, {{u}, {}}), 1), *src)) == lower);
  auto upper = oracle::column0(tu.at(2, 3));
  for (auto& x : upper) x /= tu.at(3, 3)(0, 0);
  CHECK(vec(evaluate(bethe_polynomial(BetheParams(3, {{}, {u}}), 1), *src)) == upper);
}

TEST_CASE("color grading and set symmetry") {
  auto src = chain3();
  BetheParams p(3, {{make_scalar(5, 2), make_scalar(-1, 6)}, {make_scalar(-3, 7), make_scalar(8, 5)}});
  const auto poly = bethe_polynomial(p, 1);
  for (const auto& m : poly.monomials) {
    int grade[2] = {0, 0};
    for (const auto& f : m.factors)
      for (int s = f.i; s < f.j; ++s) ++grade[s - 1];
    CHECK(grade[0] == 2);
    CHECK(grade[1] == 2);
  }
  BetheParams q(3, {{make_scalar(-1, 6), make_scalar(5, 2)}, {make_scalar(8, 5), make_scalar(-3, 7)}});
  CHECK(evaluate(poly, *src) == evaluate(bethe_polynomial(q, 1), *src));
  CHECK(serialize(poly) == serialize(bethe_polynomial(q, 1)));
  CHECK(serialize(poly).find("/") != std::string::npos);
  CHECK(main_term_check(poly, p, *src).passed());
}

TEST_CASE("dual vector for N = 2, a = 1 is <0|T21(x)/λ2(x)") {
  const std::vector<Scalar> z{make_scalar(1, 3), make_scalar(7, 5)};
  ChainRealization src(2, 1, z);
  const Scalar x = make_scalar(9, 4);
  const auto c = evaluate(dual_polynomial(bethe_polynomial(BetheParams(2, {{x}}), 1)), src);
  const auto tx = oracle::chain(2, 1, z, {}, {}, x);
  std::vector<Scalar> want(tx.at(2, 1).n);
  for (std::size_t s = 0; s < want.size(); ++s) want[s] = tx.at(2, 1)(0, s) / tx.at(2, 2)(0, 0);
  CHECK(vec(c) == want);
}

TEST_CASE("Theorem 1 on a twisted mixed chain, with controls") {
  auto hat = hatted_source(chain3());
  for (const auto& sets : std::vector<std::vector<std::vector<Scalar>>>{
           {{make_scalar(5, 2)}, {}},
           {{}, {make_scalar(5, 2)}},
           {{make_scalar(5, 2)}, {make_scalar(-3, 7)}},
           {{make_scalar(5, 2), make_scalar(-1, 6)}, {make_scalar(-3, 7)}},
           {{make_scalar(5, 2), make_scalar(-1, 6)}, {make_scalar(-3, 7), make_scalar(8, 5)}}}) {
    BetheParams p(3, sets);
    const auto r = verify_theorem1(*hat, p);
    CHECK(r.passed);
    CHECK(!r.lhs.is_zero());
    Theorem1Options dual;
    dual.dual = true;
    CHECK(verify_theorem1(*hat, p, dual).passed);
    Theorem1Options sign;
    sign.drop_sign = true;
    CHECK(verify_theorem1(*hat, p, sign).passed == (p.total() % 2 == 0));
    Theorem1Options nof;
    nof.drop_f = true;
    CHECK(verify_theorem1(*hat, p, nof).passed == (sets[0].empty() || sets[1].empty()));
  }
  auto hat2 = hatted_source(std::make_shared<ChainRealization>(
      2, 1, std::vector<Scalar>{make_scalar(1, 3), make_scalar(7, 5), 2}, std::vector<Scalar>{3, make_scalar(-1, 2)}));
  for (std::size_t a = 1; a <= 3; ++a) {
    std::vector<Scalar> t;
    for (std::size_t k = 0; k < a; ++k) t.push_back(make_scalar(static_cast<std::int64_t>(11 * k + 5), 3));
    CHECK(verify_theorem1(*hat2, BetheParams(2, {t})).passed);
  }
}
