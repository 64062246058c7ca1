#include "doctest.h"

#include <memory>

#include "oracle.hpp"
#include "rttkit/chain.hpp"
#include "rttkit/errors.hpp"
#include "rttkit/gauss.hpp"

using namespace rttkit;

namespace {

const std::vector<Scalar> kZ{make_scalar(1, 3), make_scalar(7, 5)};

std::shared_ptr<ChainRealization> chain(int n, bool twisted) {
  std::vector<Scalar> kappa;
  if (twisted)
    for (int i = 0; i < n; ++i) kappa.push_back(make_scalar(i + 2, 3));
  return std::make_shared<ChainRealization>(n, 1, kZ, kappa,
                                            std::vector<SiteKind>{SiteKind::Fundamental, SiteKind::Conjugate});
}

oracle::Block dense(int n, bool twisted, const Scalar& u) {
  std::vector<Scalar> kappa;
  if (twisted)
    for (int i = 0; i < n; ++i) kappa.push_back(make_scalar(i + 2, 3));
  return oracle::chain(n, 1, kZ, {false, true}, kappa, u);
}

oracle::Block as_block(const OperatorMatrix& m) {
  oracle::Block b{m.n, {}};
  for (const auto& op : m.data) b.e.push_back(oracle::from_sparse(op));
  return b;
}

bool has_anchor(const CheckList& list, const std::string& anchor) {
  for (const auto& c : list.checks())
    if (c.anchor == anchor) return true;
  return false;
}

}  // namespace

TEST_CASE("N = 2 Gauss coordinates from Schur complements") {
  const Scalar u = make_scalar(11, 3);
  for (bool twisted : {false, true}) {
    const auto t = dense(2, twisted, u);
    const auto inv22 = oracle::inverse(t.at(2, 2));
    const auto frame = gauss_decompose(*chain(2, twisted), u);
    CHECK(oracle::from_sparse(frame.K(2)) == t.at(2, 2));
    CHECK(oracle::from_sparse(frame.F(2, 1)) == t.at(1, 2) * inv22);
    CHECK(oracle::from_sparse(frame.E(1, 2)) == inv22 * t.at(2, 1));
    CHECK(oracle::from_sparse(frame.K(1)) == t.at(1, 1) - t.at(1, 2) * inv22 * t.at(2, 1));
    CHECK(oracle::from_sparse(frame.Kinv(1)) == oracle::inverse(oracle::from_sparse(frame.K(1))));
    // k_1(u)^{-1} F_21(u) = F_21(u - c) k_1(u)^{-1}
    const auto shifted = gauss_decompose(*chain(2, twisted), u - 1);
    CHECK(frame.Kinv(1) * frame.F(2, 1) == shifted.F(2, 1) * frame.Kinv(1));
  }
}

TEST_CASE("N = 3 frame reassembles T and the tilde frame inverts F and E") {
  const Scalar u = make_scalar(-9, 4);
  for (bool twisted : {false, true}) {
    const auto frame = gauss_decompose(*chain(3, twisted), u);
    const auto f = as_block(f_matrix(frame));
    const auto d = as_block(d_matrix(frame));
    const auto e = as_block(e_matrix(frame));
    const auto t = dense(3, twisted, u);
    const auto rebuilt = oracle::block_product(oracle::block_product(f, d), e);
    for (std::size_t k = 0; k < t.e.size(); ++k) CHECK(rebuilt.e[k] == t.e[k]);

    const auto tilde = tilde_coordinates(frame);
    const auto f_inv = oracle::unflatten(oracle::inverse(oracle::flatten(f)), 3);
    const auto e_inv = oracle::unflatten(oracle::inverse(oracle::flatten(e)), 3);
    CHECK(as_block(f_inverse_matrix(tilde)).e == f_inv.e);
    CHECK(as_block(e_inverse_matrix(tilde)).e == e_inv.e);
    CHECK(verify_gauss_frame(*chain(3, twisted), u).passed());
  }
  CHECK_THROWS_AS(gauss_decompose(*chain(3, false), 0).F(1, 2), Error);
}

TEST_CASE("multiple-commutator lemma") {
  const Scalar u = make_scalar(5, 2);
  auto three = verify_multiple_commutators(*chain(3, false), u);
  CHECK(three.passed());
  CHECK(has_anchor(three, "zm-comF"));
  CHECK(has_anchor(three, "zm-comE"));
  CHECK(has_anchor(three, "ap8"));
  auto two = verify_multiple_commutators(*chain(2, false), u);
  CHECK(two.passed());
  auto swapped = verify_multiple_commutators(*chain(3, false), u, true);
  CHECK(!swapped.passed());
  CHECK(swapped.first_failure()->anchor == "zm-comF");
  CHECK_THROWS_AS(gauss_zero_modes(*chain(3, true)), DomainError);
}

TEST_CASE("zero modes of Gauss coordinates") {
  auto src = chain(3, false);
  const auto zm = gauss_zero_modes(*src);
  CHECK(zm.F(3, 1) == src->zero_mode(1, 3));
  CHECK(zm.E(1, 2) == src->zero_mode(2, 1));
  CHECK(zm.k[1] == src->zero_mode(2, 2));
}

TEST_CASE("exchange relations between Gauss coordinates") {
  const Scalar u = make_scalar(5, 2), v = make_scalar(-3, 7);
  for (int n : {2, 3})
    for (bool twisted : {false, true}) {
      auto list = verify_gauss_exchange_relations(*chain(n, twisted), u, v);
      CHECK(list.passed());
      CHECK(has_anchor(list, "ap5"));
      CHECK(has_anchor(list, "b4"));
    }
}

TEST_CASE("hat frame from the normal-ordering formulas") {
  const Scalar u = make_scalar(13, 6);
  for (int n : {2, 3})
    for (bool twisted : {false, true}) {
      auto hat = hatted_source(chain(n, twisted));
      auto list = verify_hat_gauss(*hat, u);
      CHECK(list.passed());
      CHECK(has_anchor(list, "hk"));
      const auto direct = gauss_decompose(*hat, u);
      const auto formula = hat_gauss_via_formula(*chain(n, twisted), u);
      for (int j = 1; j <= n; ++j) CHECK(direct.K(j) == formula.K(j));
    }
}

TEST_CASE("induction relations for T^") {
  const Scalar u = make_scalar(13, 6);
  auto plain = verify_induction_relations(*hatted_source(chain(3, false)), u);
  CHECK(plain.passed());
  CHECK(has_anchor(plain, "b7"));
  CHECK(has_anchor(plain, "b8"));
  CHECK(has_anchor(plain, "b12"));
  auto twisted = verify_induction_relations(*hatted_source(chain(3, true)), u);
  CHECK(twisted.passed());
  CHECK(!has_anchor(twisted, "b8"));
}
