#include "doctest.h"

#include "oracle.hpp"
#include "rttkit/errors.hpp"
#include "rttkit/linalg.hpp"
#include "rttkit/rmatrix.hpp"
#include "rttkit/sampling.hpp"
#include "rttkit/scalar.hpp"
#include "rttkit/sparse.hpp"

using namespace rttkit;

TEST_CASE("scalars are canonical p/q") {
  CHECK(to_string(make_scalar(2, 4)) == "1/2");
  CHECK(to_string(make_scalar(-6, -4)) == "3/2");
  CHECK(to_string(Scalar(2)) == "2/1");
  CHECK(parse_scalar(" -3/6 ") == make_scalar(-1, 2));
  CHECK(parse_scalar("123456789012345678901234567890/3") ==
        Scalar(mpz_class("41152263004115226300411522630")));
  CHECK_THROWS_AS(parse_scalar("abc"), DomainError);
  CHECK_THROWS_AS(parse_scalar("1/0"), DomainError);
  CHECK_THROWS_AS(make_scalar(1, 0), DomainError);
  CHECK(to_string(std::vector<Scalar>{1, make_scalar(1, 3)}) == "[1/1, 1/3]");
}

TEST_CASE("space indexing puts site 1 in the lowest digit") {
  SpaceShape s(3, 2);
  CHECK(s.dim == 9);
  CHECK(s.color(0, 1) == 1);
  CHECK(s.color(1, 1) == 2);
  CHECK(s.color(3, 2) == 2);
  CHECK(s.with_color(0, 2, 3) == 6);
  CHECK_THROWS_AS(SpaceShape(1, 2), DomainError);
  CHECK_THROWS_AS(SpaceShape(3, 9), DomainError);
}

TEST_CASE("matrix-unit algebra") {
  SpaceShape one(2, 1);
  SpaceShape two(2, 2);
  CHECK(commutator(elementary(two, 1, 1, 1), elementary(two, 2, 2, 2)).is_zero());
  CHECK(compose(elementary(one, 1, 1, 2), elementary(one, 1, 2, 1)) == elementary(one, 1, 1, 1));
  CHECK(commutator(elementary(one, 1, 1, 2), elementary(one, 1, 2, 1)) ==
        elementary(one, 1, 1, 1) - elementary(one, 1, 2, 2));
  CHECK_THROWS_AS(compose(elementary(one, 1, 1, 2), elementary(two, 1, 1, 2)), ShapeError);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      CHECK(oracle::from_sparse(elementary(two, 2, i, j)) == oracle::unit(2, 2, 2, i, j));
}

TEST_CASE("sparse storage drops zeros and sums duplicates") {
  SpaceShape s(2, 1);
  auto a = SparseOperator::from_triplets(s, {{0, 1, 2}, {0, 1, -2}, {1, 0, 3}, {1, 0, 1}});
  CHECK(a.nnz() == 1);
  CHECK(a.at(1, 0) == 4);
  CHECK((a - a).is_zero());
  CHECK(SparseOperator::multiple_of_identity(s, 5).is_multiple_of_identity());
  CHECK(!a.is_multiple_of_identity());
  StateVector v = StateVector::basis(s, 0);
  CHECK(a.apply(v).at(1) == 4);
  CHECK(a.apply_left(StateVector::basis(s, 1)).at(0) == 4);
  CHECK(dot(v, v) == 1);
}

TEST_CASE("invert matches a dense Gauss-Jordan oracle") {
  Sampler rng(11);
  SpaceShape s(3, 2);
  std::vector<SparseOperator::Triplet> t;
  for (std::size_t i = 0; i < s.dim; ++i) {
    t.emplace_back(i, i, rng.nonzero() + 50);
    t.emplace_back(i, (i * 4 + 1) % s.dim, rng.rational());
  }
  auto a = SparseOperator::from_triplets(s, t);
  auto inv = invert(a);
  CHECK(oracle::from_sparse(inv) == oracle::inverse(oracle::from_sparse(a)));
  CHECK(a * inv == SparseOperator::identity(s));
  CHECK(invert(SparseOperator::multiple_of_identity(s, 4)) ==
        SparseOperator::multiple_of_identity(s, make_scalar(1, 4)));
  CHECK_THROWS_AS(invert(elementary(s, 1, 1, 2)), SingularError);
  CHECK(from_dense(s, to_dense(a)) == a);
}

TEST_CASE("exact linear algebra") {
  DenseMatrix a{{2, 1}, {1, 3}};
  auto x = solve(a, {3, 5});
  CHECK(x[0] == make_scalar(4, 5));
  CHECK(x[1] == make_scalar(7, 5));
  CHECK(rank(DenseMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK_THROWS_AS(solve(DenseMatrix{{1, 2}, {2, 4}}, {1, 1}), SingularError);
  RowEchelon e(3);
  CHECK(e.try_add({1, 2, 3}));
  CHECK(!e.try_add({2, 4, 6}));
  CHECK(e.try_add({0, 1, 0}));
  CHECK(e.rank() == 2);
}

TEST_CASE("sampler is reproducible and avoids shifted collisions") {
  Sampler a(42), b(42);
  for (int k = 0; k < 50; ++k) CHECK(a.rational() == b.rational());
  Sampler c(42);
  Sampler fa = c.fork();
  Sampler d(42);
  Sampler fb = d.fork();
  CHECK(fa.rational() == fb.rational());
  Sampler s(3, 4);
  std::vector<Scalar> avoid{0, make_scalar(1, 2)};
  for (int k = 0; k < 100; ++k) {
    const Scalar x = s.generic(avoid, 1, 6);
    CHECK(!collides(x, avoid, 1, 6));
  }
  CHECK(collides(make_scalar(7, 2), {make_scalar(1, 2)}, 1, 3));
  CHECK(!collides(make_scalar(9, 2), {make_scalar(1, 2)}, 1, 3));
  auto set = s.generic_set(5, {}, 1, 2);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) CHECK(!collides(set[i], {set[j]}, 1, 2));
}

TEST_CASE("rational functions f, g, h and set products") {
  CHECK(product_f({}, {1, 2}, 1) == 1);
  CHECK(f_scalar(3, 1, 1) == make_scalar(3, 2));
  CHECK(product_f({3}, {1}, 1) == make_scalar(3, 2));
  CHECK(g_scalar(3, 1, 2) == 1);
  CHECK(h_scalar(3, 1, 1) == 3);
  CHECK(product_g({1, 2}, {3}, 1) == make_scalar(1, 2));
  CHECK(product_h({1, 2}, {0}, 1) == 6);
  CHECK_THROWS_AS(g_scalar(2, 2, 1), PoleError);
  try {
    product_f({1, 5}, {5}, 1);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("5/1") != std::string::npos);
  }
}

TEST_CASE("R-matrix is I + gP and solves Yang-Baxter") {
  const Scalar c = make_scalar(3, 2);
  for (int n : {2, 3}) {
    auto r = r_matrix(n, 5, make_scalar(1, 3), c);
    oracle::Dense p(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(static_cast<std::size_t>(i * n + j), static_cast<std::size_t>(j * n + i)) = 1;
    const auto expect = oracle::Dense::identity(p.n) + oracle::g(5, make_scalar(1, 3), c) * p;
    CHECK(oracle::from_sparse(r) == expect);
    CHECK(yang_baxter_holds(n, make_scalar(2, 7), make_scalar(-5, 3), 4, c));
    SpaceShape s(n, 3);
    auto p13 = permutation_operator(s, 1, 3);
    CHECK(p13 * p13 == SparseOperator::identity(s));
  }
}
