#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gldirac/linalg.hpp"
#include "oracles.hpp"

using namespace gldirac;

namespace {
Rat R(long n, long d = 1) { return frac(n, d); }
}

TEST_CASE("rational round trip and bit length") {
  CHECK(rat_str(R(-3, 2)) == "-3/2");
  CHECK(rat_str(R(7)) == "7");
  CHECK(rat_parse("-3/2") == R(-3, 2));
  CHECK(rat_parse("0") == 0);
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
  CHECK(bit_length(R(4)) == 4);  // 100 / 1
}

TEST_CASE("matrix basics") {
  RatMatrix a = RatMatrix::from_rows({{R(1), R(2)}, {R(3), R(4)}});
  RatMatrix b = RatMatrix::from_rows({{R(0), R(1)}, {R(1), R(0)}});
  CHECK((a * b) == RatMatrix::from_rows({{R(2), R(1)}, {R(4), R(3)}}));
  CHECK(a.transpose().get(0, 1) == R(3));
  CHECK((a - a).is_zero());
  CHECK(a.trace() == R(5));
  a.add_to(0, 0, R(-1));
  CHECK(a.get(0, 0) == 0);
  CHECK(a.nnz() == 3);
  CHECK_THROWS_AS(a.get(5, 0), std::out_of_range);
  RatMatrix k = RatMatrix::kronecker(RatMatrix::identity(2), b);
  CHECK(k.rows() == 4);
  CHECK(k.get(0, 1) == R(1));
  CHECK(k.get(2, 3) == R(1));
  CHECK(k.get(0, 3) == 0);
}

TEST_CASE("rank, kernel and det on known matrices") {
  RatMatrix a = RatMatrix::from_rows({
      {R(1), R(2), R(3)},
      {R(2), R(4), R(6)},
      {R(1), R(0), R(1)},
  });
  CHECK(rank(a) == 2);
  CHECK(det(a) == 0);
  Subspace k = kernel(a);
  REQUIRE(k.dim() == 1);
  CHECK((a * k.basis).is_zero());

  RatMatrix b = RatMatrix::from_rows({{R(1, 2), R(1, 3)}, {R(1, 5), R(1, 7)}});
  CHECK(det(b) == R(1, 14) - R(1, 15));
  CHECK(rank(b) == 2);
  CHECK(kernel(b).dim() == 0);

  CHECK(det(RatMatrix::identity(0)) == 1);
  CHECK(rank(RatMatrix(0, 5)) == 0);
  CHECK(kernel(RatMatrix(0, 3)).dim() == 3);
  CHECK(kernel(RatMatrix(3, 0)).dim() == 0);
}

TEST_CASE("fraction-free and naive elimination agree on random matrices") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 12; ++trial) {
    int rows = 20, cols = 20;
    if (trial % 3 == 1) cols = 14;
    if (trial % 3 == 2) rows = 13;
    RatMatrix a = oracle::random_matrix(rng, rows, cols);
    oracle::DenseElim ref = oracle::eliminate(a);
    CHECK(rank(a) == ref.rank);
    CHECK(rref(a).rank == ref.rank);
    Subspace k = kernel(a);
    Subspace kref = oracle::null_space(a);
    CHECK(k.dim() == cols - ref.rank);
    CHECK((a * k.basis).is_zero());
    CHECK(subspace_eq(k, kref));
    if (rows == cols) CHECK(det(a) == ref.det);
  }
}

TEST_CASE("determinant multiplicativity on random squares") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    RatMatrix a = oracle::random_matrix(rng, 8, 8);
    RatMatrix b = oracle::random_matrix(rng, 8, 8);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("column space and canonical basis") {
  RatMatrix a = RatMatrix::from_rows({
      {R(1), R(2), R(0)},
      {R(2), R(4), R(1)},
      {R(3), R(6), R(1)},
  });
  Subspace cs = column_space(a);
  CHECK(cs.dim() == 2);
  CHECK(in_span(cs, a));

  // Two different bases of the same plane canonicalize identically.
  Subspace s1{3, RatMatrix::from_rows({{R(1), R(0)}, {R(0), R(1)}, {R(1), R(1)}})};
  Subspace s2{3, RatMatrix::from_rows({{R(2), R(1)}, {R(2), R(3)}, {R(4), R(4)}})};
  CHECK(subspace_eq(s1, s2));
  CHECK(canonical_basis(s1) == canonical_basis(s2));
  CHECK_FALSE(in_span(s1, RatMatrix::column({R(1), R(0), R(0)})));
}

TEST_CASE("intersect, sum and quotient") {
  std::mt19937 rng(99);
  RatMatrix big = oracle::random_matrix(rng, 9, 6, 5, 3, 90);
  Subspace whole = column_space(big);
  REQUIRE(whole.dim() >= 4);
  Subspace sub = column_space(whole.basis.columns({0, 1}));
  Subspace q = quotient_basis(whole, sub);
  CHECK(q.dim() == whole.dim() - 2);
  CHECK(subspace_eq(subspace_sum(sub, q), whole));
  CHECK(intersect(sub, q).dim() == 0);

  Subspace meet = intersect(whole, sub);
  CHECK(subspace_eq(meet, sub));
  CHECK_THROWS_AS(quotient_basis(sub, whole), std::invalid_argument);

  // Dimension formula dim(a)+dim(b) = dim(a+b)+dim(a^b) on random pairs.
  for (int t = 0; t < 5; ++t) {
    Subspace a = column_space(oracle::random_matrix(rng, 8, 4, 4, 2, 80));
    Subspace b = column_space(oracle::random_matrix(rng, 8, 5, 4, 2, 80));
    CHECK(a.dim() + b.dim() ==
          subspace_sum(a, b).dim() + intersect(a, b).dim());
  }
}

TEST_CASE("solve") {
  RatMatrix a = RatMatrix::from_rows({{R(1), R(0)}, {R(1), R(1)}, {R(0), R(2)}});
  RatMatrix b = RatMatrix::from_rows({{R(3)}, {R(5)}, {R(4)}});
  RatMatrix x;
  REQUIRE(solve(a, b, &x));
  CHECK((a * x) == b);
  CHECK(x.get(0, 0) == R(3));
  CHECK(x.get(1, 0) == R(2));

  RatMatrix bad = RatMatrix::from_rows({{R(1)}, {R(0)}, {R(1)}});
  CHECK_FALSE(solve(a, bad, nullptr));

  RatMatrix dep = RatMatrix::from_rows({{R(1), R(2)}, {R(2), R(4)}});
  CHECK_THROWS_AS(solve(dep, RatMatrix(2, 1), nullptr), std::invalid_argument);
}

TEST_CASE("symmetric pivots and inertia") {
  CHECK(symmetric_pivots(RatMatrix::identity(3)) == std::vector<Rat>{R(1), R(1), R(1)});

  RatMatrix hyp = RatMatrix::from_rows({{R(0), R(1)}, {R(1), R(0)}});
  std::vector<Rat> p = symmetric_pivots(hyp);
  REQUIRE(p.size() == 2);
  CHECK(p[0] * p[1] < 0);  // signature (1,1)

  RatMatrix pd = RatMatrix::from_rows({
      {R(2), R(1), R(0)},
      {R(1), R(2), R(1)},
      {R(0), R(1), R(2)},
  });
  for (const Rat& v : symmetric_pivots(pd)) CHECK(v > 0);

  RatMatrix sing = RatMatrix::from_rows({{R(1), R(1)}, {R(1), R(1)}});
  p = symmetric_pivots(sing);
  CHECK(p == std::vector<Rat>{R(1), R(0)});

  CHECK_THROWS_AS(symmetric_pivots(RatMatrix::from_rows({{R(0), R(1)}, {R(2), R(0)}})),
                  std::invalid_argument);

  // Random congruence A^T D A keeps the sign counts of D when A is invertible.
  std::mt19937 rng(4242);
  RatMatrix d = RatMatrix::diagonal({R(1), R(2), R(-3), R(5)});
  for (int t = 0; t < 4; ++t) {
    RatMatrix a = oracle::random_matrix(rng, 4, 4, 3, 2, 100);
    if (det(a) == 0) continue;
    std::vector<Rat> piv = symmetric_pivots(a.transpose() * d * a);
    int pos = 0, neg = 0;
    for (const Rat& v : piv) (v > 0 ? pos : neg)++;
    CHECK(pos == 3);
    CHECK(neg == 1);
  }
}

TEST_CASE("charpoly against determinant evaluations") {
  std::mt19937 rng(31337);
  for (int t = 0; t < 4; ++t) {
    RatMatrix a = oracle::random_matrix(rng, 6, 6, 4, 2, 80);
    std::vector<Rat> p = charpoly(a);
    REQUIRE(p.size() == 7);
    CHECK(p[6] == 1);
    for (long x0 : {0L, 1L, -1L, 2L, 5L}) {
      RatMatrix xi = RatMatrix::identity(6).scaled(R(x0)) - a;
      Rat direct = det(xi);
      Rat viaPoly = 0;
      for (std::size_t i = p.size(); i-- > 0;) viaPoly = viaPoly * R(x0) + p[i];
      CHECK(direct == viaPoly);
    }
  }
}

TEST_CASE("rational roots and eigenvalues") {
  // (x-2)^2 (x+1/3) = x^3 - 11/3 x^2 + 8/3 x + 4/3
  std::vector<Rat> p{R(4, 3), R(8, 3), R(-11, 3), R(1)};
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Rat, int>(R(-1, 3), 1));
  CHECK(roots[1] == std::pair<Rat, int>(R(2), 2));

  auto z = rational_roots({R(0), R(0), R(1)});  // x^2
  REQUIRE(z.size() == 1);
  CHECK(z[0] == std::pair<Rat, int>(R(0), 2));

  RatMatrix m = RatMatrix::from_rows({
      {R(2), R(1), R(0)},
      {R(0), R(2), R(0)},
      {R(0), R(0), R(-1, 2)},
  });
  auto eig = rational_eigenvalues(m);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == std::pair<Rat, int>(R(-1, 2), 1));
  CHECK(eig[1] == std::pair<Rat, int>(R(2), 2));

  RatMatrix rot = RatMatrix::from_rows({{R(0), R(-1)}, {R(1), R(0)}});
  CHECK_THROWS_AS(rational_eigenvalues(rot), std::domain_error);
}
