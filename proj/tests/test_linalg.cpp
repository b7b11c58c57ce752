#include "finepoly/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace finepoly;

namespace {

IMat random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("hermite normal form of a small matrix") {
  IMat m = IMat::from_rows({{2, 4}, {1, 3}});
  HnfResult r = hnf(m);
  CHECK(r.h.a == IMat::from_rows({{1, 1}, {0, 2}}).a);
  CHECK(is_unimodular(r.u));
  CHECK(mat_mul(r.u, m).a == r.h.a);
}

TEST_CASE("hermite normal form is idempotent and canonical") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IMat m = random_matrix(rng, 3, 4, -6, 6);
    HnfResult r = hnf(m);
    CHECK(mat_mul(r.u, m).a == r.h.a);
    CHECK(is_unimodular(r.u));
    HnfResult again = hnf(r.h);
    CHECK(again.h.a == r.h.a);

    // Left-multiplying by any unimodular matrix must not change the HNF.
    IMat g = IMat::from_rows({{1, 1, 0}, {0, 1, 0}, {1, 1, 1}});
    REQUIRE(is_unimodular(g));
    HnfResult r2 = hnf(mat_mul(g, m));
    CHECK(r2.h.a == r.h.a);
  }
}

TEST_CASE("smith normal form certificate") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IMat m = random_matrix(rng, 3, 3, -5, 5);
    SnfResult r = snf(m);
    CHECK(is_unimodular(r.u));
    CHECK(is_unimodular(r.v));
    IMat prod = mat_mul(mat_mul(r.u, m), r.v);
    CHECK(prod.a == r.s.a);
    // Diagonal, nonnegative, with divisibility down the diagonal.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(r.s.at(i, j) == 0);
    for (int i = 0; i + 1 < 3; ++i) {
      CHECK(r.s.at(i, i) >= 0);
      if (r.s.at(i, i) != 0) CHECK(r.s.at(i + 1, i + 1) % r.s.at(i, i) == 0);
      if (r.s.at(i, i) == 0) CHECK(r.s.at(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("determinant, rank, content, primitive") {
  CHECK(det(IMat::from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(det(IMat::from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(det(IMat::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(rank(IMat::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(IMat::from_rows({{1, 0, 0}, {0, 1, 0}})) == 2);
  CHECK(content(IntVec{4, -6, 8}) == 2);
  CHECK(primitive(IntVec{4, -6, 8}) == IntVec{2, -3, 4});
  CHECK(primitive(IntVec{0, -5, 0}) == IntVec{0, -1, 0});
}

TEST_CASE("saturated kernel has unimodular-completable rows") {
  // Kernel of the map x -> x1 + 2*x2 + 3*x3.
  IMat m = IMat::from_rows({{1, 2, 3}});
  std::vector<IntVec> k = saturated_kernel(m);
  REQUIRE(k.size() == 2);
  for (const IntVec& row : k) {
    Int s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * m.at(0, j);
    CHECK(s == 0);
  }
  // Saturation: the Smith form of the kernel basis has all invariant factors 1.
  SnfResult sres = snf(IMat::from_rows(k));
  for (std::size_t i = 0; i < k.size(); ++i) CHECK(sres.s.at(static_cast<int>(i), static_cast<int>(i)) == 1);
}

TEST_CASE("saturated kernel is canonical under row operations") {
  IMat m1 = IMat::from_rows({{2, 4, 6}});     // same kernel as (1,2,3)
  IMat m2 = IMat::from_rows({{1, 2, 3}});
  CHECK(saturated_kernel(m1) == saturated_kernel(m2));
}

TEST_CASE("solve_columns expresses a vector in a generator basis") {
  std::vector<IntVec> gens = {{2, 1}, {1, 2}};
  RatVec x = {Rat(4), Rat(5)};
  RatVec lambda;
  REQUIRE(solve_columns(gens, x, lambda));
  CHECK(lambda[0] == Rat(1));
  CHECK(lambda[1] == Rat(2));

  // A vector outside the span of rank-deficient generators is rejected.
  std::vector<IntVec> line = {{1, 1}};
  RatVec y = {Rat(1), Rat(0)};
  RatVec mu;
  CHECK_FALSE(solve_columns(line, y, mu));
  RatVec z = {Rat(3), Rat(3)};
  REQUIRE(solve_columns(line, z, mu));
  CHECK(mu[0] == Rat(3));
}

TEST_CASE("clear_denominators and primitive_rat") {
  RatVec v = {Rat(1, 2), Rat(-3, 4)};
  IntVec cleared = clear_denominators(v);
  CHECK(cleared == IntVec{2, -3});
}
