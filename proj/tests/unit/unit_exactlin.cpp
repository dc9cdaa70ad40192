#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "specalc/errors.hpp"
#include "specalc/matrix.hpp"
#include "specalc/rowspace.hpp"

using namespace specalc;

namespace {

RatMatrix make(int rows, int cols, std::vector<int> vals) {
  RatMatrix m(rows, cols);
  for (size_t i = 0; i < vals.size(); ++i) m.entries[i] = vals[i];
  return m;
}

RatMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (auto& x : m.entries) x = static_cast<int>(rng() % 7) - 3;
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_parse("3/4") == Rational(3, 4));
  CHECK(rat_parse("-6/4") == Rational(-3, 2));
  CHECK(rat_parse(" +5 ") == Rational(5));
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(Rational(7)) == "7");
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse("a"), Error);
  CHECK_THROWS_AS(rat_parse("1.5"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
}

TEST_CASE("rref canonical form") {
  RatMatrix m = make(3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
  RatMatrix r = rref(m);
  CHECK(r.rows == 2);
  CHECK(r.at(0, 0) == Rational(1));
  CHECK(r.at(0, 1) == Rational(0));
  CHECK(r.at(1, 1) == Rational(1));
  CHECK(rank(m) == 2);
  CHECK(rref(r) == r);
  CHECK(rref(RatMatrix::identity(4)) == RatMatrix::identity(4));
}

TEST_CASE("rank agrees with minor expansion") {
  std::mt19937 rng(911);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 5);
    RatMatrix m = random_matrix(rng, rows, cols);
    CHECK(rank(m) == oracle::minor_rank(m));
  }
}

TEST_CASE("kernel basis spans the right kernel") {
  std::mt19937 rng(912);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 5);
    RatMatrix m = random_matrix(rng, rows, cols);
    RatMatrix k = kernel_basis(m);
    CHECK(k.rows + rank(m) == cols);
    CHECK(rank(k) == k.rows);
    for (int r = 0; r < k.rows; ++r) {
      std::vector<Rational> v(static_cast<size_t>(cols));
      for (int c = 0; c < cols; ++c) v[static_cast<size_t>(c)] = k.at(r, c);
      for (const Rational& x : mat_apply(m, v)) CHECK(rat_is_zero(x));
    }
  }
}

TEST_CASE("row space membership, reduction, coordinates") {
  RowSpace u = RowSpace::from_rows(3, make(2, 3, {1, 0, 1, 0, 1, 1}));
  CHECK(u.dim() == 2);
  CHECK(u.contains({1, 1, 2}));
  CHECK(!u.contains({1, 1, 1}));
  std::vector<Rational> nf = u.reduce({1, 1, 1});
  CHECK(rat_is_zero(nf[0]));
  CHECK(rat_is_zero(nf[1]));
  CHECK(nf[2] == Rational(-1));
  CHECK(u.reduce(nf) == nf);
  std::vector<Rational> coords = u.coordinates({2, -1, 1});
  CHECK(coords == std::vector<Rational>{2, -1});
  CHECK_THROWS_AS(u.coordinates({1, 1, 1}), Error);
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937 rng(913);
  for (int trial = 0; trial < 40; ++trial) {
    const int ambient = 2 + static_cast<int>(rng() % 4);
    RowSpace u = RowSpace::from_rows(ambient, random_matrix(rng, 1 + rng() % 3, ambient));
    RowSpace w = RowSpace::from_rows(ambient, random_matrix(rng, 1 + rng() % 3, ambient));
    RowSpace sum = space_sum(u, w);
    RowSpace meet = space_intersect(u, w);
    CHECK(u.dim() + w.dim() == sum.dim() + meet.dim());
    CHECK(sum.contains(u));
    CHECK(sum.contains(w));
    CHECK(u.contains(meet));
    CHECK(w.contains(meet));
    CHECK(quotient_dim(u, sum) == sum.dim() - u.dim());
  }
}

TEST_CASE("ambient mismatch and non-subspace quotients are rejected") {
  RowSpace a(3), b(4);
  CHECK_THROWS_AS(space_sum(a, b), Error);
  RowSpace u = RowSpace::from_rows(3, make(1, 3, {1, 0, 0}));
  RowSpace w = RowSpace::from_rows(3, make(1, 3, {0, 1, 0}));
  CHECK_THROWS_AS(quotient_dim(u, w), Error);
}

TEST_CASE("matrix multiply against hand results") {
  RatMatrix a = make(2, 3, {1, 2, 3, 0, 1, 0});
  RatMatrix b = make(3, 2, {1, 0, 0, 1, 1, 1});
  RatMatrix c = mat_mul(a, b);
  CHECK(c == make(2, 2, {4, 5, 0, 1}));
  CHECK(mat_apply(a, {1, 1, 1}) == std::vector<Rational>{6, 1});
  RatMatrix stacked = mat_stack(a, make(1, 3, {5, 5, 5}));
  CHECK(stacked.rows == 3);
  CHECK(stacked.at(2, 0) == Rational(5));
}
