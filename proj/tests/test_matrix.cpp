#include "padic/matrix.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace padic;

namespace {

Mat from_rows(const std::vector<std::vector<int>>& rows) {
  Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("rref on pinned examples") {
  CHECK(rref(Mat::identity(3)) == Mat::identity(3));
  CHECK(rref(from_rows({{1, 1}, {1, 1}})) == from_rows({{1, 1}, {0, 0}}));
  CHECK(rref(from_rows({{0, 2}, {1, 0}})) == Mat::identity(2));
}

TEST_CASE("kernel_basis on pinned examples") {
  CHECK(kernel_basis(Mat::identity(2)) == Subspace::zero(2));

  Subspace k = kernel_basis(from_rows({{1, 1}, {1, 1}}));
  CHECK(k.dim() == 1);
  Mat v(2, 1);
  v(0, 0) = 1;
  v(1, 0) = -1;
  CHECK(k.contains(v));

  CHECK(kernel_basis(Mat(2, 3)) == Subspace::full(3));
}

TEST_CASE("pullback_of_maps on pinned examples") {
  Mat id1 = Mat::identity(1);
  Subspace diag = pullback_of_maps(id1, id1);
  CHECK(diag.dim() == 1);
  Mat v(2, 1);
  v(0, 0) = 1;
  v(1, 0) = 1;
  CHECK(diag.contains(v));

  Subspace forced = pullback_of_maps(Mat(1, 1), id1);
  CHECK(forced.dim() == 1);
  Mat w(2, 1);
  w(0, 0) = 1;
  CHECK(forced.contains(w));

  // f = [1,1]: Q^2 -> Q against the identity; expected dimension frozen from
  // the kernel of the 1x3 block matrix [1 1 -1].
  Mat f(1, 2);
  f(0, 0) = 1;
  f(0, 1) = 1;
  CHECK(kernel_basis(from_rows({{1, 1, -1}})).dim() == 2);
  CHECK(pullback_of_maps(f, id1).dim() == 2);

  Mat g(2, 1);
  CHECK_THROWS_AS(pullback_of_maps(f, g), std::invalid_argument);
}

TEST_CASE("rref and rank properties on random matrices") {
  std::mt19937 rng(20260811);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> size(0, 7);
    Mat m = oracle::random_matrix(rng, size(rng), size(rng));
    Mat r = rref(m);
    CHECK(rref(r) == r);
    CHECK(rank(r) == rank(m));
    CHECK(kernel_basis(m).dim() + rank(m) == m.cols());
  }
}

TEST_CASE("pullback dimension identity on random maps") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> size(0, 5);
    int c = size(rng), a = size(rng), b = size(rng);
    Mat f = oracle::random_matrix(rng, c, a);
    Mat g = oracle::random_matrix(rng, c, b);
    CHECK(pullback_of_maps(f, g).dim() == a + b - rank(Mat::hcat(f, -g)));
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    Mat a = oracle::random_invertible(rng, 4);
    Mat b = oracle::random_matrix(rng, 4, 2);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK(a * inverse(a) == Mat::identity(4));
  }
  // Inconsistent system.
  Mat a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  Mat b(2, 1);
  b(0, 0) = 1;
  b(1, 0) = 2;
  CHECK(!solve(a, b).has_value());
  CHECK_THROWS_AS(inverse(from_rows({{1, 1}, {1, 1}})), std::domain_error);
}

TEST_CASE("extend_to_basis completes independent columns") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 15; ++trial) {
    Mat m = oracle::random_matrix(rng, 5, 3);
    Mat b = column_space(m).basis();
    Mat extra = extend_to_basis(b);
    CHECK(b.cols() + extra.cols() == 5);
    CHECK(rank(Mat::hcat(b, extra)) == 5);
  }
}

TEST_CASE("subspace canonical form gives structural equality") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    Mat b = oracle::random_matrix(rng, 4, 2);
    Mat change = oracle::random_invertible(rng, 2);
    CHECK(Subspace::from_spanning_columns(b) ==
          Subspace::from_spanning_columns(b * change));
  }
}

TEST_CASE("zero-dimensional matrices behave") {
  Mat e(0, 0);
  CHECK(rref(e) == e);
  CHECK(rank(e) == 0);
  CHECK((e * e) == e);
  CHECK(e.pow(5) == e);
  Mat col0(3, 0);
  CHECK(kernel_basis(col0).dim() == 0);
  CHECK(kernel_basis(Mat(0, 3)).dim() == 3);
  CHECK(inverse(e) == e);
}
