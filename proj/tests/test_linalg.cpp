#include <random>

#include "ausglue/errors.hpp"
#include "ausglue/linalg.hpp"
#include "doctest.h"

using namespace ausglue;

namespace {

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
  for (auto& row : rows)
    for (auto& v : row) v = d(rng);
  if (r == 0 || c == 0) return Mat(r, c);
  return Mat::from_rows(rows);
}

void both_fields(const std::function<void()>& body) {
  for (const Field& f : {Field::prime(), Field::rationals()}) {
    FieldGuard g(f);
    CAPTURE(f.name());
    body();
  }
}

}  // namespace

TEST_CASE("rref of the zero matrix has no pivots") {
  both_fields([] {
    Rref r = rref(Mat(3, 4));
    CHECK(r.pivots.empty());
    CHECK(r.reduced.is_zero());
  });
}

TEST_CASE("rref of the identity is the identity") {
  both_fields([] {
    Rref r = rref(Mat::identity(4));
    CHECK(r.reduced.is_identity());
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});
  });
}

TEST_CASE("rref of a rank one 2x2 matrix") {
  FieldGuard g(Field::rationals());
  Rref r = rref(Mat::from_rows({{2, 4}, {1, 2}}));
  CHECK(r.reduced == Mat::from_rows({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel bases") {
  both_fields([] {
    CHECK(kernel_basis(Mat::identity(3)).cols() == 0);
    CHECK(kernel_basis(Mat(3, 3)).cols() == 3);
    CHECK(rank(kernel_basis(Mat(3, 3))) == 3);
    Mat k = kernel_basis(Mat::from_rows({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(1, 0) == -k(0, 0));
    CHECK(!k(0, 0).is_zero());
  });
}

TEST_CASE("solve") {
  both_fields([] {
    Mat b = Mat::from_rows({{1, 2}, {3, 4}, {5, 6}});
    CHECK(solve(Mat::identity(3), b) == b);
    CHECK_THROWS_AS(solve(Mat(2, 2), Mat::from_rows({{1}, {0}})), NoSolution);
    Mat x = solve(Mat::from_rows({{1}, {1}}), Mat::from_rows({{2}, {2}}));
    CHECK(x == Mat::from_rows({{2}}));
  });
}

TEST_CASE("random matrices satisfy rank, kernel and solve identities") {
  std::mt19937 rng(20240611);
  both_fields([&] {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Mat m = random_mat(rng, r, c);
      Rref rr = rref(m);
      CHECK(rank(m) == rr.pivots.size());
      CHECK(rank(rr.reduced) == rank(m));
      CHECK(rref(rr.reduced).reduced == rr.reduced);
      Mat k = kernel_basis(m);
      CHECK(k.cols() + rank(m) == c);
      if (k.cols() > 0) {
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
      }
      Mat x = random_mat(rng, c, 2);
      Mat b = m * x;
      Mat y = solve(m, b);
      CHECK(m * y == b);
    }
  });
}

TEST_CASE("inverse and left inverse") {
  std::mt19937 rng(7);
  both_fields([&] {
    for (int trial = 0; trial < 30; ++trial) {
      Mat m = random_mat(rng, 4, 4);
      if (!is_invertible(m)) continue;
      CHECK((m * inverse(m)).is_identity());
    }
    Mat tall = Mat::from_rows({{1, 0}, {2, 1}, {0, 3}});
    CHECK((left_inverse(tall) * tall).is_identity());
  });
}

TEST_CASE("span intersection and complements") {
  both_fields([] {
    Mat a = Mat::from_rows({{1, 0}, {0, 1}, {0, 0}});
    Mat b = Mat::from_rows({{0, 0}, {1, 0}, {0, 1}});
    Mat i = intersect_spans(a, b);
    CHECK(i.cols() == 1);
    CHECK(in_span(a, i));
    CHECK(in_span(b, i));
    CHECK(complement_units(a, 3) == std::vector<std::size_t>{2});
  });
}

TEST_CASE("mixing fields throws") {
  Mat a, b;
  {
    FieldGuard g(Field::prime());
    a = Mat::identity(2);
  }
  {
    FieldGuard g(Field::rationals());
    b = Mat::identity(2);
  }
  CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("characteristic polynomial roots") {
  both_fields([] {
    Mat m = Mat::from_rows({{2, 0, 0}, {1, 3, 0}, {4, 5, 3}});
    Poly f = charpoly(m);
    REQUIRE(f.size() == 4);
    CHECK(f[3].is_one());
    auto roots = roots_in_field(f);
    CHECK(roots.size() == 2);
    for (const auto& r : roots) CHECK(eval(f, r).is_zero());
  });
}
