#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "entcoh/matrix.hpp"

using namespace entcoh;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_long(entry(rng));
  return m;
}

}  // namespace

TEST_CASE("field: rationals parse and print") {
  Field q(FieldSpec::rationals());
  CHECK(q.to_string(q.parse("2/4")) == "1/2");
  CHECK(q.to_string(q.parse("-6/3")) == "-2");
  CHECK(q.to_string(q.parse("7")) == "7");
  CHECK(q.add(q.parse("1/3"), q.parse("1/6")) == q.parse("1/2"));
  CHECK(q.inv(q.parse("-2/5")) == q.parse("-5/2"));
  CHECK_THROWS_AS(q.parse("1/0"), ParseError);
  CHECK_THROWS_AS(q.parse("abc"), ParseError);
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
}

TEST_CASE("field: prime fields reduce into [0, p)") {
  Field f5(FieldSpec::prime(5));
  CHECK(f5.from_long(7) == f5.from_long(2));
  CHECK(f5.add(f5.from_long(3), f5.from_long(4)) == f5.from_long(2));
  CHECK(f5.neg(f5.from_long(1)) == f5.from_long(4));
  CHECK(f5.mul(f5.inv(f5.from_long(2)), f5.from_long(2)) == f5.one());
  CHECK_THROWS_AS(Field(FieldSpec::prime(4)), MalformedInput);
  CHECK_THROWS_AS(f5.parse("1/2"), ParseError);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
}

TEST_CASE("matrix: hand elimination oracle") {
  // Row-reduce by hand:
  //   [1 2 3]      [1 0 -1]
  //   [2 4 7]  ->  [0 0  1] -> rank 2, kernel spanned by (2, -1, 0)... no:
  //   [1 2 4]      columns 0,2 pivots, kernel = span{(-2, 1, 0)}.
  Field q(FieldSpec::rationals());
  Matrix m(3, 3);
  long vals[3][3] = {{1, 2, 3}, {2, 4, 7}, {1, 2, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = q.from_long(vals[i][j]);
  CHECK(rank(q, m) == 2);
  Matrix k = kernel_basis(q, m);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero_vec(apply(q, m, k.column(0))));
  CHECK(k.at(1, 0) == q.one());  // free column 1, normalized

  Echelon e = reduced_row_echelon(q, m);
  REQUIRE(e.pivot_cols == std::vector<std::size_t>{0, 2});
  CHECK(e.mat.at(0, 1) == q.from_long(2));
}

TEST_CASE("matrix: solve") {
  Field q(FieldSpec::rationals());
  Matrix m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 3; m.at(1, 1) = 4;
  Vec b{q.from_long(5), q.from_long(11)};
  auto x = solve(q, m, b);
  REQUIRE(x.has_value());
  CHECK(apply(q, m, *x) == b);

  Matrix s(2, 1);
  s.at(0, 0) = 1; s.at(1, 0) = 1;
  CHECK(!solve(q, s, Vec{q.one(), q.zero()}).has_value());
}

TEST_CASE("matrix: seeded rank properties") {
  std::mt19937_64 rng(20240811);
  std::vector<Field> fields{Field(FieldSpec::rationals()),
                            Field(FieldSpec::prime(2)),
                            Field(FieldSpec::prime(5))};
  for (int trial = 0; trial < 60; ++trial) {
    const Field& f = fields[trial % fields.size()];
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    Matrix m = random_matrix(f, dim(rng), dim(rng), rng);
    std::size_t r = rank(f, m);
    CHECK(r == rank(f, transpose(m)));
    Matrix k = kernel_basis(f, m);
    CHECK(r + k.cols() == m.cols());  // rank-nullity
    for (std::size_t j = 0; j < k.cols(); ++j)
      CHECK(is_zero_vec(apply(f, m, k.column(j))));
    // solving against a column of the matrix must succeed
    if (m.cols() > 0) {
      auto x = solve(f, m, m.column(0));
      REQUIRE(x.has_value());
      CHECK(apply(f, m, *x) == m.column(0));
    }
  }
}

TEST_CASE("matrix: quotient basis") {
  Field q(FieldSpec::rationals());
  Matrix span(3, 1);
  span.at(0, 0) = 1;
  span.at(1, 0) = 1;
  span.at(2, 0) = 0;
  QuotientBasis qb = quotient_basis(q, 3, span);
  CHECK(qb.representatives.size() == 2);
  CHECK(mul(q, qb.projection, qb.section) == Matrix::identity(2));
  CHECK(is_zero_matrix(mul(q, qb.projection, span)));
}

TEST_CASE("matrix: solve_matrix inverts") {
  Field f3(FieldSpec::prime(3));
  std::mt19937_64 rng(7);
  Matrix m = random_matrix(f3, 4, 4, rng);
  while (rank(f3, m) < 4) m = random_matrix(f3, 4, 4, rng);
  auto inv = solve_matrix(f3, m, Matrix::identity(4));
  REQUIRE(inv.has_value());
  CHECK(mul(f3, m, *inv) == Matrix::identity(4));
}
