#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcoh/zoo.hpp"

using namespace entcoh;

TEST_CASE("C4/C2: coinvariants, quotient, beta, gamma") {
  auto ca = make_zoo("c4-c2");
  REQUIRE(ca.has_value());
  const Field& f = ca->a.field;
  CHECK(check_coaction(*ca).all_ok());

  GaloisExtension ext = analyze_extension(*ca);

  // B = span{1, g^2}
  REQUIRE(ext.b_basis.cols() == 2);
  Vec b0 = ext.b_basis.column(0), b1 = ext.b_basis.column(1);
  CHECK(b0 == Vec{f.one(), f.zero(), f.zero(), f.zero()});
  CHECK(b1 == Vec{f.zero(), f.zero(), f.one(), f.zero()});
  CHECK(ext.b_algebra.dim == 2);

  CHECK(ext.aba.dim == 8);
  CHECK(rank(f, ext.beta) == 8);  // beta bijective
  CHECK(ext.is_galois);
  CHECK(check_beta_bimodule(ext));
  CHECK(check_translation_identity(ext));

  // gamma(c_1) = [g^3 (x) g]: its class in A (x)_B A
  Vec g3_tensor_g(16, f.zero());
  g3_tensor_g[flat_index(std::size_t{3}, std::size_t{1}, std::size_t{4})] =
      f.one();
  CHECK(apply(f, ext.aba.projection, g3_tensor_g) == ext.gamma.column(1));
  // gamma(c_0) = [1 (x) 1]
  Vec unit_tensor_unit(16, f.zero());
  unit_tensor_unit[0] = f.one();
  CHECK(apply(f, ext.aba.projection, unit_tensor_unit) ==
        ext.gamma.column(0));

  // beta . gamma = eta (x) id
  Matrix bg = mul(f, ext.beta, ext.gamma);
  for (std::size_t i = 0; i < 2; ++i) {
    Vec expect(8, f.zero());
    expect[flat_index(std::size_t{0}, i, std::size_t{2})] = f.one();
    CHECK(bg.column(i) == expect);
  }
}

TEST_CASE("quotient projection and section are compatible") {
  auto ca = make_zoo("c4-c2-f3");
  REQUIRE(ca.has_value());
  const Field& f = ca->a.field;
  GaloisExtension ext = analyze_extension(*ca);
  CHECK(mul(f, ext.aba.projection, ext.aba.section) ==
        Matrix::identity(ext.aba.dim));
  CHECK(ext.is_galois);
}

TEST_CASE("trivial extension: B = A, quotient is A") {
  Field q(FieldSpec::rationals());
  ComoduleAlgebra ca = trivial_extension(truncated_polynomial_algebra(q));
  GaloisExtension ext = analyze_extension(ca);
  CHECK(ext.b_basis.cols() == ca.a.dim);
  CHECK(ext.aba.dim == ca.a.dim);
  CHECK(ext.is_galois);
}

TEST_CASE("non-Galois control") {
  auto ca = make_zoo("non-galois");
  REQUIRE(ca.has_value());
  CHECK(check_coaction(*ca).all_ok());  // valid comodule...
  GaloisExtension ext = analyze_extension(*ca);
  CHECK(!ext.is_galois);  // ...but beta is not bijective
  CHECK(ext.gamma.cols() == 0);
}

TEST_CASE("Sweedler H4: B = k") {
  auto ca = make_zoo("sweedler-h4");
  REQUIRE(ca.has_value());
  GaloisExtension ext = analyze_extension(*ca);
  CHECK(ext.b_basis.cols() == 1);
  CHECK(ext.aba.dim == 16);
  CHECK(ext.is_galois);
  CHECK(check_beta_bimodule(ext));
  CHECK(check_translation_identity(ext));
}

TEST_CASE("invalid coaction is rejected before analysis") {
  auto ca = make_zoo("c4-c2");
  REQUIRE(ca.has_value());
  ca->coaction.at(0, 0) = ca->a.field.zero();  // break the counit law
  CHECK(!check_coaction(*ca).all_ok());
  CHECK_THROWS_AS(analyze_extension(*ca), PreconditionError);
}
