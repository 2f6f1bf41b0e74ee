#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcoh/zoo.hpp"
#include "oracles.hpp"

using namespace entcoh;

TEST_CASE("bar resolution of k[C2] is an exact augmented complex") {
  Field q(FieldSpec::rationals());
  Algebra a = group_algebra(cyclic_group(2), q);
  FreeBimoduleComplex fc = bar_resolution(a, 3);
  CHECK(fc.gen_dims == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(fc.component_dim(2) == 16);
  verify_complex(fc);  // throws on failure
  CHECK(augmented_complex_exact(fc, 2));
  CHECK(check_bimodule(fc.component_bimodule(1)).all_ok());
}

TEST_CASE("full differential matches the restricted data") {
  Field f2(FieldSpec::prime(2));
  Algebra a = truncated_polynomial_algebra(f2);
  FreeBimoduleComplex fc = bar_resolution(a, 2);
  // d1 applied to 1 (x) x (x) 1 = x (x) 1 - 1 (x) x in A (x) A coordinates
  Matrix d1 = fc.full_differential(1);
  Vec gen(fc.component_dim(1), f2.zero());
  gen[(0 * 2 + 1) * 2 + 0] = f2.one();  // 1 (x) e_x (x) 1
  Vec image = apply(f2, d1, gen);
  Vec expect(4, f2.zero());
  expect[1 * 2 + 0] = f2.one();  // x (x) 1
  expect[0 * 2 + 1] = f2.one();  // - 1 (x) x (= + over F2)
  CHECK(image == expect);
}

TEST_CASE("Hochschild of k[y]/(y^2) against the periodic resolution") {
  for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime(2),
                         FieldSpec::prime(3)}) {
    Field f(spec);
    Algebra a = truncated_polynomial_algebra(f);
    Bimodule m = regular_bimodule(a);
    CohomologyTable got = hochschild_cohomology(a, m, 3);
    std::vector<std::size_t> want = oracles::truncated_poly_hochschild(m, 3);
    CHECK(got.dims == want);
    CHECK(got.edge_exact);
  }
}

TEST_CASE("frozen tables for k[x]/(x^2)") {
  Field q(FieldSpec::rationals());
  Field f2(FieldSpec::prime(2));
  CohomologyTable tq = hochschild_cohomology(
      truncated_polynomial_algebra(q),
      regular_bimodule(truncated_polynomial_algebra(q)), 3);
  CHECK(tq.dims == std::vector<std::size_t>{2, 1, 1, 1});
  CohomologyTable t2 = hochschild_cohomology(
      truncated_polynomial_algebra(f2),
      regular_bimodule(truncated_polynomial_algebra(f2)), 3);
  CHECK(t2.dims == std::vector<std::size_t>{2, 2, 2, 2});
}

TEST_CASE("entwined complex of a trivial extension reduces to the bar complex") {
  Field f2(FieldSpec::prime(2));
  ComoduleAlgebra ca = trivial_extension(truncated_polynomial_algebra(f2));
  GaloisExtension ext = analyze_extension(ca);
  Entwining psi = canonical_psi(ext);
  Bimodule m = regular_bimodule(ca.a);
  CohomologyTable ent = entwined_cohomology(psi, m, 3);
  CohomologyTable hh = hochschild_cohomology(ca.a, m, 3);
  CHECK(ent.dims == hh.dims);
}

TEST_CASE("entwined and quotient-complex routes agree") {
  for (const char* name : {"c4-c2", "c4-c2-f2", "trivial-x2", "sweedler-h4"}) {
    auto ca = make_zoo(name);
    REQUIRE(ca.has_value());
    GaloisExtension ext = analyze_extension(*ca);
    REQUIRE(ext.is_galois);
    Bimodule m = regular_bimodule(ca->a);
    std::size_t n_max = ca->a.dim > 2 ? 2 : 3;
    CohomologyTable ent =
        entwined_cohomology(canonical_psi(ext), m, n_max);
    CohomologyTable quo = quotient_cohomology(ext, m, n_max);
    CHECK(ent.dims == quo.dims);
  }
}

TEST_CASE("cohomology_dims rejects non-complexes") {
  Field q(FieldSpec::rationals());
  CochainComplex cc;
  cc.dims = {1, 1, 1};
  cc.diff = {Matrix::identity(1), Matrix::identity(1)};  // d.d = id != 0
  CHECK_THROWS_AS(cohomology_dims(q, cc), MalformedInput);
}

TEST_CASE("resource caps abort oversized computations") {
  Field q(FieldSpec::rationals());
  Algebra a = group_algebra(cyclic_group(4), q);
  ResourceCaps caps;
  caps.max_entries = 100;
  CHECK_THROWS_AS(bar_resolution(a, 3, caps), ResourceLimit);
}

TEST_CASE("projectivity: group algebra cases") {
  Field q(FieldSpec::rationals());
  Algebra a = group_algebra(cyclic_group(4), q);
  Matrix b_basis(4, 2);
  b_basis.at(0, 0) = q.one();
  b_basis.at(2, 1) = q.one();
  Bimodule a_over_b = restrict_bimodule(regular_bimodule(a), b_basis);
  CHECK(is_projective_module(a_over_b, ModuleSide::left));
  CHECK(is_projective_module(a_over_b, ModuleSide::right));

  // Augmentation module k of F2[C2]: g acts as 1. Not projective.
  Field f2(FieldSpec::prime(2));
  Algebra b = group_algebra(cyclic_group(2), f2);
  Bimodule aug;
  aug.over = b;
  aug.dim = 1;
  aug.left = {Matrix::identity(1), Matrix::identity(1)};
  aug.right = {Matrix::identity(1), Matrix::identity(1)};
  CHECK(check_bimodule(aug).all_ok());
  CHECK(!is_projective_module(aug, ModuleSide::left));
  CHECK(!is_projective_module(aug, ModuleSide::right));
}

TEST_CASE("enveloping algebra and bi-sided projectivity") {
  Field q(FieldSpec::rationals());
  Algebra a = group_algebra(cyclic_group(2), q);
  Algebra env = enveloping_algebra(a);
  CHECK(env.dim == 4);
  CHECK(check_algebra(env).all_ok());
  // Q[C2] is semisimple, so A is projective over A^e...
  CHECK(is_projective_module(regular_bimodule(a), ModuleSide::bi));
  // ...but F2[C2] is not (it has nonzero HH^1).
  Field f2(FieldSpec::prime(2));
  Algebra a2 = group_algebra(cyclic_group(2), f2);
  CHECK(!is_projective_module(regular_bimodule(a2), ModuleSide::bi));
}

TEST_CASE("verify_theorem end to end on C4/C2 over F3") {
  auto ca = make_zoo("c4-c2-f3");
  REQUIRE(ca.has_value());
  GaloisExtension ext = analyze_extension(*ca);
  TheoremReport rep =
      verify_theorem(ext, regular_bimodule(ca->a), 3, ResourceCaps{});
  CHECK(rep.h0_match);
  CHECK(rep.flat_left);
  CHECK(rep.flat_right);
  CHECK(rep.tables_match);
  // 2 is invertible mod 3, so F3[C2] is semisimple and higher degrees vanish
  CHECK(rep.table_psi.dims == std::vector<std::size_t>{4, 0, 0, 0});
  CHECK(rep.verified());
}

TEST_CASE("hom_free cochain spaces have the transported dimensions") {
  Field q(FieldSpec::rationals());
  Algebra a = group_algebra(cyclic_group(2), q);
  FreeBimoduleComplex fc = bar_resolution(a, 2);
  Bimodule m = regular_bimodule(a);
  CochainComplex cc = hom_free(fc, m);
  CHECK(cc.dims == std::vector<std::size_t>{2, 4, 8});
  CHECK(cc.diff.size() == 2);
  CHECK(cc.diff[0].rows() == 4);
  CHECK(cc.diff[0].cols() == 2);
}
