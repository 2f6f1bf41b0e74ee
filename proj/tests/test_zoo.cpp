#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcoh/fuzz.hpp"
#include "entcoh/zoo.hpp"

using namespace entcoh;

TEST_CASE("group validation") {
  GroupPresentation c4 = cyclic_group(4);
  validate_group(c4);  // throws on failure
  CHECK(is_subgroup(c4, {0, 2}));
  CHECK(is_normal_subgroup(c4, {0, 2}));
  CHECK(!is_subgroup(c4, {0, 1}));  // 1 + 1 = 2 not in the set

  GroupPresentation bad = c4;
  bad.cayley[1][1] = 1;  // g * g = g breaks associativity/cancellation
  CHECK_THROWS_AS(validate_group(bad), MalformedInput);

  GroupPresentation no_id = c4;
  no_id.cayley[0][1] = 2;
  CHECK_THROWS_AS(validate_group(no_id), MalformedInput);
}

TEST_CASE("every zoo entry is well formed") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    auto ca = make_zoo(name);
    REQUIRE(ca.has_value());
    CHECK(check_algebra(ca->a).all_ok());
    CHECK(check_coalgebra(ca->c).all_ok());
    CHECK(check_coaction(*ca).all_ok());
  }
  CHECK(!make_zoo("no-such-entry").has_value());
}

TEST_CASE("zoo Galois flags") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    auto ca = make_zoo(name);
    REQUIRE(ca.has_value());
    GaloisExtension ext = analyze_extension(*ca);
    bool expect_galois = name.find("non-galois") == std::string::npos;
    CHECK(ext.is_galois == expect_galois);
  }
}

TEST_CASE("sweedler H4 rejects characteristic 2") {
  CHECK_THROWS_AS(sweedler_h4(Field(FieldSpec::prime(2))), MalformedInput);
}

TEST_CASE("quotient coaction rejects non-normal input") {
  GroupPresentation c4 = cyclic_group(4);
  Field q(FieldSpec::rationals());
  CHECK_THROWS_AS(quotient_coaction(c4, {0, 1}, q), MalformedInput);
}

TEST_CASE("random bimodules are valid and seed-stable") {
  Field q(FieldSpec::rationals());
  Algebra a = group_algebra(cyclic_group(2), q);
  std::mt19937_64 rng(42);
  Bimodule m = random_bimodule(a, rng, 3);
  CHECK(m.dim == 4);  // rounded up to a multiple of dim(A)
  CHECK(check_bimodule(m).all_ok());

  std::mt19937_64 rng2(42);
  Bimodule m2 = random_bimodule(a, rng2, 3);
  CHECK(m.left == m2.left);
  CHECK(m.right == m2.right);
}

TEST_CASE("fuzz: positive and perturbed modes") {
  FuzzOptions opt;
  opt.dim_a = 2;
  opt.dim_c = 2;
  opt.trials = 20;
  opt.seed = 5;
  FuzzResult res = run_fuzz(opt);
  CHECK(res.trials_run == 20);
  CHECK(res.failures == 0);

  opt.perturb_psi = true;
  opt.dim_a = 4;
  FuzzResult pres = run_fuzz(opt);
  CHECK(pres.trials_run == 20);
  // every undetected perturbation would be a finding
  CHECK(pres.failures == 0);

  opt.trials = 0;
  FuzzResult empty = run_fuzz(opt);
  CHECK(empty.trials_run == 0);
  CHECK(empty.failures == 0);
}
