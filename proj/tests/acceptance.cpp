// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion states its runtime budget; elapsed times are printed so
// regressions are visible in the test log.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "entcoh/commands.hpp"
#include "entcoh/fuzz.hpp"
#include "entcoh/structure_io.hpp"
#include "entcoh/zoo.hpp"
#include "oracles.hpp"

using namespace entcoh;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget");
  }
  std::ostringstream line;
  line << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  ["
       << what << "]  (" << elapsed << "s / " << budget_seconds << "s)";
  if (!ok && !detail.empty()) line << "  -- " << detail;
  std::cout << line.str() << std::endl;
  if (!ok) ++g_failures;
}

bool tables_equal(const CohomologyTable& a,
                  const std::vector<std::size_t>& want, std::string& detail) {
  if (a.dims == want) return true;
  detail = "got (";
  for (std::size_t i = 0; i < a.dims.size(); ++i)
    detail += (i ? "," : "") + std::to_string(a.dims[i]);
  detail += ")";
  return false;
}

std::vector<std::string> galois_zoo_names() {
  std::vector<std::string> out;
  for (const auto& n : zoo_names())
    if (n.find("non-galois") == std::string::npos) out.push_back(n);
  return out;
}

}  // namespace

int main() {
  // 1. Axiom suite: all zoo structures pass; injected single-entry
  //    violations are detected with witnesses.
  criterion(1, "axiom suite with witnessed violations", 1.0,
            [](std::string& detail) {
    for (const auto& name : zoo_names()) {
      auto ca = make_zoo(name);
      if (!ca) { detail = "missing zoo entry " + name; return false; }
      if (!check_algebra(ca->a).all_ok() ||
          !check_coalgebra(ca->c).all_ok() ||
          !check_coaction(*ca).all_ok()) {
        detail = name + " fails its checkers";
        return false;
      }
    }
    // injected violations across every block type
    auto ca = *make_zoo("c4-c2");
    const Field& f = ca.a.field;
    Algebra bad_a = ca.a;
    bad_a.lmult[1].at(0, 1) = f.one();
    AxiomReport ra = check_algebra(bad_a);
    if (ra.all_ok() || ra.check("associativity").witnesses.empty()) {
      detail = "algebra violation missed";
      return false;
    }
    Coalgebra bad_c = ca.c;
    bad_c.counit[0] = f.zero();
    if (check_coalgebra(bad_c).all_ok()) {
      detail = "coalgebra violation missed";
      return false;
    }
    ComoduleAlgebra bad_co = ca;
    bad_co.coaction.at(1, 0) = f.one();
    if (check_coaction(bad_co).all_ok()) {
      detail = "coaction violation missed";
      return false;
    }
    GaloisExtension ext = analyze_extension(ca);
    Entwining bad_psi = canonical_psi(ext);
    bad_psi.psi.at(2, 3) = f.add(bad_psi.psi.at(2, 3), f.one());
    AxiomReport rp = check_entwining(bad_psi);
    if (rp.all_ok()) { detail = "entwining violation missed"; return false; }
    bool witnessed = false;
    for (const auto& c : rp.checks)
      if (!c.ok && !c.witnesses.empty()) witnessed = true;
    if (!witnessed) { detail = "no witness reported"; return false; }
    return true;
  });

  // 2. Galois pipeline on C4/C2.
  criterion(2, "C4/C2 Galois pipeline", 1.0, [](std::string& detail) {
    auto ca = *make_zoo("c4-c2");
    const Field& f = ca.a.field;
    GaloisExtension ext = analyze_extension(ca);
    if (ext.b_basis.cols() != 2 ||
        ext.b_basis.column(0) != Vec{f.one(), f.zero(), f.zero(), f.zero()} ||
        ext.b_basis.column(1) != Vec{f.zero(), f.zero(), f.one(), f.zero()}) {
      detail = "B != span{1, g^2}";
      return false;
    }
    if (ext.aba.dim != 8) { detail = "dim(A (x)_B A) != 8"; return false; }
    if (!ext.is_galois || rank(f, ext.beta) != 8) {
      detail = "beta not bijective";
      return false;
    }
    // gamma(c_1) = [g^3 (x) g]
    Vec g3g(16, f.zero());
    g3g[3 * 4 + 1] = f.one();
    if (apply(f, ext.aba.projection, g3g) != ext.gamma.column(1)) {
      detail = "gamma(c_1) != [g^3 (x) g]";
      return false;
    }
    // psi(c_i (x) g^k) = g^k (x) c_{(i+k) mod 2}
    Entwining psi = canonical_psi(ext);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 4; ++k) {
        Vec expect(8, f.zero());
        expect[k * 2 + (i + k) % 2] = f.one();
        if (psi.psi.column(i * 4 + k) != expect) {
          detail = "psi formula mismatch";
          return false;
        }
      }
    if (!check_beta_bimodule(ext)) { detail = "beta bimodule"; return false; }
    if (!check_translation_identity(ext)) {
      detail = "translation identity";
      return false;
    }
    return true;
  });

  // 3. Theorem, flat case, char 0.
  criterion(3, "C4/C2 over Q, M = A, degrees 0..3 -> (4,0,0,0)", 30.0,
            [](std::string& detail) {
    auto ca = *make_zoo("c4-c2");
    GaloisExtension ext = analyze_extension(ca);
    TheoremReport rep =
        verify_theorem(ext, regular_bimodule(ca.a), 3, ResourceCaps{});
    if (!rep.verified() || !rep.flatness_applies) {
      detail = "not verified";
      return false;
    }
    return tables_equal(rep.table_psi, {4, 0, 0, 0}, detail) &&
           tables_equal(rep.table_hh, {4, 0, 0, 0}, detail);
  });

  // 4. Theorem, flat case, char 2.
  criterion(4, "C4/C2 over F2, M = A, degrees 0..3 -> (4,4,4,4)", 30.0,
            [](std::string& detail) {
    auto ca = *make_zoo("c4-c2-f2");
    GaloisExtension ext = analyze_extension(ca);
    TheoremReport rep =
        verify_theorem(ext, regular_bimodule(ca.a), 3, ResourceCaps{});
    if (!rep.verified() || !rep.flatness_applies) {
      detail = "not verified";
      return false;
    }
    return tables_equal(rep.table_psi, {4, 4, 4, 4}, detail) &&
           tables_equal(rep.table_hh, {4, 4, 4, 4}, detail);
  });

  // 5. B = k: Sweedler H4 over Q.
  criterion(5, "Sweedler H4 over Q, M = A, degrees 0..2 -> (4,0,0)", 60.0,
            [](std::string& detail) {
    auto ca = *make_zoo("sweedler-h4");
    GaloisExtension ext = analyze_extension(ca);
    Bimodule m = regular_bimodule(ca.a);
    CohomologyTable ent =
        entwined_cohomology(canonical_psi(ext), m, 2, ResourceCaps{});
    if (!tables_equal(ent, {4, 0, 0}, detail)) return false;
    // HH^*(k, M): dim M in degree 0, zero above
    Bimodule mb = restrict_bimodule(m, ext.b_basis);
    CohomologyTable hh =
        hochschild_cohomology(ext.b_algebra, mb, 2, ResourceCaps{});
    return tables_equal(hh, {4, 0, 0}, detail);
  });

  // 6. Trivial extension consistency, both fields, against the periodic
  //    resolution oracle.
  criterion(6, "k[x]/(x^2): entwined == Hochschild == periodic oracle", 30.0,
            [](std::string& detail) {
    struct Case { const char* name; std::vector<std::size_t> want; };
    for (const Case& c : {Case{"trivial-x2", {2, 1, 1, 1}},
                          Case{"trivial-x2-f2", {2, 2, 2, 2}}}) {
      auto ca = *make_zoo(c.name);
      GaloisExtension ext = analyze_extension(ca);
      Bimodule m = regular_bimodule(ca.a);
      CohomologyTable ent =
          entwined_cohomology(canonical_psi(ext), m, 3, ResourceCaps{});
      CohomologyTable hh =
          hochschild_cohomology(ca.a, m, 3, ResourceCaps{});
      std::vector<std::size_t> oracle =
          oracles::truncated_poly_hochschild(m, 3);
      if (oracle != c.want) { detail = "oracle drifted"; return false; }
      if (!tables_equal(ent, c.want, detail) ||
          !tables_equal(hh, c.want, detail)) {
        detail = std::string(c.name) + ": " + detail;
        return false;
      }
    }
    return true;
  });

  // 7. H^0 without flatness: 200 random bimodules, dim H^0_psi equals the
  //    dimension of the B-commutant, computed directly.
  criterion(7, "H^0 = commutant on 200 random bimodules", 120.0,
            [](std::string& detail) {
    std::mt19937_64 rng(20240815);
    auto names = galois_zoo_names();
    std::size_t done = 0;
    while (done < 200) {
      const auto& name = names[done % names.size()];
      auto ca = *make_zoo(name);
      GaloisExtension ext = analyze_extension(ca);
      std::uniform_int_distribution<std::size_t> want_dim(1, 2 * ca.a.dim);
      Bimodule m = random_bimodule(ca.a, rng, want_dim(rng));
      CohomologyTable h0 = entwined_cohomology(canonical_psi(ext), m, 0,
                                               ResourceCaps{});
      std::size_t direct = oracles::commutant_dim(m, ext.b_basis);
      if (h0.dims[0] != direct) {
        detail = name + ": " + std::to_string(h0.dims[0]) +
                 " != " + std::to_string(direct);
        return false;
      }
      ++done;
    }
    return true;
  });

  // 8. Two-route transport: entwined complex vs the A (x)_B A complex.
  criterion(8, "entwined vs quotient-complex tables, degrees 0..3", 120.0,
            [](std::string& detail) {
    for (const auto& name : galois_zoo_names()) {
      auto ca = *make_zoo(name);
      GaloisExtension ext = analyze_extension(ca);
      Bimodule m = regular_bimodule(ca.a);
      CohomologyTable ent = entwined_cohomology(canonical_psi(ext), m, 3,
                                                ResourceCaps{});
      CohomologyTable quo = quotient_cohomology(ext, m, 3, ResourceCaps{});
      if (ent.dims != quo.dims) {
        detail = name + ": route disagreement";
        return false;
      }
    }
    return true;
  });

  // 9. Exactness of the augmented bar and entwined complexes. The verified
  //    range per example is the largest whose degree-(up_to + 1) rank
  //    computation stays inside the dense exact-arithmetic budget.
  criterion(9, "augmented complexes are exact in computed degrees", 300.0,
            [](std::string& detail) {
    for (const auto& name : zoo_names()) {
      auto ca = *make_zoo(name);
      std::size_t up_to = ca.a.dim <= 2 ? 3 : 2;
      FreeBimoduleComplex bar = bar_resolution(ca.a, up_to + 1);
      if (!augmented_complex_exact(bar, up_to)) {
        detail = name + ": bar complex not exact";
        return false;
      }
    }
    for (const auto& name : galois_zoo_names()) {
      auto ca = *make_zoo(name);
      GaloisExtension ext = analyze_extension(ca);
      Entwining psi = canonical_psi(ext);
      std::size_t up_to = ca.a.dim * ca.c.dim <= 4 ? 3 : 1;
      FreeBimoduleComplex ent = entwined_complex(psi, up_to + 1);
      if (!augmented_complex_exact(ent, up_to)) {
        detail = name + ": entwined complex not exact";
        return false;
      }
    }
    return true;
  });

  // 10. Flat/projective splitting-system tests.
  criterion(10, "projectivity: Q[C4] over span{1,g^2}; F2[C2] augmentation",
            30.0, [](std::string& detail) {
    Field q(FieldSpec::rationals());
    Algebra a = group_algebra(cyclic_group(4), q);
    Matrix b_basis(4, 2);
    b_basis.at(0, 0) = q.one();
    b_basis.at(2, 1) = q.one();
    Bimodule a_over_b = restrict_bimodule(regular_bimodule(a), b_basis);
    if (!is_projective_module(a_over_b, ModuleSide::left) ||
        !is_projective_module(a_over_b, ModuleSide::right)) {
      detail = "Q[C4] should be projective over Q[C2]";
      return false;
    }
    Field f2(FieldSpec::prime(2));
    Algebra b = group_algebra(cyclic_group(2), f2);
    Bimodule aug;
    aug.over = b;
    aug.dim = 1;
    aug.left = {Matrix::identity(1), Matrix::identity(1)};
    aug.right = {Matrix::identity(1), Matrix::identity(1)};
    if (is_projective_module(aug, ModuleSide::left)) {
      detail = "F2 augmentation module wrongly projective";
      return false;
    }
    return true;
  });

  // 11. Fuzz: fixed seeds, zero findings; perturbed mode flags >= 95/100.
  criterion(11, "fuzz 100x(2,2) + 100x(2,3) clean; perturbed >= 95 flagged",
            60.0, [](std::string& detail) {
    FuzzOptions opt;
    opt.dim_a = 2; opt.dim_c = 2; opt.trials = 100; opt.seed = 1;
    if (run_fuzz(opt).failures != 0) { detail = "(2,2) findings"; return false; }
    opt.dim_c = 3;
    if (run_fuzz(opt).failures != 0) { detail = "(2,3) findings"; return false; }
    opt.dim_a = 4; opt.dim_c = 2; opt.perturb_psi = true; opt.seed = 2;
    FuzzResult pres = run_fuzz(opt);
    std::size_t flagged = pres.trials_run - pres.failures;
    if (flagged < 95) {
      detail = "only " + std::to_string(flagged) + " flagged";
      return false;
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: failures present")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
