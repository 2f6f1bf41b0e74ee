#include "entcoh/fuzz.hpp"

#include <algorithm>

#include "entcoh/zoo.hpp"

namespace entcoh {

namespace {

Field field_for_trial(std::size_t trial) {
  switch (trial % 3) {
    case 0: return Field(FieldSpec::rationals());
    case 1: return Field(FieldSpec::prime(2));
    default: return Field(FieldSpec::prime(3));
  }
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = f.from_long(entry(rng));
    if (rank(f, m) == n) return m;
  }
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> d;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

// One positive trial; returns an empty string on success, otherwise a
// description of the first property that failed.
std::string galois_trial(std::size_t order, std::size_t fiber,
                         const Field& f) {
  GroupPresentation g = cyclic_group(order);
  // subgroup = multiples of `fiber`, so the quotient has `fiber` cosets
  std::vector<std::size_t> subgroup;
  for (std::size_t x = 0; x < order; x += fiber) subgroup.push_back(x);
  ComoduleAlgebra ca;
  try {
    ca = quotient_coaction(g, subgroup, f);
  } catch (const Error& e) {
    return std::string("construction failed: ") + e.what();
  }
  GaloisExtension ext = analyze_extension(ca);
  if (!ext.is_galois) return "extension not Galois";
  if (!check_beta_bimodule(ext)) return "beta is not a bimodule map";
  if (!check_translation_identity(ext)) return "translation identity fails";
  Entwining psi = canonical_psi(ext);
  AxiomReport rep = check_entwining(psi);
  if (!rep.all_ok()) {
    for (const auto& c : rep.checks)
      if (!c.ok) return "entwining axiom '" + c.name + "' fails";
  }
  ResourceCaps caps;
  CohomologyTable tp =
      entwined_cohomology(psi, regular_bimodule(ca.a), 0, caps);
  Bimodule mb =
      restrict_bimodule(regular_bimodule(ca.a), ext.b_basis);
  CohomologyTable th = hochschild_cohomology(ext.b_algebra, mb, 0, caps);
  if (tp.dims[0] != th.dims[0])
    return "h^0 disagreement: " + std::to_string(tp.dims[0]) + " vs " +
           std::to_string(th.dims[0]);
  return "";
}

// Shrink a failing coaction by zeroing entries while the failure persists.
std::string shrink_report(const ComoduleAlgebra& start,
                          const std::string& first_failure) {
  ComoduleAlgebra ca = start;
  auto still_fails = [](const ComoduleAlgebra& c) -> bool {
    try {
      GaloisExtension ext = analyze_extension(c);
      if (!ext.is_galois) return true;
      return !check_entwining(canonical_psi(ext)).all_ok();
    } catch (const Error&) {
      return true;
    }
  };
  std::size_t kept = 0;
  for (std::size_t r = 0; r < ca.coaction.rows(); ++r)
    for (std::size_t c = 0; c < ca.coaction.cols(); ++c) {
      if (Field::is_zero(ca.coaction.at(r, c))) continue;
      Scalar saved = ca.coaction.at(r, c);
      ca.coaction.at(r, c) = Scalar(0);
      if (!still_fails(ca)) {
        ca.coaction.at(r, c) = saved;
        ++kept;
      }
    }
  return first_failure + " (shrunk witness: " + std::to_string(kept) +
         " essential coaction entries)";
}

}  // namespace

Bimodule random_bimodule(const Algebra& a, std::mt19937_64& rng,
                         std::size_t min_dim) {
  const Field& f = a.field;
  std::size_t copies = (min_dim + a.dim - 1) / a.dim;
  if (copies == 0) copies = 1;
  std::size_t dim = copies * a.dim;
  Bimodule reg = regular_bimodule(a);
  Bimodule m;
  m.over = a;
  m.dim = dim;
  m.left.assign(a.dim, Matrix(dim, dim));
  m.right.assign(a.dim, Matrix(dim, dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t s = 0; s < a.dim; ++s) {
          m.left[i].at(c * a.dim + r, c * a.dim + s) = reg.left[i].at(r, s);
          m.right[i].at(c * a.dim + r, c * a.dim + s) = reg.right[i].at(r, s);
        }
  Matrix p = random_invertible(f, dim, rng);
  Matrix pinv = *solve_matrix(f, p, Matrix::identity(dim));
  for (std::size_t i = 0; i < a.dim; ++i) {
    m.left[i] = mul(f, p, mul(f, m.left[i], pinv));
    m.right[i] = mul(f, p, mul(f, m.right[i], pinv));
  }
  return m;
}

FuzzResult run_fuzz(const FuzzOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  FuzzResult result;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Field f = field_for_trial(t);
    std::uniform_int_distribution<std::size_t> pick_order(2, opt.dim_a);
    std::size_t order = pick_order(rng);
    auto divs = divisors(order);
    // fiber = size of the quotient group the coalgebra lives on
    std::vector<std::size_t> fibers;
    for (auto d : divs)
      if (d <= opt.dim_c || d == 1) fibers.push_back(d);
    std::uniform_int_distribution<std::size_t> pick_fiber(0, fibers.size() - 1);
    std::size_t fiber = fibers[pick_fiber(rng)];
    result.trials_run++;

    if (!opt.perturb_psi) {
      std::string failure = galois_trial(order, fiber, f);
      if (!failure.empty()) {
        result.failures++;
        GroupPresentation g = cyclic_group(order);
        std::vector<std::size_t> subgroup;
        for (std::size_t x = 0; x < order; x += fiber) subgroup.push_back(x);
        std::string line = "trial " + std::to_string(t) + " (order " +
                           std::to_string(order) + ", fiber " +
                           std::to_string(fiber) + "): " + failure;
        try {
          ComoduleAlgebra ca = quotient_coaction(g, subgroup, f);
          line = shrink_report(ca, line);
        } catch (const Error&) {
          // construction itself failed; nothing to shrink
        }
        result.reports.push_back(line);
      }
      continue;
    }

    // Perturb mode: canonical psi of a valid extension with one entry bumped
    // must fail at least one axiom.
    GroupPresentation g = cyclic_group(order);
    std::vector<std::size_t> subgroup;
    for (std::size_t x = 0; x < order; x += fiber) subgroup.push_back(x);
    ComoduleAlgebra ca = quotient_coaction(g, subgroup, f);
    GaloisExtension ext = analyze_extension(ca);
    Entwining psi = canonical_psi(ext);
    std::uniform_int_distribution<std::size_t> pr(0, psi.psi.rows() - 1);
    std::uniform_int_distribution<std::size_t> pc(0, psi.psi.cols() - 1);
    std::size_t r = pr(rng), c = pc(rng);
    psi.psi.at(r, c) = f.add(psi.psi.at(r, c), f.one());
    if (check_entwining(psi).all_ok()) {
      result.failures++;
      result.reports.push_back(
          "trial " + std::to_string(t) + ": perturbed psi entry (" +
          std::to_string(r) + "," + std::to_string(c) +
          ") passed every axiom");
    }
  }
  return result;
}

}  // namespace entcoh
