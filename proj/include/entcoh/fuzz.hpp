#pragma once

#include <cstdint>
#include <random>

#include "entcoh/homology.hpp"

namespace entcoh {

struct FuzzOptions {
  std::size_t dim_a = 4;
  std::size_t dim_c = 2;    // upper bound; actual fiber size varies per trial
  std::size_t trials = 25;
  std::uint64_t seed = 1;
  bool perturb_psi = false;  // negative mode: break one psi entry, expect
                             // an axiom failure
};

struct FuzzResult {
  std::size_t trials_run = 0;
  std::size_t failures = 0;
  std::vector<std::string> reports;  // one line per failure, shrunk
};

/// Randomized consistency testing. Positive mode: random group-algebra
/// extensions (cyclic groups, quotient coactions, fields rotating through
/// the rationals, F_2 and F_3); asserts the Galois analysis, the canonical
/// entwining axioms, the beta bimodule property, the translation identity
/// and degree-0 agreement with the coinvariant Hochschild cohomology.
/// Perturb mode: a valid canonical psi with one random entry changed must
/// fail at least one entwining axiom.
FuzzResult run_fuzz(const FuzzOptions& opt);

/// Random A-bimodule: direct sum of copies of the regular bimodule,
/// conjugated by a random invertible change of basis. Valid by construction;
/// dimension is the smallest multiple of dim(A) >= min_dim.
Bimodule random_bimodule(const Algebra& a, std::mt19937_64& rng,
                         std::size_t min_dim);

}  // namespace entcoh
