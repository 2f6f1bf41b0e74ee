#pragma once

#include "entcoh/algcore.hpp"

namespace entcoh {

/// Entwining structure (A, C, psi). psi is the matrix of a linear map
/// C (x) A -> A (x) C under the flat tensor index convention: column
/// flat(i, j) holds psi(c_i (x) e_j) in A (x) C coordinates (k, l).
struct Entwining {
  Algebra a;
  Coalgebra c;
  Matrix psi;
};

/// The four compatibility conditions, each checked as an exact identity of
/// linear maps on basis elements. Check names: "multiplicativity", "unit",
/// "comultiplicativity", "counit".
AxiomReport check_entwining(const Entwining& e,
                            std::size_t max_witnesses = kDefaultMaxWitnesses);

/// A (x) C as an A-bimodule: left action by multiplication on the A leg,
/// right action (a (x) c) . r = a . psi(c (x) r). Does not require the
/// entwining axioms to hold; compose with check_bimodule when that matters.
Bimodule ac_bimodule(const Entwining& e);

}  // namespace entcoh
