#pragma once

#include "entcoh/entwine.hpp"

namespace entcoh {

/// Algebra with a right coaction delta: A -> A (x) C. The coaction matrix has
/// dim(A)*dim(C) rows (tensor index convention) and dim(A) columns.
struct ComoduleAlgebra {
  Algebra a;
  Coalgebra c;
  Matrix coaction;
};

/// Comodule axioms: (id (x) eps) delta = id and
/// (delta (x) id) delta = (id (x) Delta) delta.
AxiomReport check_coaction(const ComoduleAlgebra& ca,
                           std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Basis of the coinvariant subalgebra B = {b : delta(b a) = b delta(a) for
/// all a}, as columns in A coordinates. The result is validated to span a
/// unital subalgebra.
Matrix coinvariants(const ComoduleAlgebra& ca);

/// A (x)_B A realized as a quotient of A (x) A by standard basis cosets.
struct QuotientSpace {
  std::size_t dim = 0;
  Matrix projection;  // dim x dim(A)^2
  Matrix section;     // dim(A)^2 x dim
  std::vector<std::size_t> representatives;
};

QuotientSpace tensor_over_coinvariants(const ComoduleAlgebra& ca,
                                       const Matrix& b_basis);

/// The whole Galois pipeline for one comodule algebra. gamma and the
/// entwining are only available when is_galois holds.
struct GaloisExtension {
  ComoduleAlgebra base;
  Matrix b_basis;      // dim(A) x dim(B)
  Algebra b_algebra;   // structure constants of B in the b_basis coordinates
  QuotientSpace aba;   // A (x)_B A
  Matrix beta;         // dim(A)*dim(C) x aba.dim
  bool is_galois = false;
  Matrix gamma;        // aba.dim x dim(C), empty unless is_galois
  // Multiplication on the quotient: q_left[i] is the matrix of
  // e_i * (-), q_right[j] of (-) * e_j on A (x)_B A coordinates.
  std::vector<Matrix> q_left;
  std::vector<Matrix> q_right;
};

GaloisExtension analyze_extension(const ComoduleAlgebra& ca);

/// beta(a (x) a') = a a'_0 (x) a'_1 induced on A (x)_B A, plus the Galois
/// flag (beta bijective). Verifies first that the lift kills every relation.
std::pair<Matrix, bool> galois_beta(const ComoduleAlgebra& ca,
                                    const Matrix& b_basis,
                                    const QuotientSpace& aba);

/// The translation map gamma = beta^{-1} (eta (x) id). Requires is_galois.
Matrix translation_gamma(const GaloisExtension& ext);

/// Canonical entwining psi(c (x) a) = beta(gamma(c) a). Requires is_galois.
Entwining canonical_psi(const GaloisExtension& ext);

/// beta is a map of A-bimodules (both actions checked on all basis pairs).
bool check_beta_bimodule(const GaloisExtension& ext);

/// a_0 l(a_1) (x) r(a_1) = 1 (x) a for every basis element a of A.
bool check_translation_identity(const GaloisExtension& ext);

}  // namespace entcoh
