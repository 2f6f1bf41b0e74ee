#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "entcoh/matrix.hpp"

namespace entcoh {

/// Flat index of e_i (x) e_j in V (x) W with dim(W) = dim_second.
/// Nested tensor factors associate left to right.
inline std::size_t flat_index(std::size_t i, std::size_t j,
                              std::size_t dim_second) {
  return i * dim_second + j;
}

inline std::pair<std::size_t, std::size_t> unflat_index(
    std::size_t flat, std::size_t dim_second) {
  return {flat / dim_second, flat % dim_second};
}

/// Finite-dimensional unital associative algebra by structure constants.
/// lmult[i] is the matrix of left multiplication by e_i, so
/// lmult[i](k, j) = coefficient of e_k in e_i * e_j.
struct Algebra {
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> lmult;
  Vec unit;

  Vec basis_product(std::size_t i, std::size_t j) const {
    return lmult[i].column(j);
  }
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of left multiplication by the element with coefficients x.
  Matrix left_action_of(const Vec& x) const;
  /// Matrix of v |-> v * e_j.
  Matrix right_mult(std::size_t j) const;

  bool same_structure(const Algebra& o) const {
    return field == o.field && dim == o.dim && lmult == o.lmult &&
           unit == o.unit;
  }
};

/// Coassociative counital coalgebra. comult[i](j, k) = coefficient of
/// c_j (x) c_k in Delta(c_i).
struct Coalgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> comult;
  Vec counit;

  /// Delta as a (dim*dim) x dim matrix under the tensor index convention.
  Matrix comult_map() const;
};

/// Bimodule over an algebra: left[i] and right[i] are the matrices of
/// e_i * m and m * e_i on the module.
struct Bimodule {
  Algebra over;
  std::size_t dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  Matrix left_of(const Vec& a) const;
  Matrix right_of(const Vec& a) const;
};

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::vector<std::string> witnesses;  // capped, for debuggability
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const AxiomCheck& check(const std::string& name) const;
};

inline constexpr std::size_t kDefaultMaxWitnesses = 5;

AxiomReport check_algebra(const Algebra& a,
                          std::size_t max_witnesses = kDefaultMaxWitnesses);
AxiomReport check_coalgebra(const Coalgebra& c,
                            std::size_t max_witnesses = kDefaultMaxWitnesses);
AxiomReport check_bimodule(const Bimodule& m,
                           std::size_t max_witnesses = kDefaultMaxWitnesses);

/// A as a bimodule over itself by multiplication.
Bimodule regular_bimodule(const Algebra& a);

/// Structure constants of the unital subalgebra spanned by the columns of
/// `basis` (columns are elements of A in coordinates). Validates independence,
/// closure under multiplication and membership of the unit.
Algebra subalgebra_from_basis(const Algebra& a, const Matrix& basis);

/// Restrict an A-bimodule to a B-bimodule along an inclusion of a unital
/// subalgebra given by a basis matrix.
Bimodule restrict_bimodule(const Bimodule& m, const Matrix& inclusion);

}  // namespace entcoh
