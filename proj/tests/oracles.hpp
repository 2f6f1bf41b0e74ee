#pragma once

// Independent oracles used by the unit and acceptance tests. These
// deliberately avoid the library's bar/entwined machinery: the truncated
// polynomial algebra k[y]/(y^2) has the well-known periodic bimodule
// resolution ... -> A^e -> A^e -> A, with maps alternating y (x) 1 - 1 (x) y
// and y (x) 1 + 1 (x) y, so HH^*(A, M) is the cohomology of
//   M --(ym - my)--> M --(ym + my)--> M --(ym - my)--> ...
// computed here directly.

#include <vector>

#include "entcoh/homology.hpp"

namespace entcoh::oracles {

/// HH^0..HH^n of k[y]/(y^2) with coefficients in a bimodule M over the
/// 2-dimensional truncated polynomial algebra (basis {1, y}).
inline std::vector<std::size_t> truncated_poly_hochschild(
    const Bimodule& m, std::size_t n_max) {
  const Field& f = m.over.field;
  Matrix minus = sub(f, m.left[1], m.right[1]);   // ym - my
  Matrix plus = add(f, m.left[1], m.right[1]);    // ym + my
  std::vector<std::size_t> ranks(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    ranks[n] = rank(f, n % 2 == 0 ? minus : plus);
  std::vector<std::size_t> h(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::size_t r_in = (n > 0) ? ranks[n - 1] : 0;
    h[n] = m.dim - ranks[n] - r_in;
  }
  return h;
}

/// dim{m in M : b m = m b for every b in B}, with B given by basis columns
/// inside A. This is the hands-on description of H^0 in both theories.
inline std::size_t commutant_dim(const Bimodule& m, const Matrix& b_basis) {
  const Field& f = m.over.field;
  Matrix stacked(0, m.dim);
  bool first = true;
  for (std::size_t j = 0; j < b_basis.cols(); ++j) {
    Vec b = b_basis.column(j);
    Matrix diff = sub(f, m.left_of(b), m.right_of(b));
    stacked = first ? diff : vstack(stacked, diff);
    first = false;
  }
  return m.dim - rank(f, stacked);
}

}  // namespace entcoh::oracles
