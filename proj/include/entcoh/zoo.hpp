#pragma once

#include <optional>

#include "entcoh/galois.hpp"

namespace entcoh {

/// Finite group by Cayley table. cayley[i][j] is the index of g_i g_j and
/// index 0 is the identity.
struct GroupPresentation {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> cayley;
};

void validate_group(const GroupPresentation& g);  // throws MalformedInput
GroupPresentation cyclic_group(std::size_t n);

bool is_subgroup(const GroupPresentation& g,
                 const std::vector<std::size_t>& subset);
bool is_normal_subgroup(const GroupPresentation& g,
                        const std::vector<std::size_t>& subset);

Algebra group_algebra(const GroupPresentation& g, const Field& field);

/// Group-like coalgebra on n elements: Delta(c) = c (x) c, eps(c) = 1.
Coalgebra grouplike_coalgebra(std::size_t n, const Field& field);

/// A = k[G], C = k[G/N], delta(x) = x (x) xN for a normal subgroup N.
/// The result is validated: the coaction passes its checker, the
/// coinvariants are k[N] and the extension is Galois.
ComoduleAlgebra quotient_coaction(const GroupPresentation& g,
                                  const std::vector<std::size_t>& normal_subgroup,
                                  const Field& field);

/// Sweedler's four-dimensional Hopf algebra H4 coacting on itself by its
/// comultiplication. Basis {1, g, x, gx}; g^2 = 1, x^2 = 0, xg = -gx.
/// Requires characteristic != 2.
ComoduleAlgebra sweedler_h4(const Field& field);

/// C = k, delta(a) = a (x) 1: B = A and the entwined cohomology is the
/// Hochschild cohomology of A.
ComoduleAlgebra trivial_extension(const Algebra& a);

/// Negative control: constant coaction delta(a) = a (x) c_0 into a
/// two-dimensional group-like coalgebra. Valid comodule, never Galois.
ComoduleAlgebra non_galois_example(const Field& field);

/// k[x]/(x^2): basis {1, x}, x^2 = 0.
Algebra truncated_polynomial_algebra(const Field& field);

/// Named zoo entries for the command line, e.g. "c4-c2", "c4-c2-f2",
/// "sweedler-h4", "trivial-x2", "trivial-x2-f2", "c4-full", "non-galois".
std::vector<std::string> zoo_names();
std::optional<ComoduleAlgebra> make_zoo(const std::string& name);

}  // namespace entcoh
