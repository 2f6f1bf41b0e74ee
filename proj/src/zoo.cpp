#include "entcoh/zoo.hpp"

#include <algorithm>
#include <map>

namespace entcoh {

void validate_group(const GroupPresentation& g) {
  const std::size_t n = g.order;
  if (n == 0 || g.cayley.size() != n)
    throw MalformedInput("group: table shape");
  for (const auto& row : g.cayley) {
    if (row.size() != n) throw MalformedInput("group: table shape");
    for (auto v : row)
      if (v >= n) throw MalformedInput("group: index out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.cayley[0][i] != i || g.cayley[i][0] != i)
      throw MalformedInput("group: index 0 is not an identity");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.cayley[g.cayley[i][j]][k] != g.cayley[i][g.cayley[j][k]])
          throw MalformedInput("group: table is not associative");
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j)
      if (g.cayley[i][j] == 0 && g.cayley[j][i] == 0) has_inverse = true;
    if (!has_inverse) throw MalformedInput("group: missing inverse");
  }
}

GroupPresentation cyclic_group(std::size_t n) {
  GroupPresentation g;
  g.order = n;
  g.cayley.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.cayley[i][j] = (i + j) % n;
  return g;
}

bool is_subgroup(const GroupPresentation& g,
                 const std::vector<std::size_t>& subset) {
  if (std::find(subset.begin(), subset.end(), 0u) == subset.end())
    return false;
  for (auto x : subset)
    for (auto y : subset) {
      if (x >= g.order || y >= g.order) return false;
      if (std::find(subset.begin(), subset.end(), g.cayley[x][y]) ==
          subset.end())
        return false;
    }
  return true;
}

bool is_normal_subgroup(const GroupPresentation& g,
                        const std::vector<std::size_t>& subset) {
  if (!is_subgroup(g, subset)) return false;
  for (std::size_t x = 0; x < g.order; ++x) {
    std::size_t xinv = 0;
    for (std::size_t j = 0; j < g.order; ++j)
      if (g.cayley[x][j] == 0) xinv = j;
    for (auto n : subset) {
      std::size_t conj = g.cayley[g.cayley[x][n]][xinv];
      if (std::find(subset.begin(), subset.end(), conj) == subset.end())
        return false;
    }
  }
  return true;
}

Algebra group_algebra(const GroupPresentation& g, const Field& field) {
  validate_group(g);
  Algebra a;
  a.field = field;
  a.dim = g.order;
  a.lmult.assign(a.dim, Matrix(a.dim, a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      a.lmult[i].at(g.cayley[i][j], j) = field.one();
  a.unit.assign(a.dim, Scalar(0));
  a.unit[0] = field.one();
  return a;
}

Coalgebra grouplike_coalgebra(std::size_t n, const Field& field) {
  if (n == 0) throw MalformedInput("grouplike coalgebra needs n >= 1");
  Coalgebra c;
  c.field = field;
  c.dim = n;
  c.comult.assign(n, Matrix(n, n));
  c.counit.assign(n, field.one());
  for (std::size_t i = 0; i < n; ++i) c.comult[i].at(i, i) = field.one();
  return c;
}

namespace {

// Coset labels for G/N: label[x] in [0, #cosets), identity coset first.
std::vector<std::size_t> coset_labels(const GroupPresentation& g,
                                      const std::vector<std::size_t>& n,
                                      std::size_t& coset_count) {
  std::vector<std::size_t> label(g.order, g.order);
  std::size_t next = 0;
  for (std::size_t x = 0; x < g.order; ++x) {
    if (label[x] != g.order) continue;
    for (auto h : n) label[g.cayley[x][h]] = next;
    ++next;
  }
  coset_count = next;
  return label;
}

void require_galois(const ComoduleAlgebra& ca, const std::string& what) {
  GaloisExtension ext = analyze_extension(ca);
  if (!ext.is_galois)
    throw InternalError(what + ": constructed extension is not Galois");
}

}  // namespace

ComoduleAlgebra quotient_coaction(const GroupPresentation& g,
                                  const std::vector<std::size_t>& normal_subgroup,
                                  const Field& field) {
  if (!is_normal_subgroup(g, normal_subgroup))
    throw MalformedInput("quotient coaction needs a normal subgroup");
  std::size_t cosets = 0;
  auto label = coset_labels(g, normal_subgroup, cosets);
  ComoduleAlgebra ca;
  ca.a = group_algebra(g, field);
  ca.c = grouplike_coalgebra(cosets, field);
  ca.coaction = Matrix(g.order * cosets, g.order);
  for (std::size_t x = 0; x < g.order; ++x)
    ca.coaction.at(flat_index(x, label[x], cosets), x) = field.one();
  require_galois(ca, "quotient_coaction");
  return ca;
}

ComoduleAlgebra sweedler_h4(const Field& field) {
  if (field.characteristic() == 2)
    throw MalformedInput("Sweedler H4 needs characteristic != 2");
  const Field& f = field;
  // Basis order: 1, g, x, gx.
  Algebra a;
  a.field = f;
  a.dim = 4;
  a.lmult.assign(4, Matrix(4, 4));
  a.unit = {f.one(), f.zero(), f.zero(), f.zero()};
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    a.lmult[i].at(k, j) = f.from_long(v);
  };
  // 1 * e_j and e_i * 1
  for (std::size_t j = 0; j < 4; ++j) set(0, j, j, 1);
  set(1, 0, 1, 1);                     // g * 1 = g
  set(1, 1, 0, 1);                     // g * g = 1
  set(1, 2, 3, 1);                     // g * x = gx
  set(1, 3, 2, 1);                     // g * gx = x
  set(2, 0, 2, 1);                     // x * 1 = x
  set(2, 1, 3, -1);                    // x * g = -gx
  // x * x = 0, x * gx = 0
  set(3, 0, 3, 1);                     // gx * 1 = gx
  set(3, 1, 2, -1);                    // gx * g = -x
  // gx * x = 0, gx * gx = 0

  Coalgebra c;
  c.field = f;
  c.dim = 4;
  c.comult.assign(4, Matrix(4, 4));
  c.counit = {f.one(), f.one(), f.zero(), f.zero()};
  c.comult[0].at(0, 0) = f.one();              // Delta 1 = 1 (x) 1
  c.comult[1].at(1, 1) = f.one();              // Delta g = g (x) g
  c.comult[2].at(2, 0) = f.one();              // Delta x = x (x) 1 + g (x) x
  c.comult[2].at(1, 2) = f.one();
  c.comult[3].at(3, 1) = f.one();              // Delta gx = gx (x) g + 1 (x) gx
  c.comult[3].at(0, 3) = f.one();

  ComoduleAlgebra ca;
  ca.a = a;
  ca.c = c;
  ca.coaction = c.comult_map();
  require_galois(ca, "sweedler_h4");
  return ca;
}

ComoduleAlgebra trivial_extension(const Algebra& a) {
  ComoduleAlgebra ca;
  ca.a = a;
  ca.c = grouplike_coalgebra(1, a.field);
  ca.coaction = Matrix::identity(a.dim);
  return ca;
}

ComoduleAlgebra non_galois_example(const Field& field) {
  ComoduleAlgebra ca;
  ca.a = group_algebra(cyclic_group(2), field);
  ca.c = grouplike_coalgebra(2, field);
  ca.coaction = Matrix(ca.a.dim * 2, ca.a.dim);
  for (std::size_t x = 0; x < ca.a.dim; ++x)
    ca.coaction.at(flat_index(x, std::size_t{0}, std::size_t{2}), x) =
        field.one();
  return ca;
}

Algebra truncated_polynomial_algebra(const Field& field) {
  Algebra a;
  a.field = field;
  a.dim = 2;
  a.lmult.assign(2, Matrix(2, 2));
  a.lmult[0] = Matrix::identity(2);
  a.lmult[1].at(1, 0) = field.one();  // x * 1 = x; x * x = 0
  a.unit = {field.one(), field.zero()};
  return a;
}

std::vector<std::string> zoo_names() {
  return {"c4-c2",   "c4-c2-f2",   "c4-c2-f3", "c4-full",  "c4-trivial",
          "sweedler-h4", "trivial-x2", "trivial-x2-f2", "non-galois",
          "non-galois-f2"};
}

std::optional<ComoduleAlgebra> make_zoo(const std::string& name) {
  Field q(FieldSpec::rationals());
  Field f2(FieldSpec::prime(2));
  Field f3(FieldSpec::prime(3));
  if (name == "c4-c2")
    return quotient_coaction(cyclic_group(4), {0, 2}, q);
  if (name == "c4-c2-f2")
    return quotient_coaction(cyclic_group(4), {0, 2}, f2);
  if (name == "c4-c2-f3")
    return quotient_coaction(cyclic_group(4), {0, 2}, f3);
  if (name == "c4-full")
    return quotient_coaction(cyclic_group(4), {0}, q);
  if (name == "c4-trivial")
    return quotient_coaction(cyclic_group(4), {0, 1, 2, 3}, q);
  if (name == "sweedler-h4") return sweedler_h4(q);
  if (name == "trivial-x2")
    return trivial_extension(truncated_polynomial_algebra(q));
  if (name == "trivial-x2-f2")
    return trivial_extension(truncated_polynomial_algebra(f2));
  if (name == "non-galois") return non_galois_example(q);
  if (name == "non-galois-f2") return non_galois_example(f2);
  return std::nullopt;
}

}  // namespace entcoh
