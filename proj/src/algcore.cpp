#include "entcoh/algcore.hpp"

#include <sstream>

namespace entcoh {

namespace {

void note_failure(AxiomCheck& check, std::size_t max_witnesses,
                  const std::string& witness) {
  check.ok = false;
  if (check.witnesses.size() < max_witnesses) check.witnesses.push_back(witness);
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

std::string pair_str(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

}  // namespace

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim)
    throw MalformedInput("algebra multiply: element length");
  Vec r(dim, Scalar(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (Field::is_zero(x[i])) continue;
    Vec part = apply(field, lmult[i], y);
    for (std::size_t k = 0; k < dim; ++k)
      r[k] = field.add(r[k], field.mul(x[i], part[k]));
  }
  return r;
}

Matrix Algebra::left_action_of(const Vec& x) const {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (Field::is_zero(x[i])) continue;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        m.at(r, c) = field.add(m.at(r, c), field.mul(x[i], lmult[i].at(r, c)));
  }
  return m;
}

Matrix Algebra::right_mult(std::size_t j) const {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec p = basis_product(i, j);  // e_i * e_j
    for (std::size_t k = 0; k < dim; ++k) m.at(k, i) = p[k];
  }
  return m;
}

Matrix Coalgebra::comult_map() const {
  Matrix d(dim * dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        d.at(flat_index(j, k, dim), i) = comult[i].at(j, k);
  return d;
}

Matrix Bimodule::left_of(const Vec& a) const {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Field::is_zero(a[i])) continue;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        m.at(r, c) =
            over.field.add(m.at(r, c), over.field.mul(a[i], left[i].at(r, c)));
  }
  return m;
}

Matrix Bimodule::right_of(const Vec& a) const {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Field::is_zero(a[i])) continue;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        m.at(r, c) =
            over.field.add(m.at(r, c), over.field.mul(a[i], right[i].at(r, c)));
  }
  return m;
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InternalError("no axiom check named " + name);
}

AxiomReport check_algebra(const Algebra& a, std::size_t max_witnesses) {
  if (a.lmult.size() != a.dim || a.unit.size() != a.dim)
    throw MalformedInput("algebra tables: wrong shape");
  for (const auto& m : a.lmult)
    if (m.rows() != a.dim || m.cols() != a.dim)
      throw MalformedInput("algebra tables: wrong shape");

  AxiomReport report;
  AxiomCheck assoc{"associativity"};
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec ei(a.dim, Scalar(0));
    ei[i] = a.field.one();
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < a.dim; ++k) {
        Vec ek(a.dim, Scalar(0));
        ek[k] = a.field.one();
        Vec lhs = a.multiply(ij, ek);
        Vec rhs = a.multiply(ei, a.basis_product(j, k));
        if (lhs != rhs) note_failure(assoc, max_witnesses, triple(i, j, k));
      }
    }
  }
  report.checks.push_back(assoc);

  AxiomCheck unit{"unit"};
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec ei(a.dim, Scalar(0));
    ei[i] = a.field.one();
    if (a.multiply(a.unit, ei) != ei || a.multiply(ei, a.unit) != ei)
      note_failure(unit, max_witnesses, "(" + std::to_string(i) + ")");
  }
  report.checks.push_back(unit);
  return report;
}

AxiomReport check_coalgebra(const Coalgebra& c, std::size_t max_witnesses) {
  if (c.comult.size() != c.dim || c.counit.size() != c.dim)
    throw MalformedInput("coalgebra tables: wrong shape");
  for (const auto& m : c.comult)
    if (m.rows() != c.dim || m.cols() != c.dim)
      throw MalformedInput("coalgebra tables: wrong shape");
  const Field& f = c.field;

  AxiomReport report;
  AxiomCheck coassoc{"coassociativity"};
  // Coefficient of c_x (x) c_y (x) c_z in both associations of Delta^2(c_i).
  for (std::size_t i = 0; i < c.dim; ++i) {
    bool bad = false;
    for (std::size_t x = 0; x < c.dim && !bad; ++x)
      for (std::size_t y = 0; y < c.dim && !bad; ++y)
        for (std::size_t z = 0; z < c.dim && !bad; ++z) {
          Scalar lhs(0), rhs(0);
          for (std::size_t j = 0; j < c.dim; ++j) {
            lhs = f.add(lhs, f.mul(c.comult[i].at(j, z), c.comult[j].at(x, y)));
            rhs = f.add(rhs, f.mul(c.comult[i].at(x, j), c.comult[j].at(y, z)));
          }
          if (lhs != rhs) bad = true;
        }
    if (bad) note_failure(coassoc, max_witnesses, "(" + std::to_string(i) + ")");
  }
  report.checks.push_back(coassoc);

  AxiomCheck counit{"counit"};
  for (std::size_t i = 0; i < c.dim; ++i) {
    bool bad = false;
    for (std::size_t k = 0; k < c.dim; ++k) {
      Scalar left(0), right(0);
      for (std::size_t j = 0; j < c.dim; ++j) {
        left = f.add(left, f.mul(c.counit[j], c.comult[i].at(j, k)));
        right = f.add(right, f.mul(c.counit[j], c.comult[i].at(k, j)));
      }
      Scalar expect = (k == i) ? f.one() : f.zero();
      if (left != expect || right != expect) bad = true;
    }
    if (bad) note_failure(counit, max_witnesses, "(" + std::to_string(i) + ")");
  }
  report.checks.push_back(counit);
  return report;
}

AxiomReport check_bimodule(const Bimodule& m, std::size_t max_witnesses) {
  const Algebra& a = m.over;
  if (m.left.size() != a.dim || m.right.size() != a.dim)
    throw MalformedInput("bimodule tables: wrong shape");
  for (const auto& mat : m.left)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      throw MalformedInput("bimodule tables: wrong shape");
  for (const auto& mat : m.right)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      throw MalformedInput("bimodule tables: wrong shape");
  const Field& f = a.field;

  AxiomReport report;
  AxiomCheck lunit{"left-unit"};
  if (m.left_of(a.unit) != Matrix::identity(m.dim))
    note_failure(lunit, max_witnesses, "unit");
  report.checks.push_back(lunit);

  AxiomCheck runit{"right-unit"};
  if (m.right_of(a.unit) != Matrix::identity(m.dim))
    note_failure(runit, max_witnesses, "unit");
  report.checks.push_back(runit);

  AxiomCheck lact{"left-action"};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      // e_i * (e_j * m) = (e_i e_j) * m
      Matrix lhs = mul(f, m.left[i], m.left[j]);
      Matrix rhs = m.left_of(a.basis_product(i, j));
      if (!(lhs == rhs)) note_failure(lact, max_witnesses, pair_str(i, j));
    }
  report.checks.push_back(lact);

  AxiomCheck ract{"right-action"};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      // (m * e_i) * e_j = m * (e_i e_j)
      Matrix lhs = mul(f, m.right[j], m.right[i]);
      Matrix rhs = m.right_of(a.basis_product(i, j));
      if (!(lhs == rhs)) note_failure(ract, max_witnesses, pair_str(i, j));
    }
  report.checks.push_back(ract);

  AxiomCheck comm{"commuting"};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (!(mul(f, m.left[i], m.right[j]) == mul(f, m.right[j], m.left[i])))
        note_failure(comm, max_witnesses, pair_str(i, j));
    }
  report.checks.push_back(comm);
  return report;
}

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule m;
  m.over = a;
  m.dim = a.dim;
  m.left = a.lmult;
  m.right.reserve(a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) m.right.push_back(a.right_mult(j));
  return m;
}

Algebra subalgebra_from_basis(const Algebra& a, const Matrix& basis) {
  if (basis.rows() != a.dim)
    throw InvalidSubalgebra("basis rows must equal the ambient dimension");
  const Field& f = a.field;
  const std::size_t bdim = basis.cols();
  if (rank(f, basis) != bdim)
    throw InvalidSubalgebra("basis columns are dependent");

  auto express = [&](const Vec& v) {
    auto x = solve(f, basis, v);
    if (!x) throw InvalidSubalgebra("span is not closed");
    return *x;
  };

  Algebra b;
  b.field = f;
  b.dim = bdim;
  b.lmult.assign(bdim, Matrix(bdim, bdim));
  auto unit_coords = solve(f, basis, a.unit);
  if (!unit_coords) throw InvalidSubalgebra("unit is not in the span");
  b.unit = *unit_coords;
  for (std::size_t i = 0; i < bdim; ++i) {
    for (std::size_t j = 0; j < bdim; ++j) {
      Vec prod = a.multiply(basis.column(i), basis.column(j));
      Vec coords = express(prod);
      for (std::size_t k = 0; k < bdim; ++k) b.lmult[i].at(k, j) = coords[k];
    }
  }
  return b;
}

Bimodule restrict_bimodule(const Bimodule& m, const Matrix& inclusion) {
  Algebra b = subalgebra_from_basis(m.over, inclusion);
  Bimodule r;
  r.over = b;
  r.dim = m.dim;
  r.left.reserve(b.dim);
  r.right.reserve(b.dim);
  for (std::size_t t = 0; t < b.dim; ++t) {
    r.left.push_back(m.left_of(inclusion.column(t)));
    r.right.push_back(m.right_of(inclusion.column(t)));
  }
  return r;
}

}  // namespace entcoh
