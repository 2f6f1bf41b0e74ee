#include "entcoh/galois.hpp"

namespace entcoh {

namespace {

void note_failure(AxiomCheck& check, std::size_t max_witnesses,
                  const std::string& witness) {
  check.ok = false;
  if (check.witnesses.size() < max_witnesses) check.witnesses.push_back(witness);
}

// Columns ab (x) a' - a (x) ba' over basis elements a, a' of A and basis
// columns b of B.
Matrix relation_columns(const ComoduleAlgebra& ca, const Matrix& b_basis) {
  const Algebra& a = ca.a;
  const std::size_t da = a.dim;
  std::vector<Vec> cols;
  cols.reserve(da * da * b_basis.cols());
  for (std::size_t t = 0; t < b_basis.cols(); ++t) {
    Vec b = b_basis.column(t);
    for (std::size_t i = 0; i < da; ++i) {
      Vec ei(da, Scalar(0));
      ei[i] = a.field.one();
      Vec ib = a.multiply(ei, b);  // e_i * b
      for (std::size_t j = 0; j < da; ++j) {
        Vec ej(da, Scalar(0));
        ej[j] = a.field.one();
        Vec bj = a.multiply(b, ej);  // b * e_j
        Vec col(da * da, Scalar(0));
        for (std::size_t k = 0; k < da; ++k) {
          col[flat_index(k, j, da)] =
              a.field.add(col[flat_index(k, j, da)], ib[k]);
          col[flat_index(i, k, da)] =
              a.field.sub(col[flat_index(i, k, da)], bj[k]);
        }
        cols.push_back(std::move(col));
      }
    }
  }
  return from_columns(da * da, cols);
}

// Lift of beta on A (x) A: column flat(i, j) is (e_i . -) applied to the
// first leg of delta(e_j).
Matrix beta_lift(const ComoduleAlgebra& ca) {
  const Algebra& a = ca.a;
  const std::size_t da = a.dim, dc = ca.c.dim;
  const Field& f = a.field;
  Matrix lift(da * dc, da * da);
  for (std::size_t j = 0; j < da; ++j) {
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t l = 0; l < dc; ++l) {
        const Scalar& w = ca.coaction.at(flat_index(k, l, dc), j);
        if (Field::is_zero(w)) continue;
        for (std::size_t i = 0; i < da; ++i) {
          Vec prod = a.basis_product(i, k);
          for (std::size_t m = 0; m < da; ++m) {
            if (Field::is_zero(prod[m])) continue;
            std::size_t row = flat_index(m, l, dc);
            std::size_t col = flat_index(i, j, da);
            lift.at(row, col) = f.add(lift.at(row, col), f.mul(w, prod[m]));
          }
        }
      }
  }
  return lift;
}

// pi * (L_i (x) id) * section and pi * (id (x) R_j) * section, with
// well-definedness asserted against the relation columns.
void quotient_multiplications(const ComoduleAlgebra& ca, const Matrix& b_basis,
                              const QuotientSpace& aba,
                              std::vector<Matrix>& q_left,
                              std::vector<Matrix>& q_right) {
  const Algebra& a = ca.a;
  const std::size_t da = a.dim;
  const Field& f = a.field;
  Matrix relations = relation_columns(ca, b_basis);

  for (std::size_t i = 0; i < da; ++i) {
    // Left multiplication on the first leg of A (x) A.
    Matrix lm(da * da, da * da);
    for (std::size_t p = 0; p < da; ++p) {
      Vec prod = a.basis_product(i, p);
      for (std::size_t q = 0; q < da; ++q)
        for (std::size_t m = 0; m < da; ++m)
          lm.at(flat_index(m, q, da), flat_index(p, q, da)) = prod[m];
    }
    Matrix mapped = mul(f, aba.projection, lm);
    if (!is_zero_matrix(mul(f, mapped, relations)))
      throw InternalError("left multiplication not defined on the quotient");
    q_left.push_back(mul(f, mapped, aba.section));
  }
  for (std::size_t j = 0; j < da; ++j) {
    // Right multiplication on the second leg of A (x) A.
    Matrix rm(da * da, da * da);
    for (std::size_t q = 0; q < da; ++q) {
      Vec prod = a.basis_product(q, j);
      for (std::size_t p = 0; p < da; ++p)
        for (std::size_t m = 0; m < da; ++m)
          rm.at(flat_index(p, m, da), flat_index(p, q, da)) = prod[m];
    }
    Matrix mapped = mul(f, aba.projection, rm);
    if (!is_zero_matrix(mul(f, mapped, relations)))
      throw InternalError("right multiplication not defined on the quotient");
    q_right.push_back(mul(f, mapped, aba.section));
  }
}

}  // namespace

AxiomReport check_coaction(const ComoduleAlgebra& ca,
                           std::size_t max_witnesses) {
  const Algebra& a = ca.a;
  const Coalgebra& c = ca.c;
  if (a.field.spec() != c.field.spec())
    throw MismatchError("comodule algebra: fields differ");
  const std::size_t da = a.dim, dc = c.dim;
  if (ca.coaction.rows() != da * dc || ca.coaction.cols() != da)
    throw MalformedInput("coaction matrix has the wrong shape");
  const Field& f = a.field;

  AxiomReport report;
  AxiomCheck counit{"counit"};
  for (std::size_t j = 0; j < da; ++j) {
    Vec out(da, Scalar(0));
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t l = 0; l < dc; ++l)
        out[k] = f.add(out[k], f.mul(ca.coaction.at(flat_index(k, l, dc), j),
                                     c.counit[l]));
    Vec expect(da, Scalar(0));
    expect[j] = f.one();
    if (out != expect)
      note_failure(counit, max_witnesses, "(a" + std::to_string(j) + ")");
  }
  report.checks.push_back(counit);

  AxiomCheck coassoc{"coassociativity"};
  for (std::size_t j = 0; j < da; ++j) {
    // Both sides in A (x) C (x) C coordinates.
    Vec lhs(da * dc * dc, Scalar(0));
    Vec rhs(da * dc * dc, Scalar(0));
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t l = 0; l < dc; ++l) {
        const Scalar& w = ca.coaction.at(flat_index(k, l, dc), j);
        if (Field::is_zero(w)) continue;
        // (delta (x) id): apply delta to the A leg.
        for (std::size_t k2 = 0; k2 < da; ++k2)
          for (std::size_t l2 = 0; l2 < dc; ++l2) {
            const Scalar& w2 = ca.coaction.at(flat_index(k2, l2, dc), k);
            if (Field::is_zero(w2)) continue;
            std::size_t t = flat_index(flat_index(k2, l2, dc), l, dc);
            lhs[t] = f.add(lhs[t], f.mul(w, w2));
          }
        // (id (x) Delta): apply Delta to the C leg.
        for (std::size_t m = 0; m < dc; ++m)
          for (std::size_t n = 0; n < dc; ++n) {
            const Scalar& d = c.comult[l].at(m, n);
            if (Field::is_zero(d)) continue;
            std::size_t t = flat_index(flat_index(k, m, dc), n, dc);
            rhs[t] = f.add(rhs[t], f.mul(w, d));
          }
      }
    if (lhs != rhs)
      note_failure(coassoc, max_witnesses, "(a" + std::to_string(j) + ")");
  }
  report.checks.push_back(coassoc);
  return report;
}

Matrix coinvariants(const ComoduleAlgebra& ca) {
  const Algebra& a = ca.a;
  const std::size_t da = a.dim, dc = ca.c.dim;
  const Field& f = a.field;
  // For each basis element e_j, the condition on b = sum x_i e_i is
  // delta(b e_j) = (L_b (x) id) delta(e_j); stack the differences.
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < da; ++j) {
    Matrix lhs = mul(f, ca.coaction, a.right_mult(j));  // x -> delta(x e_j)
    Matrix rhs(da * dc, da);
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < dc; ++l) {
          const Scalar& w = ca.coaction.at(flat_index(k, l, dc), j);
          if (Field::is_zero(w)) continue;
          Vec prod = a.basis_product(i, k);
          for (std::size_t m = 0; m < da; ++m) {
            if (Field::is_zero(prod[m])) continue;
            std::size_t row = flat_index(m, l, dc);
            rhs.at(row, i) = f.add(rhs.at(row, i), f.mul(w, prod[m]));
          }
        }
    }
    blocks.push_back(sub(f, lhs, rhs));
  }
  Matrix stacked = blocks[0];
  for (std::size_t j = 1; j < blocks.size(); ++j)
    stacked = vstack(stacked, blocks[j]);
  Matrix basis = kernel_basis(f, stacked);
  // The coinvariants always form a unital subalgebra; validate rather
  // than assume.
  subalgebra_from_basis(a, basis);
  return basis;
}

QuotientSpace tensor_over_coinvariants(const ComoduleAlgebra& ca,
                                       const Matrix& b_basis) {
  const Algebra& a = ca.a;
  subalgebra_from_basis(a, b_basis);  // throws unless a unital subalgebra
  Matrix relations = relation_columns(ca, b_basis);
  QuotientBasis qb = quotient_basis(a.field, a.dim * a.dim, relations);
  QuotientSpace qs;
  qs.dim = qb.representatives.size();
  qs.projection = std::move(qb.projection);
  qs.section = std::move(qb.section);
  qs.representatives = std::move(qb.representatives);
  return qs;
}

std::pair<Matrix, bool> galois_beta(const ComoduleAlgebra& ca,
                                    const Matrix& b_basis,
                                    const QuotientSpace& aba) {
  const Field& f = ca.a.field;
  Matrix lift = beta_lift(ca);
  Matrix relations = relation_columns(ca, b_basis);
  if (!is_zero_matrix(mul(f, lift, relations)))
    throw InternalError("beta lift does not kill the B-relations");
  Matrix beta = mul(f, lift, aba.section);
  bool bijective = aba.dim == ca.a.dim * ca.c.dim &&
                   rank(f, beta) == aba.dim;
  return {std::move(beta), bijective};
}

GaloisExtension analyze_extension(const ComoduleAlgebra& ca) {
  AxiomReport coact = check_coaction(ca);
  if (!coact.all_ok())
    throw PreconditionError("coaction does not satisfy the comodule axioms");

  GaloisExtension ext;
  ext.base = ca;
  ext.b_basis = coinvariants(ca);
  ext.b_algebra = subalgebra_from_basis(ca.a, ext.b_basis);
  ext.aba = tensor_over_coinvariants(ca, ext.b_basis);
  auto [beta, galois] = galois_beta(ca, ext.b_basis, ext.aba);
  ext.beta = std::move(beta);
  ext.is_galois = galois;
  quotient_multiplications(ca, ext.b_basis, ext.aba, ext.q_left, ext.q_right);
  if (ext.is_galois) {
    // gamma = beta^{-1} (eta (x) id)
    const std::size_t da = ca.a.dim, dc = ca.c.dim;
    Matrix eta_id(da * dc, dc);
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t k = 0; k < da; ++k)
        eta_id.at(flat_index(k, i, dc), i) = ca.a.unit[k];
    auto g = solve_matrix(ca.a.field, ext.beta, eta_id);
    if (!g) throw InternalError("beta is bijective but gamma solve failed");
    ext.gamma = std::move(*g);
  }
  return ext;
}

Matrix translation_gamma(const GaloisExtension& ext) {
  if (!ext.is_galois)
    throw PreconditionError("translation map requires a Galois extension");
  return ext.gamma;
}

Entwining canonical_psi(const GaloisExtension& ext) {
  if (!ext.is_galois)
    throw PreconditionError("canonical entwining requires a Galois extension");
  const Algebra& a = ext.base.a;
  const std::size_t da = a.dim, dc = ext.base.c.dim;
  Entwining e;
  e.a = a;
  e.c = ext.base.c;
  e.psi = Matrix(da * dc, dc * da);
  for (std::size_t i = 0; i < dc; ++i) {
    Vec gi = ext.gamma.column(i);
    for (std::size_t j = 0; j < da; ++j) {
      Vec moved = apply(a.field, ext.q_right[j], gi);  // gamma(c_i) * e_j
      Vec out = apply(a.field, ext.beta, moved);
      e.psi.set_column(flat_index(i, j, da), out);
    }
  }
  return e;
}

bool check_beta_bimodule(const GaloisExtension& ext) {
  if (!ext.is_galois)
    throw PreconditionError("beta bimodule check requires a Galois extension");
  const Field& f = ext.base.a.field;
  Bimodule ac = ac_bimodule(canonical_psi(ext));
  for (std::size_t i = 0; i < ext.base.a.dim; ++i) {
    if (!(mul(f, ext.beta, ext.q_left[i]) == mul(f, ac.left[i], ext.beta)))
      return false;
    if (!(mul(f, ext.beta, ext.q_right[i]) == mul(f, ac.right[i], ext.beta)))
      return false;
  }
  return true;
}

bool check_translation_identity(const GaloisExtension& ext) {
  if (!ext.is_galois)
    throw PreconditionError(
        "translation identity check requires a Galois extension");
  const Algebra& a = ext.base.a;
  const std::size_t da = a.dim, dc = ext.base.c.dim;
  const Field& f = a.field;
  for (std::size_t i = 0; i < da; ++i) {
    // sum over delta(e_i) = a_0 (x) a_1 of a_0 * gamma(a_1) in the quotient.
    Vec acc(ext.aba.dim, Scalar(0));
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t l = 0; l < dc; ++l) {
        const Scalar& w = ext.base.coaction.at(flat_index(k, l, dc), i);
        if (Field::is_zero(w)) continue;
        Vec term = apply(f, ext.q_left[k], ext.gamma.column(l));
        for (std::size_t t = 0; t < acc.size(); ++t)
          acc[t] = f.add(acc[t], f.mul(w, term[t]));
      }
    // Class of 1 (x) e_i.
    Vec one_i(da * da, Scalar(0));
    for (std::size_t m = 0; m < da; ++m)
      one_i[flat_index(m, i, da)] = a.unit[m];
    Vec expect = apply(f, ext.aba.projection, one_i);
    if (acc != expect) return false;
  }
  return true;
}

}  // namespace entcoh
