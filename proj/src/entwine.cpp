#include "entcoh/entwine.hpp"

#include <sstream>

namespace entcoh {

namespace {

void note_failure(AxiomCheck& check, std::size_t max_witnesses,
                  const std::string& witness) {
  check.ok = false;
  if (check.witnesses.size() < max_witnesses) check.witnesses.push_back(witness);
}

std::string pair_str(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(c" << i << ",a" << j << ")";
  return os.str();
}

}  // namespace

AxiomReport check_entwining(const Entwining& e, std::size_t max_witnesses) {
  const Algebra& a = e.a;
  const Coalgebra& c = e.c;
  if (a.field.spec() != c.field.spec())
    throw MismatchError("entwining: algebra and coalgebra fields differ");
  const std::size_t da = a.dim, dc = c.dim;
  if (e.psi.rows() != da * dc || e.psi.cols() != dc * da)
    throw MalformedInput("entwining: psi has the wrong shape");
  const Field& f = a.field;

  auto psi_coef = [&](std::size_t k, std::size_t l, std::size_t i,
                      std::size_t j) -> const Scalar& {
    return e.psi.at(flat_index(k, l, dc), flat_index(i, j, da));
  };

  AxiomReport report;

  AxiomCheck multiplicativity{"multiplicativity"};
  for (std::size_t i = 0; i < dc; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t j2 = 0; j2 < da; ++j2) {
        // lhs = psi(c_i (x) e_j e_j2)
        Vec lhs(da * dc, Scalar(0));
        Vec prod = a.basis_product(j, j2);
        for (std::size_t m = 0; m < da; ++m) {
          if (Field::is_zero(prod[m])) continue;
          for (std::size_t t = 0; t < da * dc; ++t)
            lhs[t] = f.add(lhs[t],
                           f.mul(prod[m], e.psi.at(t, flat_index(i, m, da))));
        }
        // rhs = (mult (x) id) (id (x) psi) (psi (x) id) (c_i (x) e_j (x) e_j2)
        Vec rhs(da * dc, Scalar(0));
        for (std::size_t k = 0; k < da; ++k)
          for (std::size_t l = 0; l < dc; ++l) {
            const Scalar& w1 = psi_coef(k, l, i, j);
            if (Field::is_zero(w1)) continue;
            for (std::size_t k2 = 0; k2 < da; ++k2)
              for (std::size_t l2 = 0; l2 < dc; ++l2) {
                const Scalar& w2 = psi_coef(k2, l2, l, j2);
                if (Field::is_zero(w2)) continue;
                Vec prod2 = a.basis_product(k, k2);
                Scalar w = f.mul(w1, w2);
                for (std::size_t m = 0; m < da; ++m) {
                  if (Field::is_zero(prod2[m])) continue;
                  std::size_t t = flat_index(m, l2, dc);
                  rhs[t] = f.add(rhs[t], f.mul(w, prod2[m]));
                }
              }
          }
        if (lhs != rhs) {
          std::ostringstream os;
          os << "(c" << i << ",a" << j << ",a" << j2 << ")";
          note_failure(multiplicativity, max_witnesses, os.str());
        }
      }
  report.checks.push_back(multiplicativity);

  AxiomCheck unit{"unit"};
  for (std::size_t i = 0; i < dc; ++i) {
    Vec lhs(da * dc, Scalar(0));
    for (std::size_t j = 0; j < da; ++j) {
      if (Field::is_zero(a.unit[j])) continue;
      for (std::size_t t = 0; t < da * dc; ++t)
        lhs[t] =
            f.add(lhs[t], f.mul(a.unit[j], e.psi.at(t, flat_index(i, j, da))));
    }
    Vec rhs(da * dc, Scalar(0));
    for (std::size_t k = 0; k < da; ++k)
      rhs[flat_index(k, i, dc)] = a.unit[k];
    if (lhs != rhs)
      note_failure(unit, max_witnesses, "(c" + std::to_string(i) + ")");
  }
  report.checks.push_back(unit);

  AxiomCheck comultiplicativity{"comultiplicativity"};
  for (std::size_t i = 0; i < dc; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      // Both sides in A (x) C (x) C coordinates (k, m, n).
      Vec lhs(da * dc * dc, Scalar(0));
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < dc; ++l) {
          const Scalar& w = psi_coef(k, l, i, j);
          if (Field::is_zero(w)) continue;
          for (std::size_t m = 0; m < dc; ++m)
            for (std::size_t n = 0; n < dc; ++n) {
              const Scalar& d = c.comult[l].at(m, n);
              if (Field::is_zero(d)) continue;
              std::size_t t = flat_index(flat_index(k, m, dc), n, dc);
              lhs[t] = f.add(lhs[t], f.mul(w, d));
            }
        }
      Vec rhs(da * dc * dc, Scalar(0));
      for (std::size_t m = 0; m < dc; ++m)
        for (std::size_t n = 0; n < dc; ++n) {
          const Scalar& d = c.comult[i].at(m, n);
          if (Field::is_zero(d)) continue;
          // psi on (c_n (x) e_j), then psi on (c_m (x) first leg).
          for (std::size_t kb = 0; kb < da; ++kb)
            for (std::size_t lb = 0; lb < dc; ++lb) {
              const Scalar& w1 = psi_coef(kb, lb, n, j);
              if (Field::is_zero(w1)) continue;
              for (std::size_t ka = 0; ka < da; ++ka)
                for (std::size_t la = 0; la < dc; ++la) {
                  const Scalar& w2 = psi_coef(ka, la, m, kb);
                  if (Field::is_zero(w2)) continue;
                  std::size_t t = flat_index(flat_index(ka, la, dc), lb, dc);
                  rhs[t] = f.add(rhs[t], f.mul(d, f.mul(w1, w2)));
                }
            }
        }
      if (lhs != rhs)
        note_failure(comultiplicativity, max_witnesses, pair_str(i, j));
    }
  report.checks.push_back(comultiplicativity);

  AxiomCheck counit{"counit"};
  for (std::size_t i = 0; i < dc; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vec lhs(da, Scalar(0));
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < dc; ++l) {
          const Scalar& w = psi_coef(k, l, i, j);
          if (Field::is_zero(w)) continue;
          lhs[k] = f.add(lhs[k], f.mul(w, c.counit[l]));
        }
      Vec rhs(da, Scalar(0));
      rhs[j] = c.counit[i];
      if (lhs != rhs) note_failure(counit, max_witnesses, pair_str(i, j));
    }
  report.checks.push_back(counit);

  return report;
}

Bimodule ac_bimodule(const Entwining& e) {
  const Algebra& a = e.a;
  const Coalgebra& c = e.c;
  const std::size_t da = a.dim, dc = c.dim;
  if (e.psi.rows() != da * dc || e.psi.cols() != dc * da)
    throw MalformedInput("entwining: psi has the wrong shape");
  const Field& f = a.field;

  Bimodule m;
  m.over = a;
  m.dim = da * dc;
  m.left.assign(da, Matrix(m.dim, m.dim));
  m.right.assign(da, Matrix(m.dim, m.dim));
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t k = 0; k < da; ++k) {
      Vec prod = a.basis_product(i, k);  // e_i * e_k
      for (std::size_t l = 0; l < dc; ++l) {
        std::size_t col = flat_index(k, l, dc);
        for (std::size_t t = 0; t < da; ++t)
          m.left[i].at(flat_index(t, l, dc), col) = prod[t];
      }
    }
  }
  for (std::size_t j = 0; j < da; ++j) {
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t l = 0; l < dc; ++l) {
        std::size_t col = flat_index(k, l, dc);
        // (e_k (x) c_l) . e_j = e_k . psi(c_l (x) e_j)
        for (std::size_t k2 = 0; k2 < da; ++k2)
          for (std::size_t l2 = 0; l2 < dc; ++l2) {
            const Scalar& w =
                e.psi.at(flat_index(k2, l2, dc), flat_index(l, j, da));
            if (Field::is_zero(w)) continue;
            Vec prod = a.basis_product(k, k2);
            for (std::size_t t = 0; t < da; ++t) {
              if (Field::is_zero(prod[t])) continue;
              std::size_t row = flat_index(t, l2, dc);
              m.right[j].at(row, col) =
                  f.add(m.right[j].at(row, col), f.mul(w, prod[t]));
            }
          }
      }
  }
  return m;
}

}  // namespace entcoh
