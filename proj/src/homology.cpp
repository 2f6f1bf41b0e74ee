#include "entcoh/homology.hpp"

#include <cstdlib>
#include <functional>
#include <string>

namespace entcoh {

ResourceCaps ResourceCaps::from_env() {
  ResourceCaps caps;
  if (const char* v = std::getenv("ENTCOH_MAX_ENTRIES")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && n > 0) caps.max_entries = n;
  }
  return caps;
}

void ResourceCaps::guard(std::size_t entries, std::size_t degree,
                         const char* what) const {
  if (entries > max_entries) {
    throw ResourceLimit(std::string(what) + " at degree " +
                        std::to_string(degree) + " has dimension " +
                        std::to_string(entries) + " > cap " +
                        std::to_string(max_entries));
  }
}

namespace {

// Digits of a flat A^n tuple index, leftmost factor most significant.
std::vector<std::size_t> tuple_digits(std::size_t flat, std::size_t n,
                                      std::size_t base) {
  std::vector<std::size_t> d(n);
  for (std::size_t t = n; t-- > 0;) {
    d[t] = flat % base;
    flat /= base;
  }
  return d;
}

std::size_t tuple_flat(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t f = 0;
  for (auto x : d) f = f * base + x;
  return f;
}

std::size_t pow_st(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Matrix FreeBimoduleComplex::full_differential(std::size_t n) const {
  const Field& f = algebra.field;
  const std::size_t da = algebra.dim;
  const Matrix& restricted = (n == 0) ? aug : diff[n];
  const std::size_t g = gen_dims[n];
  const std::size_t rows_out =
      (n == 0) ? target.dim : component_dim(n - 1);
  Matrix out(rows_out, component_dim(n));
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t l = 0; l < da; ++l) {
        std::size_t col = (k * g + j) * da + l;
        Vec base = restricted.column(j);
        Vec moved;
        if (n == 0) {
          moved = apply(f, target.right[l], apply(f, target.left[k], base));
        } else {
          // Outer-leg action on A (x) G_{n-1} (x) A.
          const std::size_t g1 = gen_dims[n - 1];
          moved.assign(component_dim(n - 1), Scalar(0));
          Vec lp(da), rp(da);
          for (std::size_t t = 0; t < base.size(); ++t) {
            if (Field::is_zero(base[t])) continue;
            std::size_t l1 = t % da;
            std::size_t rest = t / da;
            std::size_t j1 = rest % g1;
            std::size_t k1 = rest / g1;
            Vec pk = algebra.basis_product(k, k1);
            Vec pl = algebra.basis_product(l1, l);
            for (std::size_t m = 0; m < da; ++m) {
              if (Field::is_zero(pk[m])) continue;
              Scalar w = f.mul(base[t], pk[m]);
              for (std::size_t m2 = 0; m2 < da; ++m2) {
                if (Field::is_zero(pl[m2])) continue;
                std::size_t row = (m * g1 + j1) * da + m2;
                moved[row] = f.add(moved[row], f.mul(w, pl[m2]));
              }
            }
          }
        }
        out.set_column(col, moved);
      }
  return out;
}

Bimodule FreeBimoduleComplex::component_bimodule(std::size_t n) const {
  const std::size_t da = algebra.dim;
  const std::size_t g = gen_dims[n];
  Bimodule m;
  m.over = algebra;
  m.dim = component_dim(n);
  m.left.assign(da, Matrix(m.dim, m.dim));
  m.right.assign(da, Matrix(m.dim, m.dim));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      Vec p = algebra.basis_product(i, k);
      for (std::size_t j = 0; j < g; ++j)
        for (std::size_t l = 0; l < da; ++l) {
          std::size_t col = (k * g + j) * da + l;
          for (std::size_t t = 0; t < da; ++t)
            m.left[i].at((t * g + j) * da + l, col) = p[t];
        }
    }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t l = 0; l < da; ++l) {
      Vec p = algebra.basis_product(l, i);
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t j = 0; j < g; ++j) {
          std::size_t col = (k * g + j) * da + l;
          for (std::size_t t = 0; t < da; ++t)
            m.right[i].at((k * g + j) * da + t, col) = p[t];
        }
    }
  return m;
}

namespace {

// Apply the full differential d_n to a component-n vector without
// materializing the matrix.
Vec apply_full_differential(const FreeBimoduleComplex& fc, std::size_t n,
                            const Vec& v) {
  const Algebra& a = fc.algebra;
  const Field& f = a.field;
  const std::size_t da = a.dim;
  const std::size_t g = fc.gen_dims[n];
  const Matrix& restricted = (n == 0) ? fc.aug : fc.diff[n];
  const std::size_t rows_out =
      (n == 0) ? fc.target.dim : fc.component_dim(n - 1);
  Vec out(rows_out, Scalar(0));
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (Field::is_zero(v[t])) continue;
    std::size_t l = t % da;
    std::size_t rest = t / da;
    std::size_t j = rest % g;
    std::size_t k = rest / g;
    Vec base = restricted.column(j);
    if (n == 0) {
      Vec moved = apply(f, fc.target.right[l], apply(f, fc.target.left[k], base));
      for (std::size_t r = 0; r < rows_out; ++r)
        out[r] = f.add(out[r], f.mul(v[t], moved[r]));
    } else {
      const std::size_t g1 = fc.gen_dims[n - 1];
      for (std::size_t s = 0; s < base.size(); ++s) {
        if (Field::is_zero(base[s])) continue;
        std::size_t l1 = s % da;
        std::size_t rest1 = s / da;
        std::size_t j1 = rest1 % g1;
        std::size_t k1 = rest1 / g1;
        Vec pk = a.basis_product(k, k1);
        Vec pl = a.basis_product(l1, l);
        Scalar w0 = f.mul(v[t], base[s]);
        for (std::size_t m = 0; m < da; ++m) {
          if (Field::is_zero(pk[m])) continue;
          Scalar w = f.mul(w0, pk[m]);
          for (std::size_t m2 = 0; m2 < da; ++m2) {
            if (Field::is_zero(pl[m2])) continue;
            std::size_t row = (m * g1 + j1) * da + m2;
            out[row] = f.add(out[row], f.mul(w, pl[m2]));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

void verify_complex(const FreeBimoduleComplex& fc) {
  // d(n) . d(n+1) is a bimodule map, so vanishing on 1 (x) G (x) 1 suffices.
  for (std::size_t n = 0; n + 1 <= fc.max_degree(); ++n) {
    const Matrix& next = fc.diff[n + 1];
    for (std::size_t h = 0; h < fc.gen_dims[n + 1]; ++h) {
      Vec image = apply_full_differential(fc, n, next.column(h));
      if (!is_zero_vec(image))
        throw InternalError("complex differential does not square to zero");
    }
  }
}

bool augmented_complex_exact(const FreeBimoduleComplex& fc,
                             std::size_t up_to) {
  if (up_to + 1 > fc.max_degree())
    throw PreconditionError("exactness check needs one extra stored degree");
  const Field& f = fc.algebra.field;
  std::vector<std::size_t> ranks(up_to + 2);
  for (std::size_t n = 0; n <= up_to + 1; ++n)
    ranks[n] = rank(f, fc.full_differential(n));
  if (ranks[0] != fc.target.dim) return false;  // augmentation not onto
  for (std::size_t n = 0; n <= up_to; ++n) {
    std::size_t nullity = fc.component_dim(n) - ranks[n];
    if (nullity != ranks[n + 1]) return false;
  }
  return true;
}

FreeBimoduleComplex bar_resolution(const Algebra& a, std::size_t n_max,
                                   const ResourceCaps& caps) {
  const Field& f = a.field;
  const std::size_t da = a.dim;
  FreeBimoduleComplex fc;
  fc.algebra = a;
  fc.target = regular_bimodule(a);
  fc.gen_dims.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    fc.gen_dims[n] = pow_st(da, n);
    caps.guard(fc.component_dim(n), n, "bar component");
  }
  fc.aug = Matrix(da, 1);
  fc.aug.set_column(0, a.unit);
  fc.diff.resize(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t g = fc.gen_dims[n];
    const std::size_t g1 = fc.gen_dims[n - 1];
    Matrix d(da * g1 * da, g);
    for (std::size_t col = 0; col < g; ++col) {
      auto digits = tuple_digits(col, n, da);
      // face 0: the first tensor leg moves into the left slot
      {
        std::vector<std::size_t> tail(digits.begin() + 1, digits.end());
        std::size_t j1 = tuple_flat(tail, da);
        for (std::size_t l = 0; l < da; ++l) {
          if (Field::is_zero(a.unit[l])) continue;
          std::size_t row = (digits[0] * g1 + j1) * da + l;
          d.at(row, col) = f.add(d.at(row, col), a.unit[l]);
        }
      }
      // faces 1 .. n-1: merge adjacent middle legs
      for (std::size_t t = 1; t <= n - 1; ++t) {
        Vec p = a.basis_product(digits[t - 1], digits[t]);
        bool negative = (t % 2 == 1);
        for (std::size_t m = 0; m < da; ++m) {
          if (Field::is_zero(p[m])) continue;
          auto merged = digits;
          merged[t - 1] = m;
          merged.erase(merged.begin() + t);
          std::size_t j1 = tuple_flat(merged, da);
          for (std::size_t k = 0; k < da; ++k) {
            if (Field::is_zero(a.unit[k])) continue;
            for (std::size_t l = 0; l < da; ++l) {
              if (Field::is_zero(a.unit[l])) continue;
              std::size_t row = (k * g1 + j1) * da + l;
              Scalar w = f.mul(p[m], f.mul(a.unit[k], a.unit[l]));
              d.at(row, col) =
                  negative ? f.sub(d.at(row, col), w) : f.add(d.at(row, col), w);
            }
          }
        }
      }
      // face n: the last tensor leg moves into the right slot
      {
        std::vector<std::size_t> head(digits.begin(), digits.end() - 1);
        std::size_t j1 = tuple_flat(head, da);
        bool negative = (n % 2 == 1);
        for (std::size_t k = 0; k < da; ++k) {
          if (Field::is_zero(a.unit[k])) continue;
          std::size_t row = (k * g1 + j1) * da + digits[n - 1];
          d.at(row, col) = negative ? f.sub(d.at(row, col), a.unit[k])
                                    : f.add(d.at(row, col), a.unit[k]);
        }
      }
    }
    fc.diff[n] = std::move(d);
  }
  verify_complex(fc);
  return fc;
}

namespace {

// Shared face bookkeeping for the entwined and quotient complexes: the
// generator space is S (x) A^n where S indexes a left-free basis of the
// degree -1 object, and face 0 is given per construction.
struct TwistedComplexBuilder {
  const Algebra& a;
  std::size_t s_dim;  // generators of the coefficient object
  // face0(s, j): coefficients over (k, s') of the decomposition of
  // (generator_s . e_j), as a vector of length dim(A) * s_dim.
  std::function<Vec(std::size_t, std::size_t)> face0;

  Matrix differential(std::size_t n,
                      const std::vector<std::size_t>& gen_dims) const {
    const Field& f = a.field;
    const std::size_t da = a.dim;
    const std::size_t g = gen_dims[n];
    const std::size_t g1 = gen_dims[n - 1];
    const std::size_t an = pow_st(da, n);   // A^n block per coefficient index
    const std::size_t an1 = pow_st(da, n - 1);
    Matrix d(da * g1 * da, g);
    for (std::size_t col = 0; col < g; ++col) {
      std::size_t s = col / an;
      auto digits = tuple_digits(col % an, n, da);
      // face 0: coefficient object absorbs the first middle leg
      {
        std::vector<std::size_t> tail(digits.begin() + 1, digits.end());
        std::size_t tail_flat = tuple_flat(tail, da);
        Vec dec = face0(s, digits[0]);  // over (k, s')
        for (std::size_t k = 0; k < da; ++k)
          for (std::size_t s2 = 0; s2 < s_dim; ++s2) {
            const Scalar& w = dec[k * s_dim + s2];
            if (Field::is_zero(w)) continue;
            std::size_t j1 = s2 * an1 + tail_flat;
            for (std::size_t l = 0; l < da; ++l) {
              if (Field::is_zero(a.unit[l])) continue;
              std::size_t row = (k * g1 + j1) * da + l;
              d.at(row, col) = f.add(d.at(row, col), f.mul(w, a.unit[l]));
            }
          }
      }
      // faces 1 .. n-1
      for (std::size_t t = 1; t <= n - 1; ++t) {
        Vec p = a.basis_product(digits[t - 1], digits[t]);
        bool negative = (t % 2 == 1);
        for (std::size_t m = 0; m < da; ++m) {
          if (Field::is_zero(p[m])) continue;
          auto merged = digits;
          merged[t - 1] = m;
          merged.erase(merged.begin() + t);
          std::size_t j1 = s * an1 + tuple_flat(merged, da);
          for (std::size_t k = 0; k < da; ++k) {
            if (Field::is_zero(a.unit[k])) continue;
            for (std::size_t l = 0; l < da; ++l) {
              if (Field::is_zero(a.unit[l])) continue;
              std::size_t row = (k * g1 + j1) * da + l;
              Scalar w = f.mul(p[m], f.mul(a.unit[k], a.unit[l]));
              d.at(row, col) =
                  negative ? f.sub(d.at(row, col), w) : f.add(d.at(row, col), w);
            }
          }
        }
      }
      // face n
      {
        std::vector<std::size_t> head(digits.begin(), digits.end() - 1);
        std::size_t j1 = s * an1 + tuple_flat(head, da);
        bool negative = (n % 2 == 1);
        for (std::size_t k = 0; k < da; ++k) {
          if (Field::is_zero(a.unit[k])) continue;
          std::size_t row = (k * g1 + j1) * da + digits[n - 1];
          d.at(row, col) = negative ? f.sub(d.at(row, col), a.unit[k])
                                    : f.add(d.at(row, col), a.unit[k]);
        }
      }
    }
    return d;
  }
};

}  // namespace

FreeBimoduleComplex entwined_complex(const Entwining& e, std::size_t n_max,
                                     const ResourceCaps& caps) {
  const Algebra& a = e.a;
  const std::size_t da = a.dim, dc = e.c.dim;
  FreeBimoduleComplex fc;
  fc.algebra = a;
  fc.target = ac_bimodule(e);
  fc.gen_dims.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    fc.gen_dims[n] = dc * pow_st(da, n);
    caps.guard(fc.component_dim(n), n, "entwined component");
  }
  fc.aug = Matrix(da * dc, dc);
  for (std::size_t m = 0; m < dc; ++m)
    for (std::size_t k = 0; k < da; ++k)
      fc.aug.at(flat_index(k, m, dc), m) = a.unit[k];

  TwistedComplexBuilder builder{
      a, dc,
      [&](std::size_t s, std::size_t j) {
        // (1 (x) c_s) . e_j = psi(c_s (x) e_j), already over (k, l).
        return e.psi.column(flat_index(s, j, da));
      }};
  fc.diff.resize(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n)
    fc.diff[n] = builder.differential(n, fc.gen_dims);
  verify_complex(fc);
  return fc;
}

namespace {

// Greedy left-free basis of a left module given by action matrices: scan the
// candidate vectors and keep those whose full A-orbit extends independence by
// dim(A) each time.
std::optional<std::vector<Vec>> greedy_free_basis(
    const Field& f, std::size_t dim, const std::vector<Matrix>& act,
    const std::vector<Vec>& candidates) {
  const std::size_t da = act.size();
  std::vector<Vec> chosen;
  std::vector<Vec> span_cols;
  std::size_t current_rank = 0;
  for (const Vec& cand : candidates) {
    std::vector<Vec> tentative = span_cols;
    for (std::size_t k = 0; k < da; ++k)
      tentative.push_back(apply(f, act[k], cand));
    Matrix m = from_columns(dim, tentative);
    std::size_t r = rank(f, m);
    if (r == current_rank + da) {
      chosen.push_back(cand);
      span_cols = std::move(tentative);
      current_rank = r;
      if (current_rank == dim) break;
    }
  }
  if (current_rank != dim) return std::nullopt;
  return chosen;
}

}  // namespace

FreeBimoduleComplex quotient_complex(const GaloisExtension& ext,
                                     std::size_t n_max,
                                     const ResourceCaps& caps) {
  const Algebra& a = ext.base.a;
  const Field& f = a.field;
  const std::size_t da = a.dim;
  const std::size_t qdim = ext.aba.dim;
  if (qdim % da != 0)
    throw PreconditionError(
        "quotient dimension is not a multiple of dim(A); not left-free");

  // Candidate generators: standard basis vectors of the quotient. This uses
  // only the quotient multiplication tables, not beta or gamma.
  std::vector<Vec> candidates;
  for (std::size_t v = 0; v < qdim; ++v) {
    Vec ev(qdim, Scalar(0));
    ev[v] = f.one();
    candidates.push_back(std::move(ev));
  }
  auto gens = greedy_free_basis(f, qdim, ext.q_left, candidates);
  if (!gens && ext.is_galois) {
    // Fall back to the translation-map columns, which generate freely
    // whenever the extension is Galois.
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < ext.gamma.cols(); ++i)
      cols.push_back(ext.gamma.column(i));
    gens = greedy_free_basis(f, qdim, ext.q_left, cols);
  }
  if (!gens)
    throw PreconditionError("no left-free basis of A (x)_B A found");
  const std::size_t s_dim = gens->size();

  // Freeness matrix F: (k, t) -> e_k * gen_t.
  Matrix free_map(qdim, da * s_dim);
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t t = 0; t < s_dim; ++t)
      free_map.set_column(k * s_dim + t, apply(f, ext.q_left[k], (*gens)[t]));

  // Decompositions of gen_t * e_j for all t, j in one solve.
  Matrix moved(qdim, s_dim * da);
  for (std::size_t t = 0; t < s_dim; ++t)
    for (std::size_t j = 0; j < da; ++j)
      moved.set_column(t * da + j, apply(f, ext.q_right[j], (*gens)[t]));
  auto decomp = solve_matrix(f, free_map, moved);
  if (!decomp)
    throw InternalError("free decomposition failed on a free module");

  FreeBimoduleComplex fc;
  fc.algebra = a;
  fc.target.over = a;
  fc.target.dim = qdim;
  fc.target.left = ext.q_left;
  fc.target.right = ext.q_right;
  fc.gen_dims.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    fc.gen_dims[n] = s_dim * pow_st(da, n);
    caps.guard(fc.component_dim(n), n, "quotient-complex component");
  }
  fc.aug = Matrix(qdim, s_dim);
  for (std::size_t t = 0; t < s_dim; ++t) fc.aug.set_column(t, (*gens)[t]);

  TwistedComplexBuilder builder{
      a, s_dim,
      [&](std::size_t s, std::size_t j) {
        return decomp->column(s * da + j);
      }};
  fc.diff.resize(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n)
    fc.diff[n] = builder.differential(n, fc.gen_dims);
  verify_complex(fc);
  return fc;
}

CochainComplex hom_free(const FreeBimoduleComplex& fc, const Bimodule& m,
                        const ResourceCaps& caps) {
  if (!m.over.same_structure(fc.algebra))
    throw MismatchError("hom_free: bimodule is over a different algebra");
  const Field& f = fc.algebra.field;
  const std::size_t da = fc.algebra.dim;
  const std::size_t dm = m.dim;

  CochainComplex cc;
  cc.dims.resize(fc.gen_dims.size());
  for (std::size_t n = 0; n < fc.gen_dims.size(); ++n) {
    cc.dims[n] = fc.gen_dims[n] * dm;
    caps.guard(cc.dims[n], n, "cochain space");
  }
  // L_k R_l on M for every pair of outer basis elements.
  std::vector<std::vector<Matrix>> lr(da, std::vector<Matrix>(da));
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t l = 0; l < da; ++l)
      lr[k][l] = mul(f, m.left[k], m.right[l]);

  cc.diff.resize(fc.max_degree());
  for (std::size_t n = 0; n + 1 <= fc.max_degree(); ++n) {
    const Matrix& d = fc.diff[n + 1];
    const std::size_t g = fc.gen_dims[n];
    const std::size_t g_next = fc.gen_dims[n + 1];
    Matrix del(g_next * dm, g * dm);
    for (std::size_t h = 0; h < g_next; ++h) {
      for (std::size_t row = 0; row < d.rows(); ++row) {
        const Scalar& w = d.at(row, h);
        if (Field::is_zero(w)) continue;
        std::size_t l = row % da;
        std::size_t rest = row / da;
        std::size_t j = rest % g;
        std::size_t k = rest / g;
        const Matrix& act = lr[k][l];
        for (std::size_t b = 0; b < dm; ++b)
          for (std::size_t r = 0; r < dm; ++r) {
            const Scalar& v = act.at(r, b);
            if (Field::is_zero(v)) continue;
            std::size_t out_row = h * dm + r;
            std::size_t out_col = j * dm + b;
            del.at(out_row, out_col) =
                f.add(del.at(out_row, out_col), f.mul(w, v));
          }
      }
    }
    cc.diff[n] = std::move(del);
  }
  return cc;
}

Matrix hom_bimodule(const Bimodule& p, const Bimodule& m) {
  if (!p.over.same_structure(m.over))
    throw MismatchError("hom_bimodule: bimodules over different algebras");
  const Field& f = p.over.field;
  const std::size_t da = p.over.dim, dp = p.dim, dm = m.dim;
  // Unknown f(e_p) = sum_r coef e_r, flat index (p, r) = p * dm + r.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t pc = 0; pc < dp; ++pc)
      for (std::size_t r = 0; r < dm; ++r) {
        // f(e_i * e_p) - e_i * f(e_p) = 0, component r
        Vec row(dp * dm, Scalar(0));
        for (std::size_t q = 0; q < dp; ++q)
          row[q * dm + r] = f.add(row[q * dm + r], p.left[i].at(q, pc));
        for (std::size_t s = 0; s < dm; ++s)
          row[pc * dm + s] = f.sub(row[pc * dm + s], m.left[i].at(r, s));
        rows.push_back(std::move(row));
        // f(e_p * e_i) - f(e_p) * e_i = 0, component r
        Vec row2(dp * dm, Scalar(0));
        for (std::size_t q = 0; q < dp; ++q)
          row2[q * dm + r] = f.add(row2[q * dm + r], p.right[i].at(q, pc));
        for (std::size_t s = 0; s < dm; ++s)
          row2[pc * dm + s] = f.sub(row2[pc * dm + s], m.right[i].at(r, s));
        rows.push_back(std::move(row2));
      }
  }
  Matrix constraints = transpose(from_columns(dp * dm, rows));
  return kernel_basis(f, constraints);
}

CohomologyTable cohomology_dims(const Field& f, const CochainComplex& cc) {
  for (std::size_t n = 0; n + 1 < cc.diff.size(); ++n) {
    if (!is_zero_matrix(mul(f, cc.diff[n + 1], cc.diff[n])))
      throw MalformedInput("invalid complex: differentials do not compose to 0");
  }
  std::vector<std::size_t> ranks(cc.diff.size());
  for (std::size_t n = 0; n < cc.diff.size(); ++n)
    ranks[n] = rank(f, cc.diff[n]);
  CohomologyTable table;
  table.dims.resize(cc.dims.size());
  for (std::size_t n = 0; n < cc.dims.size(); ++n) {
    std::size_t r_out = (n < ranks.size()) ? ranks[n] : 0;
    std::size_t r_in = (n > 0) ? ranks[n - 1] : 0;
    table.dims[n] = cc.dims[n] - r_out - r_in;
  }
  table.edge_exact = false;
  return table;
}

namespace {

CohomologyTable truncate_table(CohomologyTable t, std::size_t n_max) {
  t.dims.resize(n_max + 1);
  t.edge_exact = true;
  return t;
}

}  // namespace

CohomologyTable entwined_cohomology(const Entwining& e, const Bimodule& m,
                                    std::size_t n_max,
                                    const ResourceCaps& caps) {
  AxiomReport rep = check_entwining(e);
  if (!rep.all_ok())
    throw PreconditionError("entwined cohomology needs a valid entwining");
  FreeBimoduleComplex fc = entwined_complex(e, n_max + 1, caps);
  CochainComplex cc = hom_free(fc, m, caps);
  return truncate_table(cohomology_dims(e.a.field, cc), n_max);
}

CohomologyTable hochschild_cohomology(const Algebra& b, const Bimodule& m,
                                      std::size_t n_max,
                                      const ResourceCaps& caps) {
  if (!m.over.same_structure(b))
    throw MismatchError("hochschild: bimodule is over a different algebra");
  FreeBimoduleComplex fc = bar_resolution(b, n_max + 1, caps);
  CochainComplex cc = hom_free(fc, m, caps);
  return truncate_table(cohomology_dims(b.field, cc), n_max);
}

CohomologyTable quotient_cohomology(const GaloisExtension& ext,
                                    const Bimodule& m, std::size_t n_max,
                                    const ResourceCaps& caps) {
  FreeBimoduleComplex fc = quotient_complex(ext, n_max + 1, caps);
  CochainComplex cc = hom_free(fc, m, caps);
  return truncate_table(cohomology_dims(ext.base.a.field, cc), n_max);
}

Algebra enveloping_algebra(const Algebra& a) {
  const Field& f = a.field;
  const std::size_t da = a.dim;
  Algebra env;
  env.field = f;
  env.dim = da * da;
  env.lmult.assign(env.dim, Matrix(env.dim, env.dim));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Matrix& l = env.lmult[flat_index(i, j, da)];
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t lidx = 0; lidx < da; ++lidx) {
          // (e_i (x) e_j^op)(e_k (x) e_l^op) = e_i e_k (x) (e_l e_j)^op
          Vec p1 = a.basis_product(i, k);
          Vec p2 = a.basis_product(lidx, j);
          for (std::size_t m = 0; m < da; ++m) {
            if (Field::is_zero(p1[m])) continue;
            for (std::size_t n2 = 0; n2 < da; ++n2) {
              if (Field::is_zero(p2[n2])) continue;
              l.at(flat_index(m, n2, da), flat_index(k, lidx, da)) =
                  f.add(l.at(flat_index(m, n2, da), flat_index(k, lidx, da)),
                        f.mul(p1[m], p2[n2]));
            }
          }
        }
    }
  env.unit.assign(env.dim, Scalar(0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      env.unit[flat_index(i, j, da)] = f.mul(a.unit[i], a.unit[j]);
  return env;
}

namespace {

struct LeftModule {
  Algebra r;
  std::size_t dim = 0;
  std::vector<Matrix> act;  // one matrix per basis element of r
};

Algebra opposite_algebra(const Algebra& a) {
  Algebra op = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        op.lmult[i].at(k, j) = a.lmult[j].at(k, i);
  return op;
}

// Basis of R-linear maps M -> R (R as the left regular module), flattened
// (m, rc) -> m * dim(R) + rc.
Matrix hom_to_regular(const LeftModule& lm) {
  const Field& f = lm.r.field;
  const std::size_t dr = lm.r.dim, dm = lm.dim;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t m = 0; m < dm; ++m)
      for (std::size_t rc = 0; rc < dr; ++rc) {
        // f(e_i . e_m) - e_i f(e_m) = 0, component rc
        Vec row(dm * dr, Scalar(0));
        for (std::size_t q = 0; q < dm; ++q)
          row[q * dr + rc] = f.add(row[q * dr + rc], lm.act[i].at(q, m));
        for (std::size_t s = 0; s < dr; ++s)
          row[m * dr + s] = f.sub(row[m * dr + s], lm.r.lmult[i].at(rc, s));
        rows.push_back(std::move(row));
      }
  Matrix constraints = transpose(from_columns(dm * dr, rows));
  return kernel_basis(f, constraints);
}

bool splits(const LeftModule& lm) {
  const Field& f = lm.r.field;
  const std::size_t dr = lm.r.dim, dm = lm.dim;
  Matrix hom = hom_to_regular(lm);
  const std::size_t h = hom.cols();
  if (h == 0) return dm == 0;
  // s: M -> R^dm with components from hom; pi sends (r (x) slot i) to
  // r . e_i. Solve pi . s = id for the hom coefficients.
  Matrix system(dm * dm, dm * h);
  for (std::size_t slot = 0; slot < dm; ++slot)
    for (std::size_t hidx = 0; hidx < h; ++hidx) {
      std::size_t col = slot * h + hidx;
      for (std::size_t m = 0; m < dm; ++m) {
        // action of the algebra element hom_hidx(e_m) on e_slot
        for (std::size_t rc = 0; rc < dr; ++rc) {
          const Scalar& w = hom.at(m * dr + rc, hidx);
          if (Field::is_zero(w)) continue;
          for (std::size_t comp = 0; comp < dm; ++comp) {
            const Scalar& av = lm.act[rc].at(comp, slot);
            if (Field::is_zero(av)) continue;
            system.at(m * dm + comp, col) =
                f.add(system.at(m * dm + comp, col), f.mul(w, av));
          }
        }
      }
    }
  Vec identity_flat(dm * dm, Scalar(0));
  for (std::size_t m = 0; m < dm; ++m)
    identity_flat[m * dm + m] = f.one();
  return solve(f, system, identity_flat).has_value();
}

}  // namespace

bool is_projective_module(const Bimodule& mod, ModuleSide side) {
  AxiomReport rep = check_bimodule(mod);
  switch (side) {
    case ModuleSide::left:
      if (!rep.check("left-unit").ok || !rep.check("left-action").ok)
        throw MismatchError("is_projective: invalid left action");
      return splits(LeftModule{mod.over, mod.dim, mod.left});
    case ModuleSide::right:
      if (!rep.check("right-unit").ok || !rep.check("right-action").ok)
        throw MismatchError("is_projective: invalid right action");
      return splits(LeftModule{opposite_algebra(mod.over), mod.dim, mod.right});
    case ModuleSide::bi: {
      if (!rep.all_ok()) throw MismatchError("is_projective: invalid bimodule");
      Algebra env = enveloping_algebra(mod.over);
      std::vector<Matrix> act(env.dim);
      const Field& f = mod.over.field;
      for (std::size_t i = 0; i < mod.over.dim; ++i)
        for (std::size_t j = 0; j < mod.over.dim; ++j)
          act[flat_index(i, j, mod.over.dim)] =
              mul(f, mod.left[i], mod.right[j]);
      return splits(LeftModule{std::move(env), mod.dim, std::move(act)});
    }
  }
  throw InternalError("unreachable module side");
}

TheoremReport verify_theorem(const GaloisExtension& ext, const Bimodule& m,
                             std::size_t n_max, const ResourceCaps& caps) {
  if (!ext.is_galois)
    throw PreconditionError("verify_theorem requires a Galois extension");
  TheoremReport report;
  Entwining psi = canonical_psi(ext);
  report.table_psi = entwined_cohomology(psi, m, n_max, caps);

  Bimodule m_over_b = restrict_bimodule(m, ext.b_basis);
  report.table_hh =
      hochschild_cohomology(ext.b_algebra, m_over_b, n_max, caps);

  Bimodule a_over_b = restrict_bimodule(regular_bimodule(ext.base.a),
                                        ext.b_basis);
  report.flat_left = is_projective_module(a_over_b, ModuleSide::left);
  report.flat_right = is_projective_module(a_over_b, ModuleSide::right);
  report.flatness_applies = report.flat_left || report.flat_right;

  report.h0_psi = report.table_psi.dims.at(0);
  report.h0_b = report.table_hh.dims.at(0);
  report.h0_match = report.h0_psi == report.h0_b;
  report.tables_match = report.table_psi.dims == report.table_hh.dims;
  return report;
}

}  // namespace entcoh
