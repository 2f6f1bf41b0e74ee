#include "entcoh/matrix.hpp"

#include <utility>

namespace entcoh {

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Matrix mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw MalformedInput("matrix product shape");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (Field::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (Field::is_zero(bkj)) continue;
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, bkj));
      }
    }
  }
  return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw MalformedInput("matrix sum shape");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix sub(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw MalformedInput("matrix difference shape");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
  return c;
}

Vec apply(const Field& f, const Matrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw MalformedInput("matrix-vector shape");
  Vec r(m.rows(), Scalar(0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (Field::is_zero(v[j])) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Scalar& mij = m.at(i, j);
      if (Field::is_zero(mij)) continue;
      r[i] = f.add(r[i], f.mul(mij, v[j]));
    }
  }
  return r;
}

bool is_zero_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!Field::is_zero(m.at(i, j))) return false;
  return true;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!Field::is_zero(x)) return false;
  return true;
}

Vec add_vec(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw MalformedInput("vector sum shape");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec sub_vec(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw MalformedInput("vector difference shape");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec scale_vec(const Field& f, const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(c, v[i]);
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw MalformedInput("hstack shape");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw MalformedInput("vstack shape");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw MalformedInput("column length");
    m.set_column(j, cols[j]);
  }
  return m;
}

Echelon reduced_row_echelon(const Field& f, Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r) {
      if (!Field::is_zero(m.at(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pr) {
      for (std::size_t j = col; j < cols; ++j)
        std::swap(m.at(sel, j), m.at(pr, j));
    }
    const Scalar pinv = f.inv(m.at(pr, col));
    for (std::size_t j = col; j < cols; ++j) {
      if (!Field::is_zero(m.at(pr, j))) m.at(pr, j) = f.mul(pinv, m.at(pr, j));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const Scalar factor = m.at(r, col);
      if (Field::is_zero(factor)) continue;
      for (std::size_t j = col; j < cols; ++j) {
        const Scalar& pj = m.at(pr, j);
        if (Field::is_zero(pj)) continue;
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, pj));
      }
    }
    pivots.push_back(col);
    ++pr;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

namespace {

// Row echelon (eliminate below only), returns number of pivots.
std::size_t echelon_rank(const Field& f, Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r) {
      if (!Field::is_zero(m.at(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pr) {
      for (std::size_t j = col; j < cols; ++j)
        std::swap(m.at(sel, j), m.at(pr, j));
    }
    const Scalar pinv = f.inv(m.at(pr, col));
    for (std::size_t r = pr + 1; r < rows; ++r) {
      const Scalar& lead = m.at(r, col);
      if (Field::is_zero(lead)) continue;
      const Scalar factor = f.mul(lead, pinv);
      m.at(r, col) = 0;
      for (std::size_t j = col + 1; j < cols; ++j) {
        const Scalar& pj = m.at(pr, j);
        if (Field::is_zero(pj)) continue;
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, pj));
      }
    }
    ++pr;
  }
  return pr;
}

}  // namespace

std::size_t rank(const Field& f, const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate on the smaller row count.
  if (m.rows() > m.cols()) return echelon_rank(f, transpose(m));
  return echelon_rank(f, m);
}

Matrix kernel_basis(const Field& f, const Matrix& m) {
  const std::size_t cols = m.cols();
  Echelon e = reduced_row_echelon(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols, Scalar(0));
    v[free_col] = f.one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = f.neg(e.mat.at(r, free_col));
    basis.push_back(std::move(v));
  }
  return from_columns(cols, basis);
}

std::optional<Vec> solve(const Field& f, const Matrix& m, const Vec& v) {
  if (v.size() != m.rows()) throw MalformedInput("solve: rhs length");
  Matrix aug = hstack(m, from_columns(m.rows(), {v}));
  Echelon e = reduced_row_echelon(f, aug);
  Vec x(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == m.cols()) return std::nullopt;  // inconsistent
    x[e.pivot_cols[r]] = e.mat.at(r, m.cols());
  }
  return x;
}

std::optional<Matrix> solve_matrix(const Field& f, const Matrix& m,
                                   const Matrix& rhs) {
  if (rhs.rows() != m.rows()) throw MalformedInput("solve: rhs shape");
  Matrix aug = hstack(m, rhs);
  Echelon e = reduced_row_echelon(f, aug);
  Matrix x(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x.at(e.pivot_cols[r], j) = e.mat.at(r, m.cols() + j);
  }
  // Rows without a pivot in the coefficient block must be zero on the rhs.
  for (std::size_t r = e.pivot_cols.size(); r < aug.rows(); ++r) {
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (!Field::is_zero(e.mat.at(r, m.cols() + j))) return std::nullopt;
  }
  return x;
}

QuotientBasis quotient_basis(const Field& f, std::size_t ambient_dim,
                             const Matrix& spanning) {
  if (spanning.cols() > 0 && spanning.rows() != ambient_dim)
    throw MalformedInput("quotient_basis: spanning rows != ambient_dim");
  Echelon e = reduced_row_echelon(f, transpose(spanning));
  std::vector<bool> is_pivot(ambient_dim, false);
  std::vector<std::size_t> pivot_row(ambient_dim, 0);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    is_pivot[e.pivot_cols[r]] = true;
    pivot_row[e.pivot_cols[r]] = r;
  }
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) reps.push_back(c);

  Matrix projection(reps.size(), ambient_dim);
  Matrix section(ambient_dim, reps.size());
  for (std::size_t t = 0; t < reps.size(); ++t) {
    projection.at(t, reps[t]) = f.one();
    section.at(reps[t], t) = f.one();
  }
  // A pivot coordinate p satisfies e_p = -sum_j R(r,j) e_j modulo the span,
  // with j running over representative coordinates.
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) continue;
    const std::size_t r = pivot_row[c];
    for (std::size_t t = 0; t < reps.size(); ++t)
      projection.at(t, c) = f.neg(e.mat.at(r, reps[t]));
  }
  return QuotientBasis{std::move(reps), std::move(projection),
                       std::move(section)};
}

}  // namespace entcoh
