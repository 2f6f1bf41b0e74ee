#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "entcoh/field.hpp"

namespace entcoh {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix transpose(const Matrix& m);
Matrix mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix sub(const Field& f, const Matrix& a, const Matrix& b);
Vec apply(const Field& f, const Matrix& m, const Vec& v);
bool is_zero_matrix(const Matrix& m);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Field& f, const Vec& a, const Vec& b);
Vec sub_vec(const Field& f, const Vec& a, const Vec& b);
Vec scale_vec(const Field& f, const Scalar& c, const Vec& v);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

struct Echelon {
  Matrix mat;                          // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
};

/// Gauss-Jordan with the deterministic pivot rule: scan columns left to
/// right, take the first unused row with a nonzero entry.
Echelon reduced_row_echelon(const Field& f, Matrix m);

std::size_t rank(const Field& f, const Matrix& m);

/// Columns form a basis of the null space, ordered by free column index.
Matrix kernel_basis(const Field& f, const Matrix& m);

/// First solution under the elimination's pivot order (free variables zero),
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Field& f, const Matrix& m, const Vec& v);

/// Columnwise solve; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Field& f, const Matrix& m,
                                   const Matrix& rhs);

struct QuotientBasis {
  std::vector<std::size_t> representatives;  // ambient coordinates kept
  Matrix projection;                         // quotient_dim x ambient_dim
  Matrix section;                            // ambient_dim x quotient_dim
};

/// Basis of k^ambient_dim / colspan(spanning) by standard basis cosets.
/// projection * section = identity and projection * spanning = 0.
QuotientBasis quotient_basis(const Field& f, std::size_t ambient_dim,
                             const Matrix& spanning);

}  // namespace entcoh
