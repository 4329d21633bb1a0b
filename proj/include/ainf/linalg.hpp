#pragma once

#include <optional>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

using Vector = std::vector<Scalar>;

/// Dense exact matrix. Blocks handled here are small, so density is fine.
class Matrix {
 public:
  Matrix(Field field, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int r, int c) { return data_[index(r, c)]; }
  const Scalar& at(int r, int c) const { return data_[index(r, c)]; }

  Vector column(int c) const;
  static Matrix from_columns(const Field& field, int rows, const std::vector<Vector>& columns);

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  Field field_;
  int rows_;
  int cols_;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;               // reduced row echelon form
  std::vector<int> pivot_cols;  // one per nonzero row
};

Echelon row_reduce(Matrix m);
int rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vector> kernel(const Matrix& m);
/// Some x with m x = rhs, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
/// Inverse of a square matrix, if invertible.
std::optional<Matrix> inverse(const Matrix& m);
/// Indices of candidates that extend span(base) greedily, in order.
std::vector<int> extend_basis(const Field& field, int dim, const std::vector<Vector>& base,
                              const std::vector<Vector>& candidates);

}  // namespace ainf
