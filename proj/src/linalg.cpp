#include "ainf/linalg.hpp"

#include "ainf/error.hpp"

namespace ainf {

Matrix::Matrix(Field field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {}

Vector Matrix::column(int c) const {
  Vector v;
  v.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::from_columns(const Field& field, int rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const auto& col = columns[static_cast<std::size_t>(c)];
    if (static_cast<int>(col.size()) != rows) fail(ErrorKind::kArgument, "column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = col[static_cast<std::size_t>(r)];
  }
  return m;
}

Echelon row_reduce(Matrix m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const Scalar inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (m.at(row, c).is_zero()) continue;
        m.at(r, c) -= factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivot_cols.size()); }

std::vector<Vector> kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(static_cast<std::size_t>(m.cols()), m.field().zero());
    v[static_cast<std::size_t>(free)] = m.field().one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[static_cast<std::size_t>(e.pivot_cols[r])] = -e.reduced.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[static_cast<std::size_t>(r)];
  }
  const Echelon e = row_reduce(std::move(aug));
  Vector x(static_cast<std::size_t>(m.cols()), m.field().zero());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    const int c = e.pivot_cols[r];
    if (c == m.cols()) return std::nullopt;
    x[static_cast<std::size_t>(c)] = e.reduced.at(static_cast<int>(r), m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::kArgument, "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  const Echelon e = row_reduce(std::move(aug));
  if (static_cast<int>(e.pivot_cols.size()) < n || (n > 0 && e.pivot_cols[static_cast<std::size_t>(n - 1)] >= n))
    return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = e.reduced.at(r, n + c);
  return inv;
}

std::vector<int> extend_basis(const Field& field, int dim, const std::vector<Vector>& base,
                              const std::vector<Vector>& candidates) {
  std::vector<Vector> columns = base;
  int current = rank(Matrix::from_columns(field, dim, columns));
  std::vector<int> chosen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    columns.push_back(candidates[i]);
    const int r = rank(Matrix::from_columns(field, dim, columns));
    if (r > current) {
      current = r;
      chosen.push_back(static_cast<int>(i));
    } else {
      columns.pop_back();
    }
  }
  return chosen;
}

}  // namespace ainf
