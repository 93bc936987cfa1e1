#include "cycperm/matrix.hpp"

#include <algorithm>

#include "cycperm/error.hpp"

namespace cycperm {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row_data(r));
  }
  return m;
}

std::vector<Vector> Matrix::to_rows() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_data(a), row_data(a) + cols_, row_data(b));
}

void Matrix::truncate_rows(std::size_t count) {
  rows_ = std::min(rows_, count);
  data_.resize(rows_ * cols_);
}

std::vector<std::size_t> rref(const Field& field, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, lead);
    Field::Element* lr = m.row_data(lead);
    const Field::Element inv = field.inv(lr[c]);
    for (std::size_t j = c; j < cols; ++j) lr[j] = field.mul(lr[j], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      Field::Element* row = m.row_data(r);
      const Field::Element f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (lr[j] != 0) row[j] = field.sub(row[j], field.mul(f, lr[j]));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  m.truncate_rows(lead);
  return pivots;
}

std::size_t rank(const Field& field, Matrix m) { return rref(field, m).size(); }

Matrix nullspace(const Field& field, const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = rref(field, reduced);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix basis(n - pivots.size(), n);
  std::size_t b = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(b, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(b, pivots[r]) = field.neg(reduced(r, free));
    ++b;
  }
  return basis;
}

Field::Element dot(const Field& field, const Field::Element* a, const Field::Element* b, std::size_t len) {
  Field::Element acc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != 0 && b[i] != 0) acc = field.add(acc, field.mul(a[i], b[i]));
  }
  return acc;
}

}  // namespace cycperm
