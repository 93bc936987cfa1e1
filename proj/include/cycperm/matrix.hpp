#pragma once

#include <cstdint>
#include <vector>

#include "cycperm/field.hpp"

namespace cycperm {

using Vector = std::vector<Field::Element>;

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field::Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Field::Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  const Field::Element* row_data(std::size_t r) const noexcept { return data_.data() + r * cols_; }
  Field::Element* row_data(std::size_t r) noexcept { return data_.data() + r * cols_; }
  Vector row(std::size_t r) const { return Vector(row_data(r), row_data(r) + cols_); }
  std::vector<Vector> to_rows() const;

  void swap_rows(std::size_t a, std::size_t b);
  /// Keeps the first `count` rows.
  void truncate_rows(std::size_t count);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field::Element> data_;
};

/// Reduces m in place to reduced row-echelon form, drops zero rows, and
/// returns the pivot columns.
std::vector<std::size_t> rref(const Field& field, Matrix& m);

std::size_t rank(const Field& field, Matrix m);

/// Basis of {x : m x = 0} in reduced form (one vector per free column).
Matrix nullspace(const Field& field, const Matrix& m);

/// Inner product sum a_i b_i.
Field::Element dot(const Field& field, const Field::Element* a, const Field::Element* b, std::size_t len);

}  // namespace cycperm
