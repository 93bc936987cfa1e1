#pragma once

#include <string>
#include <vector>

#include "cycperm/field.hpp"
#include "cycperm/matrix.hpp"
#include "cycperm/permutation.hpp"

namespace cycperm {

/// A linear [n, k] code identified by the reduced row-echelon form of its
/// generator matrix. Two codes are equal iff their canonical matrices are.
class LinearCode {
 public:
  /// Any spanning set of rows; the rows need not be independent.
  LinearCode(FieldPtr field, std::size_t length, Matrix generators);
  static LinearCode from_rows(FieldPtr field, std::size_t length, const std::vector<Vector>& rows);
  static LinearCode zero(FieldPtr field, std::size_t length);
  static LinearCode full(FieldPtr field, std::size_t length);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Canonical generator matrix of the dual code.
  const Matrix& parity_check() const noexcept { return parity_; }

  bool contains(const Vector& word) const;
  Vector encode(const Vector& message) const;

  /// "[n,k]_q".
  std::string to_string() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  FieldPtr field_;
  std::size_t n_;
  Matrix generator_;
  std::vector<std::size_t> pivots_;
  Matrix parity_;
};

LinearCode dual(const LinearCode& code);

/// sigma(C): coordinate sigma(j) of the new code reads coordinate j of the old.
LinearCode permute_code(const LinearCode& code, const Permutation& sigma);

/// sigma(C) == target, tested without re-canonicalizing: equal dimensions and
/// every permuted generator row satisfies the target's parity checks.
bool maps_onto(const LinearCode& code, const Permutation& sigma, const LinearCode& target);

/// sigma in Per(C).
bool is_automorphism(const LinearCode& code, const Permutation& sigma);

/// Zero code, full space, repetition code or its dual (the even-like code).
bool is_elementary(const LinearCode& code);

/// Permutes the entries of a word so that entry sigma(j) of the result is entry j.
Vector permute_word(const Vector& word, const Permutation& sigma);

}  // namespace cycperm
