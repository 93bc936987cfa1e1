#include "cycperm/linear_code.hpp"

#include <sstream>

#include "cycperm/error.hpp"

namespace cycperm {

LinearCode::LinearCode(FieldPtr field, std::size_t length, Matrix generators)
    : field_(std::move(field)), n_(length), generator_(std::move(generators)) {
  if (generator_.cols() != n_) {
    if (generator_.rows() == 0) {
      generator_ = Matrix(0, n_);
    } else {
      throw Error("generator matrix width does not match the length");
    }
  }
  for (std::size_t r = 0; r < generator_.rows(); ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (generator_(r, c) >= field_->order()) throw Error("entry outside the field");
    }
  }
  pivots_ = rref(*field_, generator_);
  parity_ = nullspace(*field_, generator_);
  rref(*field_, parity_);
}

LinearCode LinearCode::from_rows(FieldPtr field, std::size_t length, const std::vector<Vector>& rows) {
  return LinearCode(std::move(field), length, Matrix::from_rows(rows, length));
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t length) {
  return LinearCode(std::move(field), length, Matrix(0, length));
}

LinearCode LinearCode::full(FieldPtr field, std::size_t length) {
  Matrix id(length, length);
  for (std::size_t i = 0; i < length; ++i) id(i, i) = 1;
  return LinearCode(std::move(field), length, std::move(id));
}

bool LinearCode::contains(const Vector& word) const {
  if (word.size() != n_) throw Error("length mismatch");
  for (std::size_t r = 0; r < parity_.rows(); ++r) {
    if (dot(*field_, parity_.row_data(r), word.data(), n_) != 0) return false;
  }
  return true;
}

Vector LinearCode::encode(const Vector& message) const {
  if (message.size() != dimension()) throw Error("message length mismatch");
  Vector out(n_, 0);
  for (std::size_t r = 0; r < message.size(); ++r) {
    if (message[r] == 0) continue;
    const Field::Element* row = generator_.row_data(r);
    for (std::size_t c = 0; c < n_; ++c) out[c] = field_->add(out[c], field_->mul(message[r], row[c]));
  }
  return out;
}

std::string LinearCode::to_string() const {
  std::ostringstream os;
  os << "[" << n_ << "," << dimension() << "]_" << field_->order();
  return os.str();
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.n_ == b.n_ && a.field_->spec() == b.field_->spec() && a.generator_ == b.generator_;
}

LinearCode dual(const LinearCode& code) { return LinearCode(code.field(), code.length(), code.parity_check()); }

Vector permute_word(const Vector& word, const Permutation& sigma) {
  if (word.size() != sigma.degree()) throw Error("length mismatch");
  Vector out(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) out[sigma(j)] = word[j];
  return out;
}

LinearCode permute_code(const LinearCode& code, const Permutation& sigma) {
  if (sigma.degree() != code.length()) throw Error("length mismatch");
  const Matrix& g = code.generator();
  Matrix m(g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t j = 0; j < g.cols(); ++j) m(r, sigma(j)) = g(r, j);
  }
  return LinearCode(code.field(), code.length(), std::move(m));
}

bool maps_onto(const LinearCode& code, const Permutation& sigma, const LinearCode& target) {
  if (sigma.degree() != code.length() || target.length() != code.length()) throw Error("length mismatch");
  if (code.dimension() != target.dimension()) return false;
  const Field& f = *code.field();
  const Matrix& g = code.generator();
  const Matrix& h = target.parity_check();
  const std::size_t n = code.length();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const Field::Element* row = g.row_data(r);
    for (std::size_t p = 0; p < h.rows(); ++p) {
      const Field::Element* check = h.row_data(p);
      Field::Element acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j] != 0) acc = f.add(acc, f.mul(row[j], check[sigma(j)]));
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

bool is_automorphism(const LinearCode& code, const Permutation& sigma) { return maps_onto(code, sigma, code); }

namespace {

bool is_repetition(const LinearCode& code) {
  if (code.dimension() != 1) return false;
  const Matrix& g = code.generator();
  for (std::size_t c = 0; c < code.length(); ++c) {
    if (g(0, c) != 1) return false;
  }
  return true;
}

}  // namespace

bool is_elementary(const LinearCode& code) {
  const std::size_t k = code.dimension(), n = code.length();
  if (k == 0 || k == n) return true;
  return is_repetition(code) || is_repetition(dual(code));
}

}  // namespace cycperm
