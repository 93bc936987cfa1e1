#pragma once

#include <string>
#include <vector>

#include "cycperm/field.hpp"

namespace cycperm {

/// Univariate polynomial over a table-driven finite field. Coefficients are
/// stored low to high with no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  using Element = Field::Element;

  /// Degree reported for the zero polynomial.
  static constexpr int kMinusInfinity = -1;

  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<Element> coefficients);

  static Polynomial constant(FieldPtr field, Element c);
  static Polynomial monomial(FieldPtr field, std::size_t degree, Element c = 1);
  /// x^n - 1.
  static Polynomial x_n_minus_one(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Element coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Element leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial scaled(Element c) const;
  Element evaluate(Element x) const;

  /// Coefficient vector padded or reduced cyclically to length n (mod x^n - 1).
  std::vector<Element> cyclic_vector(std::size_t n) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Element> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b.
DivMod poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;
  Polynomial t;  // s*a + t*b = gcd
};

ExtendedGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus);
Polynomial poly_powmod(Polynomial base, unsigned __int128 exp, const Polynomial& modulus);

/// Ben-Or irreducibility test over the polynomial's own field.
bool is_irreducible(const Polynomial& f);

/// Lexicographically least monic irreducible polynomial of the given degree
/// (coefficients compared from x^{degree-1} down; degree 1 gives x).
Polynomial least_irreducible(const FieldPtr& field, std::size_t degree);

}  // namespace cycperm
