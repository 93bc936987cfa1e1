#include "cycperm/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cycperm/error.hpp"

namespace cycperm {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field() && !(a.field()->spec() == b.field()->spec())) {
    throw Error("polynomials over different fields");
  }
}

}  // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Element> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (Element c : coeffs_) {
    if (c >= field_->order()) throw Error("coefficient outside the field");
  }
  trim();
}

Polynomial Polynomial::constant(FieldPtr field, Element c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(FieldPtr field, std::size_t degree, Element c) {
  std::vector<Element> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::x_n_minus_one(FieldPtr field, std::size_t n) {
  std::vector<Element> v(n + 1, 0);
  v[n] = 1;
  v[0] = field->add(v[0], field->neg(1));
  return Polynomial(std::move(field), std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Polynomial Polynomial::scaled(Element c) const {
  std::vector<Element> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
  return Polynomial(field_, std::move(v));
}

Polynomial::Element Polynomial::evaluate(Element x) const {
  Element acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

std::vector<Polynomial::Element> Polynomial::cyclic_vector(std::size_t n) const {
  std::vector<Element> v(n, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i % n] = field_->add(v[i % n], coeffs_[i]);
  return v;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = *a.field();
  std::vector<Field::Element> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.field(), std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = *a.field();
  std::vector<Field::Element> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.field(), std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  const Field& f = *a.field();
  std::vector<Field::Element> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(a.field(), std::move(v));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field()->spec() == b.field()->spec() && a.coeffs_ == b.coeffs_;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Element c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i > 0) {
      if (c != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error("division by zero polynomial");
  const Field& f = *a.field();
  std::vector<Field::Element> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial(a.field()), a};
  std::vector<Field::Element> quot(rem.size() - db, 0);
  const Field::Element lead_inv = f.inv(b.leading());
  const auto& bc = b.coefficients();
  for (std::size_t i = rem.size(); i-- > db;) {
    const Field::Element c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = i - db;
    quot[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, bc[j]));
  }
  rem.resize(db);
  return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const FieldPtr& f = a.field();
  Polynomial old_r = a, r = b;
  Polynomial old_s = Polynomial::constant(f, 1), s(f);
  Polynomial old_t(f), t = Polynomial::constant(f, 1);
  while (!r.is_zero()) {
    DivMod dm = poly_divmod(old_r, r);
    old_r = std::exchange(r, dm.remainder);
    old_s = std::exchange(s, old_s - dm.quotient * s);
    old_t = std::exchange(t, old_t - dm.quotient * t);
  }
  if (old_r.is_zero()) return {old_r, old_s, old_t};
  const Field::Element norm = f->inv(old_r.leading());
  return {old_r.scaled(norm), old_s.scaled(norm), old_t.scaled(norm)};
}

Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus) {
  return poly_divmod(a * b, modulus).remainder;
}

Polynomial poly_powmod(Polynomial base, unsigned __int128 exp, const Polynomial& modulus) {
  Polynomial result = poly_divmod(Polynomial::constant(base.field(), 1), modulus).remainder;
  base = poly_divmod(base, modulus).remainder;
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, modulus);
    base = poly_mulmod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

bool is_irreducible(const Polynomial& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (f.coeff(0) == 0) return false;
  const FieldPtr& field = f.field();
  const Polynomial x = Polynomial::monomial(field, 1);
  Polynomial h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = poly_powmod(h, field->order(), f);
    Polynomial diff = h - x;
    if (diff.is_zero()) return false;
    if (poly_gcd(f, diff).degree() > 0) return false;
  }
  return true;
}

Polynomial least_irreducible(const FieldPtr& field, std::size_t degree) {
  if (degree == 0) throw Error("degree must be positive");
  if (degree == 1) return Polynomial::monomial(field, 1);
  const std::uint32_t q = field->order();
  std::vector<Field::Element> coeffs(degree + 1, 0);
  coeffs[degree] = 1;
  // Odometer over (c_{d-1}, ..., c_0) with c_0 the fastest digit.
  for (;;) {
    Polynomial f(field, coeffs);
    if (is_irreducible(f)) return f;
    std::size_t i = 0;
    while (i < degree && ++coeffs[i] == q) coeffs[i++] = 0;
    if (i == degree) break;
  }
  throw Error("no irreducible polynomial found");
}

}  // namespace cycperm
