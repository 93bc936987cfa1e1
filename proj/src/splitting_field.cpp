#include "cycperm/splitting_field.hpp"

#include "cycperm/error.hpp"

namespace cycperm {

SplittingField::SplittingField(FieldPtr base, std::size_t degree)
    : base_(std::move(base)), degree_(degree), modulus_(base_) {
  if (degree_ == 0) throw Error("extension degree must be positive");
  u128 order = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (order > (static_cast<u128>(1) << 127) / base_->order()) throw Error("splitting field too large");
    order *= base_->order();
  }
  order_ = order;
  modulus_ = least_irreducible(base_, degree_);
}

SplittingField::Element SplittingField::one() const {
  Element e(degree_, 0);
  e[0] = 1;
  return e;
}

SplittingField::Element SplittingField::embed(Field::Element c) const {
  Element e(degree_, 0);
  e[0] = c;
  return e;
}

SplittingField::Element SplittingField::from_index(u128 index) const {
  Element e(degree_, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    e[i] = static_cast<Field::Element>(index % base_->order());
    index /= base_->order();
  }
  return e;
}

SplittingField::Element SplittingField::add(const Element& a, const Element& b) const {
  Element r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[i] = base_->add(a[i], b[i]);
  return r;
}

SplittingField::Element SplittingField::sub(const Element& a, const Element& b) const {
  Element r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[i] = base_->sub(a[i], b[i]);
  return r;
}

SplittingField::Element SplittingField::mul(const Element& a, const Element& b) const {
  const Field& f = *base_;
  std::vector<Field::Element> prod(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  // Reduce by the monic modulus from the top down.
  const auto& m = modulus_.coefficients();
  for (std::size_t i = prod.size(); i-- > degree_;) {
    const Field::Element c = prod[i];
    if (c == 0) continue;
    const std::size_t shift = i - degree_;
    for (std::size_t j = 0; j <= degree_; ++j) prod[shift + j] = f.sub(prod[shift + j], f.mul(c, m[j]));
  }
  prod.resize(degree_);
  return prod;
}

SplittingField::Element SplittingField::pow(Element a, u128 e) const {
  Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

bool SplittingField::is_one(const Element& a) const {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < degree_; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

bool SplittingField::in_base(const Element& a) const {
  for (std::size_t i = 1; i < degree_; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

SplittingField::Element SplittingField::root_of_unity(std::uint64_t n) const {
  if (n == 0 || (order_ - 1) % n != 0) throw Error("no primitive root of this order");
  const u128 cofactor = (order_ - 1) / n;
  const auto primes = prime_factors(n);
  for (u128 index = 1; index < order_; ++index) {
    Element candidate = pow(from_index(index), cofactor);
    bool exact = true;
    for (std::uint64_t r : primes) {
      if (is_one(pow(candidate, n / r))) {
        exact = false;
        break;
      }
    }
    if (exact) return candidate;
  }
  throw Error("no primitive root of this order");
}

}  // namespace cycperm
