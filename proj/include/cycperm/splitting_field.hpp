#pragma once

#include <vector>

#include "cycperm/numtheory.hpp"
#include "cycperm/polynomial.hpp"

namespace cycperm {

/// GF(q^t) represented as GF(q)[y]/(f) for the least monic irreducible f of
/// degree t. Elements are dense coefficient vectors of length t; there are no
/// lookup tables, so q^t may be far beyond the table-driven bound.
class SplittingField {
 public:
  using Element = std::vector<Field::Element>;

  SplittingField(FieldPtr base, std::size_t degree);

  const FieldPtr& base() const noexcept { return base_; }
  std::size_t degree() const noexcept { return degree_; }
  const Polynomial& modulus() const noexcept { return modulus_; }
  /// q^t; throws when it does not fit in 127 bits.
  u128 order() const noexcept { return order_; }

  Element zero() const { return Element(degree_, 0); }
  Element one() const;
  Element embed(Field::Element c) const;
  /// Element whose coefficient vector is the base-q digits of index.
  Element from_index(u128 index) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(Element a, u128 e) const;
  bool is_one(const Element& a) const;
  /// True when the element lies in the base field (all higher coefficients 0).
  bool in_base(const Element& a) const;

  /// Canonical primitive n-th root of unity: g^((q^t-1)/n) for the least g
  /// (in index order) for which that power has order exactly n.
  Element root_of_unity(std::uint64_t n) const;

 private:
  FieldPtr base_;
  std::size_t degree_;
  Polynomial modulus_;
  u128 order_;
};

}  // namespace cycperm
