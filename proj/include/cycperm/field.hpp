#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cycperm {

/// GF(p^s) given by a prime characteristic p, the extension degree s and a
/// monic irreducible modulus over GF(p) (coefficients low to high).
struct FieldSpec {
  std::uint32_t characteristic = 2;
  std::uint32_t degree = 1;
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

/// Table-driven arithmetic in a finite field of order at most 2^16.
///
/// An element is encoded as the integer sum c_i p^i of the coefficients of
/// its residue polynomial, so 0 and 1 are the additive and multiplicative
/// identities and the prime subfield is {0, ..., p-1}.
class Field {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t characteristic() const noexcept { return spec_.characteristic; }
  std::uint32_t degree() const noexcept { return spec_.degree; }
  bool is_prime_field() const noexcept { return spec_.degree == 1; }

  Element add(Element a, Element b) const noexcept {
    if (is_prime_field()) {
      Element s = a + b;
      return s >= order_ ? s - order_ : s;
    }
    if (spec_.characteristic == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    return add_digitwise(a, b);
  }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Multiplicative inverse; a must be nonzero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t v) const noexcept;

  /// Fixed primitive element used to build the log tables.
  Element primitive_element() const noexcept { return exp_[1]; }

  std::string to_string() const;

 private:
  Element add_digitwise(Element a, Element b) const noexcept;

  FieldSpec spec_;
  std::uint32_t order_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Element> neg_;
  std::vector<std::uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(characteristic^degree) with the lexicographically least monic
/// irreducible modulus (coefficients compared from x^{degree-1} down to the
/// constant term). Degree 1 uses the modulus x.
FieldPtr make_field(std::uint32_t characteristic, std::uint32_t degree);

/// GF(q) for a prime power q.
FieldPtr make_field_of_order(std::uint32_t q);

/// Field built from an explicit spec; validates primality and irreducibility.
FieldPtr make_field(const FieldSpec& spec);

}  // namespace cycperm
