#pragma once

#include <cstdint>
#include <vector>

#include "cycperm/polynomial.hpp"
#include "cycperm/splitting_field.hpp"

namespace cycperm {

using Coset = std::vector<std::uint32_t>;

/// Orbits of {0, ..., n-1} under multiplication by q mod n, each sorted, the
/// list sorted by least element. Throws Error("not coprime") if gcd(n, q) != 1.
std::vector<Coset> cyclotomic_cosets(std::uint32_t n, std::uint64_t q);

/// x^n - 1 over a field together with its splitting field and the canonical
/// primitive n-th root of unity. Minimal polynomials are cached per coset.
class CyclotomicContext {
 public:
  CyclotomicContext(FieldPtr field, std::uint32_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t length() const noexcept { return n_; }
  const SplittingField& splitting_field() const noexcept { return ext_; }
  const SplittingField::Element& root() const noexcept { return root_; }
  const std::vector<Coset>& cosets() const noexcept { return cosets_; }

  /// Index into cosets() of the coset containing j.
  std::size_t coset_of(std::uint32_t j) const { return coset_index_.at(j % n_); }

  /// Monic irreducible factor prod_{j in coset} (x - alpha^j).
  const Polynomial& minimal_polynomial(std::size_t coset_index) const { return minimal_.at(coset_index); }

  /// Product of the minimal polynomials of every coset meeting the set.
  /// Throws Error("not a coset") unless the set is a union of cosets.
  Polynomial product_over(const std::vector<std::uint32_t>& exponents) const;

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::vector<Coset> cosets_;
  std::vector<std::size_t> coset_index_;
  SplittingField ext_;
  SplittingField::Element root_;
  std::vector<Polynomial> minimal_;
};

/// Minimal polynomial of alpha^coset for the canonical root alpha.
/// Throws Error("not a coset") if the set is not a single q-cyclotomic coset.
Polynomial minimal_polynomial(const FieldPtr& field, std::uint32_t n, const std::vector<std::uint32_t>& coset);

/// Irreducible factors of x^n - 1, one per coset in cyclotomic_cosets order.
std::vector<Polynomial> factor_x_n_minus_one(const FieldPtr& field, std::uint32_t n);

}  // namespace cycperm
