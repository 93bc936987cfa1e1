#include "cycperm/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

#include "cycperm/error.hpp"
#include "cycperm/numtheory.hpp"

namespace cycperm {

std::vector<Coset> cyclotomic_cosets(std::uint32_t n, std::uint64_t q) {
  if (n == 0) throw Error("length must be positive");
  if (std::gcd(static_cast<std::uint64_t>(n), q) != 1) throw Error("not coprime");
  std::vector<Coset> cosets;
  std::vector<bool> seen(n, false);
  const std::uint64_t qm = q % n;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Coset c;
    std::uint64_t j = start;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(static_cast<std::uint32_t>(j));
      j = j * qm % n;
    }
    std::sort(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }
  return cosets;
}

namespace {

std::size_t extension_degree(std::uint32_t n, std::uint32_t q) {
  return n == 1 ? 1 : static_cast<std::size_t>(multiplicative_order(q, n));
}

}  // namespace

CyclotomicContext::CyclotomicContext(FieldPtr field, std::uint32_t n)
    : field_(std::move(field)),
      n_(n),
      cosets_(cyclotomic_cosets(n, field_->order())),
      coset_index_(n),
      ext_(field_, extension_degree(n, field_->order())),
      root_(ext_.root_of_unity(n)) {
  for (std::size_t i = 0; i < cosets_.size(); ++i) {
    for (std::uint32_t j : cosets_[i]) coset_index_[j] = i;
  }
  // Powers alpha^j for all j, then one product per coset with coefficients
  // carried in the splitting field.
  std::vector<SplittingField::Element> powers(n_);
  powers[0] = ext_.one();
  for (std::uint32_t j = 1; j < n_; ++j) powers[j] = ext_.mul(powers[j - 1], root_);

  minimal_.reserve(cosets_.size());
  for (const Coset& c : cosets_) {
    std::vector<SplittingField::Element> acc{ext_.one()};
    for (std::uint32_t j : c) {
      // acc *= (x - alpha^j)
      std::vector<SplittingField::Element> next(acc.size() + 1, ext_.zero());
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i + 1] = ext_.add(next[i + 1], acc[i]);
        next[i] = ext_.sub(next[i], ext_.mul(acc[i], powers[j]));
      }
      acc = std::move(next);
    }
    std::vector<Field::Element> coeffs(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (!ext_.in_base(acc[i])) throw Error("minimal polynomial not over the base field");
      coeffs[i] = acc[i][0];
    }
    minimal_.emplace_back(field_, std::move(coeffs));
  }
}

Polynomial CyclotomicContext::product_over(const std::vector<std::uint32_t>& exponents) const {
  std::vector<bool> in_set(n_, false);
  for (std::uint32_t j : exponents) {
    if (j >= n_) throw Error("exponent out of range");
    in_set[j] = true;
  }
  Polynomial g = Polynomial::constant(field_, 1);
  for (std::size_t i = 0; i < cosets_.size(); ++i) {
    const Coset& c = cosets_[i];
    const auto hits = std::count_if(c.begin(), c.end(), [&](std::uint32_t j) { return in_set[j]; });
    if (hits == 0) continue;
    if (static_cast<std::size_t>(hits) != c.size()) throw Error("not a coset");
    g = g * minimal_[i];
  }
  return g;
}

Polynomial minimal_polynomial(const FieldPtr& field, std::uint32_t n, const std::vector<std::uint32_t>& coset) {
  if (coset.empty()) throw Error("not a coset");
  CyclotomicContext ctx(field, n);
  std::vector<std::uint32_t> sorted = coset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= n) throw Error("not a coset");
  const std::size_t idx = ctx.coset_of(sorted.front());
  if (ctx.cosets()[idx] != sorted) throw Error("not a coset");
  return ctx.minimal_polynomial(idx);
}

std::vector<Polynomial> factor_x_n_minus_one(const FieldPtr& field, std::uint32_t n) {
  CyclotomicContext ctx(field, n);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ctx.cosets().size(); ++i) out.push_back(ctx.minimal_polynomial(i));
  return out;
}

}  // namespace cycperm
