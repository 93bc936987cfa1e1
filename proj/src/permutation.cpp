#include "cycperm/permutation.hpp"

#include <numeric>
#include <sstream>

#include "cycperm/error.hpp"

namespace cycperm {

Permutation::Permutation(std::size_t n) : images_(n) {
  if (n > 65536) throw Error("degree too large");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || hit[v]) throw Error("not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || used[c[i]]) throw Error("cycles are not disjoint");
      used[c[i]] = true;
      images[c[i]] = static_cast<Point>(c[(i + 1) % c.size()]);
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation result(images_.size());
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Permutation Permutation::conjugated_by(const Permutation& sigma) const { return sigma.inverse() * *this * sigma; }

std::vector<std::vector<Permutation::Point>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> c;
    for (std::size_t j = start; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(static_cast<Point>(j));
    }
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

u128 Permutation::order() const {
  u128 result = 1;
  for (const auto& c : cycles()) {
    const std::uint64_t len = c.size();
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(result % len), len);
    const u128 factor = len / g;
    if (result > (~static_cast<u128>(0)) / factor) throw Error("permutation order overflows");
    result *= factor;
  }
  return result;
}

bool Permutation::is_odd() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 1;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ")";
  }
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error("degree mismatch");
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

Permutation shift(std::size_t n) { return power_shift(n, 1); }

Permutation power_shift(std::size_t n, std::size_t l) {
  if (n == 0) throw Error("length must be positive");
  std::vector<Permutation::Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Permutation::Point>((i + l) % n);
  return Permutation(std::move(images));
}

Permutation affine(std::size_t n, std::uint64_t a, std::uint64_t b) {
  if (n == 0) throw Error("length must be positive");
  if (std::gcd(a % n, static_cast<std::uint64_t>(n)) != 1 && n > 1) throw Error("not a unit");
  std::vector<Permutation::Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Permutation::Point>((a % n * i + b) % n);
  return Permutation(std::move(images));
}

Permutation multiplier(std::size_t n, std::uint64_t a) { return affine(n, a, 0); }

Permutation generalized_multiplier(std::size_t n, unsigned k, std::uint64_t a, std::uint64_t c) {
  const auto pp = as_prime_power(n);
  if (!pp) throw Error("length is not a prime power");
  if (k < 1 || k > pp->exponent) throw Error("k out of range");
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= pp->prime;
  if (a % pp->prime == 0) throw Error("not a unit");
  std::vector<Permutation::Point> images(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t i = j % pk, high = j - i;
    images[j] = static_cast<Permutation::Point>((a % pk * i + c) % pk + high);
  }
  return Permutation(std::move(images));
}

}  // namespace cycperm
