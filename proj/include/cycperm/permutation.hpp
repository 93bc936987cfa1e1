#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cycperm/numtheory.hpp"

namespace cycperm {

/// A permutation of {0, ..., n-1} stored as its image array.
/// Composition follows function notation: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  /// Identity on n points.
  explicit Permutation(std::size_t n);
  /// Validates that images is a bijection; throws Error("not a bijection").
  explicit Permutation(std::vector<Point> images);

  /// Skips the bijection check; for hot loops over known permutations.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(std::size_t i) const noexcept { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  /// sigma^{-1} * this * sigma.
  Permutation conjugated_by(const Permutation& sigma) const;

  /// Disjoint cycles, each starting at its least point, sorted by that point.
  /// Fixed points are omitted unless requested.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  /// Least common multiple of the cycle lengths; throws if it overflows.
  u128 order() const;
  /// True for odd permutations.
  bool is_odd() const;

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<Point> images_;
};

/// T : i -> i + 1 mod n.
Permutation shift(std::size_t n);
/// T^l : i -> i + l mod n.
Permutation power_shift(std::size_t n, std::size_t l);
/// tau_{a,b} : i -> a i + b mod n; throws Error("not a unit") if gcd(a, n) != 1.
Permutation affine(std::size_t n, std::uint64_t a, std::uint64_t b);
/// M_a = tau_{a,0}.
Permutation multiplier(std::size_t n, std::uint64_t a);
/// mu_{a,c}^{(p^k)} on n = p^r points: i + b p^k -> ((a i + c) mod p^k) + b p^k.
Permutation generalized_multiplier(std::size_t n, unsigned k, std::uint64_t a, std::uint64_t c);

}  // namespace cycperm

template <>
struct std::hash<cycperm::Permutation> {
  std::size_t operator()(const cycperm::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};
