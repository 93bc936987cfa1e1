#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cycperm/linear_code.hpp"

namespace cycperm {

inline constexpr std::uint64_t kDefaultDistanceBudget = 20'000'000;

/// Number of codewords of each weight. Exact profiles sum to q^k.
struct WeightProfile {
  std::map<std::size_t, std::uint64_t> counts;
  bool exact = false;

  bool operator==(const WeightProfile&) const = default;
};

/// Exhaustive weight distribution; throws BudgetExceeded when q^k > budget.
WeightProfile weight_distribution(const LinearCode& code, std::uint64_t budget = kDefaultDistanceBudget);

enum class DistanceMethod { Exhaustive, Support, Interval };

/// Minimum distance, exact or as the interval [lower, upper]. The zero code
/// is given distance n + 1.
struct DistanceResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  DistanceMethod method = DistanceMethod::Interval;
  std::uint64_t work = 0;

  /// Throws Error("distance not certified") unless exact.
  std::size_t value() const;
};

std::string to_string(DistanceMethod method);

/// Exhaustive codeword enumeration when q^k <= budget. Otherwise
/// iterative deepening over column subsets of the parity-check matrix: a level
/// w costs C(n, w) rank tests and is attempted only while the running total
/// stays within budget.
DistanceResult min_distance(const LinearCode& code, std::uint64_t budget = kDefaultDistanceBudget);

/// Supports (bit i = coordinate i) of all codewords of weight d, where d is the
/// exact minimum distance. Requires n <= 64. Throws BudgetExceeded if the
/// distance cannot be certified within budget.
std::vector<std::uint64_t> min_weight_supports(const LinearCode& code,
                                               std::uint64_t budget = kDefaultDistanceBudget);

struct MdsReport {
  bool mds = false;
  /// gcd(n - 2, d - 2) == 1.
  bool gcd_condition = false;
};

MdsReport is_mds(const LinearCode& code, const DistanceResult& distance);

}  // namespace cycperm
