#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycperm/cyclic_code.hpp"
#include "cycperm/distance.hpp"
#include "cycperm/linear_code.hpp"
#include "cycperm/perm_group.hpp"

namespace cycperm {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

// ---------------------------------------------------------------------------
// Multipliers and generalized multipliers

struct MultiplierScan {
  std::vector<std::uint32_t> multiplier_set;  // {a unit : a D = D}
  std::size_t m = 0;
  /// Hits re-verified with the matrix test.
  std::vector<std::uint32_t> audited;
};

/// Scan on defining sets, with the matrix test run on up to three hits
/// chosen by the seed. A disagreement throws.
MultiplierScan multiplier_scan(const CyclicCode& code, std::uint64_t seed = 0);

/// M_{p+1}(C) == C for a code of length p^r. Throws for other lengths.
bool check_m_p_plus_1(const CyclicCode& code);

struct GkFamily {
  unsigned k = 0;
  std::uint64_t t_k = 0;  // ord_{p^k}(q)
  PermGroup group;        // G_k
  std::vector<Permutation> h_k;
  bool idempotent_fixed = true;
};

/// G_k = {mu_{q^i,c}^{(p^k)}} and H_k = {mu_{q^i,0}^{(p^k)}} for a cyclic code of
/// length p^r. Throws Error("hypothesis z=1 violated") when z != 1, and an
/// Error naming the element if some member of G_k does not fix the code.
GkFamily gk_family(const CyclicCode& code, unsigned k);

// ---------------------------------------------------------------------------
// Full group by backtracking

struct FullGroup {
  u128 order = 0;
  std::vector<Permutation> generators;
  /// Orbit length of point i under the pointwise stabilizer of 0..i-1.
  std::vector<std::size_t> orbit_lengths;
  std::uint64_t nodes = 0;
};

/// Per(C) by depth-first search over coordinate images, pruned with
/// minimum-weight support statistics of C and its dual; leaves pass the full
/// matrix test. Throws BudgetExceeded with the order found so far.
FullGroup backtrack_full_group(const LinearCode& code, std::uint64_t node_budget = kDefaultNodeBudget,
                               std::uint64_t distance_budget = kDefaultDistanceBudget);

// ---------------------------------------------------------------------------
// Classification

enum class GroupLabel { ElementarySn, AffineSubgroup, Psl2_11, M11, M23, PGammaL, Imprimitive, Unresolved };

std::string to_string(GroupLabel label);

struct GroupClass {
  GroupLabel label = GroupLabel::Unresolved;
  std::uint64_t p = 0;  // AffineSubgroup
  std::uint64_t m = 0;
  unsigned d = 0;       // PGammaL
  std::uint64_t t = 0;
  std::vector<BlockSystem> blocks;  // Imprimitive
  /// Label obtained from theory rather than a computed full group.
  bool theory_backed = false;
  std::string evidence;
};

/// n = (t^d - 1)/(t - 1) with t a prime power and d >= 3.
struct ProjectiveShape {
  unsigned d;
  std::uint64_t t;
};
std::vector<ProjectiveShape> projective_shapes(std::uint64_t n);

/// |PGL(d, t)|, |PSL(d, t)| and |PGammaL(d, t)|.
u128 pgl_order(unsigned d, std::uint64_t t);
u128 psl_order(unsigned d, std::uint64_t t);
u128 pgammal_order(unsigned d, std::uint64_t t);

/// GL(d, 2) acting on the coordinates of a binary code of length 2^d - 1,
/// coordinate i identified with alpha^i in GF(2^d) for the canonical root.
struct ProjectiveWitness {
  unsigned d = 0;
  std::vector<Permutation> generators;  // elementary transvections
  u128 order = 0;
  bool order_enumerated = false;
  bool fixes_code = false;
};

/// Built when q = 2 and n = 2^d - 1 with d >= 3, else nullopt.
std::optional<ProjectiveWitness> projective_witness(const CyclicCode& code,
                                                    std::uint64_t enumeration_bound = kDefaultEnumerationBound);

struct AutoReport {
  std::size_t n = 0;
  std::size_t k = 0;
  DistanceResult distance;
  std::vector<std::uint32_t> multiplier_set;
  std::size_t m = 0;
  std::vector<Permutation> discovered_generators;
  std::optional<u128> known_subgroup_order;
  std::optional<u128> full_group_order;
  std::vector<Permutation> full_generators;
  std::vector<BlockSystem> block_systems;
  bool full_group_primitive = false;
  std::vector<std::pair<unsigned, std::uint64_t>> gk_orders;  // (k, |G_k|)
  std::optional<unsigned> z;
  std::optional<bool> sylow_bounds_hold;
  bool backtrack_budget_exhausted = false;
  std::uint64_t backtrack_nodes = 0;
  bool is_elementary = false;
  std::optional<ProjectiveWitness> projective;
  GroupClass classification;
};

struct AnalyzeOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  /// Run the backtrack when n is at most this.
  std::size_t backtrack_max_length = 24;
  std::uint64_t seed = 0;
};

AutoReport analyze(const CyclicCode& code, const AnalyzeOptions& options = {});

/// Decision tree over an assembled report.
GroupClass classify(const LinearCode& code, const AutoReport& report);

/// r <= s <= (p^r - 1)/(p - 1), plus 2r - 1 <= s when z = 1.
bool sylow_exponent_bounds(std::uint64_t n, std::uint64_t q, unsigned s);

}  // namespace cycperm
