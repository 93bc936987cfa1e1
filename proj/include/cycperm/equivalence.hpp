#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cycperm/autgroups.hpp"
#include "cycperm/cyclic_code.hpp"
#include "cycperm/perm_group.hpp"

namespace cycperm {

// ---------------------------------------------------------------------------
// Multiplier completeness

/// gcd(n, phi(n)) = 1 or n = 4.
bool palfy_multiplier_complete(std::uint64_t n);

/// n = p r with primes p > r, the case where multiplier completeness further
/// depends on the Sylow p-subgroup of Per(C) having order p.
bool palfy_conditional_shape(std::uint64_t n);

// ---------------------------------------------------------------------------
// H(P) and the polynomial groups

/// sigma^{-1} T sigma in P. Throws Error("P must contain the shift") if T is
/// not in P.
bool hp_membership(const Permutation& sigma, const PermGroup& p_group);

/// i -> a_0 + a_1 i + ... + a_m i^m mod p^r.
struct QPolyMap {
  std::vector<std::uint64_t> coefficients;
  std::uint64_t modulus = 0;

  std::uint64_t operator()(std::uint64_t i) const;
  /// Throws Error("not a bijection") when the induced map is not one.
  Permutation to_permutation() const;
  /// gcd(a_1, p) = 1 and p^{r-1} | a_i for i >= 2.
  bool in_q() const;
  /// in_q() and a_1 = 1 mod p^{r-1}.
  bool in_q1() const;
};

struct QGroups {
  PermGroup q;   // Q^m
  PermGroup q1;  // Q_1^m
};

/// Q^m and Q_1^m on Z_{p^r}. Throws Error("degree bound violated") if m >= p.
QGroups q_group(std::uint64_t n, unsigned m, std::uint64_t bound = kDefaultEnumerationBound);

enum class HPKind { AgSet, QSet, GrFormula, Predicate };
std::string to_string(HPKind kind);

struct HPDescriptor {
  HPKind kind = HPKind::Predicate;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  unsigned r = 0;
  /// Sylow exponent: |P| = p^s.
  unsigned sylow_exponent = 0;
  /// Q_SET: the set is Q^{s-1}.
  unsigned q_degree = 0;
  /// GR_FORMULA: field order q and t_1 = ord_p(q).
  std::uint64_t q = 0;
  std::uint64_t t1 = 0;
  /// The descriptor provably covers all of H(P) for the true Sylow of Per(C).
  bool complete = false;
  /// P itself (needed for PREDICATE).
  PermGroup p_group;
};

/// All affine maps tau_{a,b} on Z_n.
std::vector<Permutation> affine_group_elements(std::uint64_t n);

/// i -> q^{ij} a + c (q^{(i-1)j} + ... + q^j + 1) mod p^r over 0 <= j < t p^{r-1}
/// and a, c in Z_{p^r}; non-bijections dropped, duplicates merged, sorted.
std::vector<Permutation> gr_formula_set(std::uint64_t n, std::uint64_t q);

/// {sigma in S_n : sigma^{-1} T^l sigma in P} by exhaustive scan (n <= 10).
std::vector<Permutation> brute_hp_set(const PermGroup& p_group, std::size_t l = 1);

/// Materializes the descriptor's set, sorted lexicographically.
std::vector<Permutation> hp_set(const HPDescriptor& descriptor);

// ---------------------------------------------------------------------------
// Equivalence decisions

enum class Strategy { Multiplier, HP, Brute };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

enum class VerdictStatus { Equivalent, Inequivalent, Inconclusive };
std::string to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<Permutation> witness;
  Strategy strategy = Strategy::Brute;
  bool complete = false;
  std::string evidence;
  std::optional<HPDescriptor> descriptor;
  std::uint64_t candidates = 0;
};

struct EquivalenceOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  /// Largest n for the exhaustive oracle.
  std::size_t brute_max_length = kMaxBruteDegree;
};

/// Everything the HP strategy derives from C alone; reusable across many C'.
struct HPPlan {
  HPDescriptor descriptor;
  std::vector<Permutation> candidates;  // sorted
  /// The known subgroup of Per(C) in which P was found, and whether it is all of Per(C).
  std::uint64_t known_order = 0;
  bool known_is_full = false;
  bool sylow_certified = false;
  std::string notes;
};

HPPlan build_hp_plan(const CyclicCode& code, const EquivalenceOptions& options = {});

/// Lexicographically least sigma with sigma(C) = C' among sorted candidates.
std::optional<Permutation> first_witness(const LinearCode& c, const LinearCode& c2,
                                         const std::vector<Permutation>& sorted_candidates);

/// Least sigma in S_n with sigma(C) = C' (n <= brute_max_length).
std::optional<Permutation> brute_witness(const LinearCode& c, const LinearCode& c2,
                                         std::size_t max_length = kMaxBruteDegree);

/// Dimension or exact weight profile differs (sound inequivalence test).
std::optional<std::string> separating_invariant(const LinearCode& c, const LinearCode& c2,
                                                std::uint64_t distance_budget = kDefaultDistanceBudget);

Verdict decide_equivalence(const CyclicCode& c, const CyclicCode& c2, Strategy strategy,
                           const EquivalenceOptions& options = {});

/// HP decision with a prebuilt plan for C.
Verdict decide_with_plan(const HPPlan& plan, const CyclicCode& c, const CyclicCode& c2,
                         const EquivalenceOptions& options = {});

}  // namespace cycperm
