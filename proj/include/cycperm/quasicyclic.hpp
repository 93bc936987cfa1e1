#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycperm/equivalence.hpp"
#include "cycperm/linear_code.hpp"
#include "cycperm/perm_group.hpp"

namespace cycperm {

/// A linear code of length n = l m invariant under T^l.
struct QuasiCyclicCode {
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  LinearCode code;
};

/// Wraps a code after checking T^l(C) = C. Throws Error("index does not divide
/// the length") or Error("code is not invariant under T^l").
QuasiCyclicCode quasi_cyclic_code(LinearCode code, std::size_t l);

/// Span of the T^{lj} shifts of the given words.
QuasiCyclicCode qc_from_generators(const FieldPtr& field, std::size_t n, std::size_t l,
                                   const std::vector<Vector>& words);

/// Smallest l' dividing n with T^{l'}(C) = C.
std::size_t minimal_index(const LinearCode& code);

/// sigma_i = (i, i+l, ..., i+(m-1)l) for 0 <= i < l. Throws if l does not divide n.
std::vector<Permutation> sigma_cycles(std::size_t n, std::size_t l);

struct NormalizerWitnesses {
  PermGroup q;  // <sigma_0, ..., sigma_{l-1}, T>
  std::vector<Permutation> affine;
  std::uint64_t checked = 0;
};

/// Builds <sigma_i, T> and AG(n) and checks that each element conjugates T^l
/// into <T^l>, with tau_{a,b} T^l tau_{a,b}^{-1} = T^{la} for affine maps.
/// Requires gcd(m, l) = 1; a failing element throws an Error naming it.
NormalizerWitnesses normalizer_witnesses(std::size_t n, std::size_t l);

/// sigma^{-1} T^l sigma in P. Throws Error("P must contain T^l") otherwise.
bool hprime_membership(const Permutation& sigma, const PermGroup& p_group, std::size_t l);

/// The p-subgroup used for H'(P): <T^l> ascended to a Sylow p-subgroup of the
/// known subgroup of Per(C).
struct QcSylow {
  std::uint64_t p = 0;
  unsigned r = 0;
  PermGroup p_group;
  std::uint64_t known_order = 0;
  /// The known subgroup is all of Per(C) (backtracked and enumerable).
  bool certified = false;
  std::string source;
};

QcSylow qc_sylow(const QuasiCyclicCode& code, const EquivalenceOptions& options = {});

/// Decides sigma(C) = C' over H'(P) families. Only an exhaustive scan (the
/// brute strategy, or the brute H'(P) set with a certified P) is complete.
Verdict qc_equivalence_search(const QuasiCyclicCode& c, const QuasiCyclicCode& c2, Strategy strategy,
                              const EquivalenceOptions& options = {});

struct HPrimeReport {
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t minimal_index = 0;
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t p_order = 0;
  std::vector<Permutation> p_generators;
  bool p_certified = false;
  std::string p_source;

  /// H'(P) elements found and whether they are all of H'(P).
  std::uint64_t elements_found = 0;
  bool exhaustive = false;
  std::vector<std::string> families;

  std::vector<Permutation> closure_generators;
  /// Order of the generated group when it fits the enumeration bound.
  std::optional<std::uint64_t> closure_order;
  std::uint64_t closure_lower_bound = 0;
  /// |<H'(P)>| / |H'(P) found|, when the closure order is known.
  std::optional<double> closure_defect;

  bool primitive = false;
  std::vector<BlockSystem> block_systems;
  /// Divisors b of n for which the residues mod b form a block system.
  std::vector<std::size_t> residue_moduli;

  std::vector<bool> sigma_membership;
  std::uint64_t williamson_cycle = 0;
  bool williamson_holds = false;
  bool shift_is_odd = false;
  std::string conclusion;
};

HPrimeReport imprimitivity_report(const QuasiCyclicCode& code, const EquivalenceOptions& options = {});

}  // namespace cycperm
