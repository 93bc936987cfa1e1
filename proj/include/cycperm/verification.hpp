#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycperm/equivalence.hpp"

namespace cycperm {

enum class RowStatus { Match, Mismatch, Partial };
std::string to_string(RowStatus s);

/// One checked claim: expected value, computed value and verdict. Partial
/// marks a distance that is only bracketed by an interval containing the
/// expected value.
struct VerificationRow {
  std::string id;
  int criterion = 0;
  std::string claim;
  std::string expected;
  std::string computed;
  RowStatus status = RowStatus::Mismatch;
  double seconds = 0;
};

struct VerificationScopes {
  bool tables = true;   // counting formula and the (q, p, m) table
  bool lemmas = true;   // multipliers, normalizers, H(P) sets, G_k, blocks, equivalence
  bool qc = true;       // quasi-cyclic normalizers and imprimitivity
  bool slow = false;    // backtracked automorphism groups
};

/// Parses a comma-separated list of tables, lemmas, qc, slow, fast (the first
/// three) or all.
VerificationScopes parse_scopes(const std::string& list);

struct VerificationOptions {
  EquivalenceOptions budgets;
  std::uint64_t seed = 0;
};

std::vector<VerificationRow> run_verification(const VerificationScopes& scopes, const VerificationOptions& options = {});

/// Same rows restricted to one acceptance criterion (1..12).
std::vector<VerificationRow> run_criterion(int criterion, const VerificationOptions& options = {});

std::string to_csv(const std::vector<VerificationRow>& rows);

}  // namespace cycperm
