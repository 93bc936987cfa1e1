#pragma once

#include <cstdint>
#include <vector>

#include "cycperm/cyclotomic.hpp"
#include "cycperm/linear_code.hpp"
#include "cycperm/polynomial.hpp"

namespace cycperm {

/// A cyclic code of length n over GF(q) given by its defining set, the
/// exponents j for which alpha^j is a root of every codeword.
struct CyclicCodeSpec {
  FieldPtr field;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> defining_set;  // sorted
  Polynomial generator_poly;

  std::size_t dimension() const noexcept { return n - defining_set.size(); }
};

struct CyclicCode {
  CyclicCodeSpec spec;
  LinearCode code;
};

/// Throws Error("not Frobenius-closed") if the set is not a union of cosets.
CyclicCodeSpec cyclic_code_spec(const CyclotomicContext& ctx, std::vector<std::uint32_t> defining_set);

/// Generator matrix from the shifts x^i g(x), i < k, reduced to canonical form.
LinearCode to_linear_code(const CyclicCodeSpec& spec);

CyclicCode cyclic_code(const CyclotomicContext& ctx, std::vector<std::uint32_t> defining_set);
CyclicCode cyclic_code(const FieldPtr& field, std::uint32_t n, std::vector<std::uint32_t> defining_set);

/// Every cyclic code of length n: one per union of cosets, ordered by the
/// bitmask of included cosets. Throws when there are more than 20 cosets.
std::vector<CyclicCodeSpec> enumerate_cyclic_codes(const CyclotomicContext& ctx);
std::vector<CyclicCodeSpec> enumerate_cyclic_codes(const FieldPtr& field, std::uint32_t n);

/// Number of cyclic codes of length n over GF(q), 2^{#cosets}.
u128 count_cyclic_codes(std::uint32_t n, std::uint64_t q);

struct Idempotent {
  Polynomial polynomial;
  /// Set for the zero code, whose idempotent is the zero polynomial.
  bool zero_code = false;
};

/// The generating idempotent e with e^2 = e mod x^n - 1 and <e> = C.
Idempotent idempotent(const CyclicCodeSpec& spec);

/// Defining set of the dual code: complement of -D mod n.
std::vector<std::uint32_t> dual_defining_set(std::uint32_t n, const std::vector<std::uint32_t>& defining_set);

/// Defining set of M_a(C): a^{-1} D mod n.
std::vector<std::uint32_t> multiply_defining_set(std::uint32_t n, const std::vector<std::uint32_t>& defining_set,
                                                 std::uint64_t a);

}  // namespace cycperm
