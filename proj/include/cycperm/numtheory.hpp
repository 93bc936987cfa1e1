#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cycperm {

/// Unsigned 128-bit integer used for group orders and splitting-field sizes.
using u128 = unsigned __int128;

std::string to_string(u128 value);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; throws Error("not a unit") when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// n = p^r with r >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Least t >= 1 with q^t = 1 (mod n). Requires gcd(q, n) = 1 and n >= 2.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

/// Largest z such that p^z divides q^t - 1, where t = ord_p(q).
unsigned z_parameter(std::uint64_t q, std::uint64_t p);

/// Sum p^{r-1} + ... + p + 1, the exponent of a Sylow p-subgroup of S_{p^r}.
std::uint64_t sylow_exponent_of_symmetric(std::uint64_t p, unsigned r);

/// n! as a 128-bit value (n <= 34).
u128 factorial(unsigned n);

}  // namespace cycperm
