#include "cycperm/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "cycperm/error.hpp"

namespace cycperm {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error("not a unit");
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto primes = prime_factors(n);
  if (primes.size() != 1) return std::nullopt;
  PrimePower pp{primes.front(), 0};
  while (n > 1) {
    n /= pp.prime;
    ++pp.exponent;
  }
  return pp;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
  if (n < 2) throw Error("modulus must be at least 2");
  if (std::gcd(q, n) != 1) throw Error("not coprime");
  // The order divides phi(n): strip prime factors while the power stays 1.
  std::uint64_t order = euler_phi(n);
  for (std::uint64_t p : prime_factors(order)) {
    while (order % p == 0 && powmod(q, order / p, n) == 1) order /= p;
  }
  return order;
}

unsigned z_parameter(std::uint64_t q, std::uint64_t p) {
  if (!is_prime(p)) throw Error("not a prime");
  if (q % p == 0) throw Error("p divides q");
  const std::uint64_t t = multiplicative_order(q, p);
  unsigned z = 1;
  u128 modulus = static_cast<u128>(p) * p;
  while (modulus <= UINT64_MAX && powmod(q, t, static_cast<std::uint64_t>(modulus)) == 1) {
    ++z;
    modulus *= p;
  }
  return z;
}

std::uint64_t sylow_exponent_of_symmetric(std::uint64_t p, unsigned r) {
  std::uint64_t sum = 0, term = 1;
  for (unsigned i = 0; i < r; ++i) {
    sum += term;
    term *= p;
  }
  return sum;
}

u128 factorial(unsigned n) {
  if (n > 34) throw Error("factorial overflow");
  u128 f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace cycperm
