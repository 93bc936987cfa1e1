#include "cycperm/field.hpp"

#include <sstream>

#include "cycperm/error.hpp"
#include "cycperm/numtheory.hpp"

namespace cycperm {

namespace {

// Dense polynomials over GF(p) as coefficient vectors, low to high. Only what
// the modulus search and table construction need.
using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = invmod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree d is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= d/2.
bool irreducible_over_prime(const Coeffs& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  if (f[0] == 0) return false;
  Coeffs x{0, 1};
  Coeffs h = x;
  for (std::size_t i = 1; i <= d / 2; ++i) {
    Coeffs base = h, acc{1};
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    Coeffs diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

Coeffs decode(std::uint32_t v, std::uint32_t p, std::uint32_t degree) {
  Coeffs c(degree, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

std::uint32_t encode(const Coeffs& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

}  // namespace

std::uint32_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    q *= characteristic;
    if (q > Field::kMaxOrder) throw Error("field too large");
  }
  return static_cast<std::uint32_t>(q);
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t p = spec_.characteristic;
  if (!is_prime(p)) throw Error("not a prime");
  if (spec_.degree < 1) throw Error("degree must be positive");
  order_ = spec_.order();
  if (spec_.modulus.size() != spec_.degree + 1 || spec_.modulus.back() != 1) {
    throw Error("modulus must be monic of the field degree");
  }
  for (std::uint32_t c : spec_.modulus) {
    if (c >= p) throw Error("modulus coefficient out of range");
  }
  if (!irreducible_over_prime(spec_.modulus, p)) throw Error("modulus is not irreducible");

  const std::uint32_t q = order_;
  const std::uint32_t d = spec_.degree;
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Coeffs r = poly_mulmod(decode(a, p, d), decode(b, p, d), spec_.modulus, p);
    r.resize(d, 0);
    return encode(r, p);
  };

  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Coeffs c = decode(a, p, d);
    for (auto& x : c) x = (p - x) % p;
    neg_[a] = encode(c, p);
  }
  if (d > 1 && p != 2 && q <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        add_table_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(add_digitwise(a, b));
      }
    }
  }

  // Least element (in encoding order) of multiplicative order q - 1.
  const auto group_primes = prime_factors(q - 1);
  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < q && generator == 0; ++g) {
    bool primitive = true;
    for (std::uint64_t r : group_primes) {
      std::uint32_t acc = 1, base = g;
      for (std::uint64_t e = (q - 1) / r; e > 0; e >>= 1) {
        if (e & 1) acc = slow_mul(acc, base);
        base = slow_mul(base, base);
      }
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = g;
  }
  if (q == 2) generator = 1;

  exp_.resize(2 * static_cast<std::size_t>(q));
  log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator);
  }
  for (std::size_t i = q - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q - 1)];
}

Field::Element Field::add_digitwise(Element a, Element b) const noexcept {
  const std::uint32_t p = spec_.characteristic;
  Element result = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.degree; ++i) {
    result += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return result;
}

Field::Element Field::inv(Element a) const {
  if (a == 0) throw Error("division by zero");
  return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

Field::Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (order_ - 1)) % (order_ - 1)];
}

Field::Element Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = spec_.characteristic;
  return static_cast<Element>(((v % p) + p) % p);
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "GF(" << order_ << ")";
  return os.str();
}

FieldPtr make_field(const FieldSpec& spec) { return std::make_shared<const Field>(spec); }

FieldPtr make_field(std::uint32_t characteristic, std::uint32_t degree) {
  if (!is_prime(characteristic)) throw Error("not a prime");
  if (degree < 1) throw Error("degree must be positive");
  FieldSpec spec{characteristic, degree, {}};
  spec.order();  // throws when the field exceeds the table bound
  if (degree == 1) {
    spec.modulus = {0, 1};
    return make_field(spec);
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= characteristic;
  for (std::uint64_t v = 0; v < count; ++v) {
    Coeffs f = decode(static_cast<std::uint32_t>(v), characteristic, degree);
    f.push_back(1);
    if (irreducible_over_prime(f, characteristic)) {
      spec.modulus = std::move(f);
      return make_field(spec);
    }
  }
  throw Error("no irreducible polynomial found");
}

FieldPtr make_field_of_order(std::uint32_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw Error("field order must be a prime power");
  return make_field(static_cast<std::uint32_t>(pp->prime), pp->exponent);
}

}  // namespace cycperm
