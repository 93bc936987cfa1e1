#include "cycperm/cyclic_code.hpp"

#include <algorithm>

#include "cycperm/error.hpp"
#include "cycperm/numtheory.hpp"

namespace cycperm {

namespace {

std::vector<std::uint32_t> normalize(std::vector<std::uint32_t> set, std::uint32_t n) {
  for (std::uint32_t j : set) {
    if (j >= n) throw Error("defining set entry out of range");
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace

CyclicCodeSpec cyclic_code_spec(const CyclotomicContext& ctx, std::vector<std::uint32_t> defining_set) {
  const std::uint32_t n = ctx.length();
  defining_set = normalize(std::move(defining_set), n);
  const std::uint64_t q = ctx.field()->order() % n;
  std::vector<bool> in_set(n, false);
  for (std::uint32_t j : defining_set) in_set[j] = true;
  for (std::uint32_t j : defining_set) {
    if (!in_set[j * q % n]) throw Error("not Frobenius-closed");
  }
  CyclicCodeSpec spec{ctx.field(), n, defining_set, ctx.product_over(defining_set)};
  return spec;
}

LinearCode to_linear_code(const CyclicCodeSpec& spec) {
  const std::size_t n = spec.n, k = spec.dimension();
  Matrix m(k, n);
  const auto& g = spec.generator_poly.coefficients();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m(i, (i + j) % n) = g[j];
  }
  return LinearCode(spec.field, n, std::move(m));
}

CyclicCode cyclic_code(const CyclotomicContext& ctx, std::vector<std::uint32_t> defining_set) {
  CyclicCodeSpec spec = cyclic_code_spec(ctx, std::move(defining_set));
  LinearCode code = to_linear_code(spec);
  return {std::move(spec), std::move(code)};
}

CyclicCode cyclic_code(const FieldPtr& field, std::uint32_t n, std::vector<std::uint32_t> defining_set) {
  return cyclic_code(CyclotomicContext(field, n), std::move(defining_set));
}

std::vector<CyclicCodeSpec> enumerate_cyclic_codes(const CyclotomicContext& ctx) {
  const auto& cosets = ctx.cosets();
  if (cosets.size() > 20) throw Error("too many cosets: " + std::to_string(cosets.size()));
  std::vector<CyclicCodeSpec> out;
  const std::uint64_t total = std::uint64_t{1} << cosets.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::uint32_t> d;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (mask >> i & 1) d.insert(d.end(), cosets[i].begin(), cosets[i].end());
    }
    out.push_back(cyclic_code_spec(ctx, std::move(d)));
  }
  return out;
}

std::vector<CyclicCodeSpec> enumerate_cyclic_codes(const FieldPtr& field, std::uint32_t n) {
  return enumerate_cyclic_codes(CyclotomicContext(field, n));
}

u128 count_cyclic_codes(std::uint32_t n, std::uint64_t q) {
  const std::size_t c = cyclotomic_cosets(n, q).size();
  if (c >= 127) throw Error("too many cosets: " + std::to_string(c));
  return static_cast<u128>(1) << c;
}

Idempotent idempotent(const CyclicCodeSpec& spec) {
  const FieldPtr& f = spec.field;
  const Polynomial xn = Polynomial::x_n_minus_one(f, spec.n);
  if (spec.dimension() == 0) return {Polynomial(f), true};
  const Polynomial& g = spec.generator_poly;
  const Polynomial h = poly_divmod(xn, g).quotient;
  const ExtendedGcd eg = poly_ext_gcd(g, h);
  if (eg.gcd.degree() != 0) throw Error("generator and check polynomials are not coprime");
  return {poly_divmod(eg.s * g, xn).remainder, false};
}

std::vector<std::uint32_t> dual_defining_set(std::uint32_t n, const std::vector<std::uint32_t>& defining_set) {
  std::vector<bool> neg(n, false);
  for (std::uint32_t j : defining_set) neg[(n - j % n) % n] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (!neg[j]) out.push_back(j);
  }
  return out;
}

std::vector<std::uint32_t> multiply_defining_set(std::uint32_t n, const std::vector<std::uint32_t>& defining_set,
                                                 std::uint64_t a) {
  const std::uint64_t inv = invmod(a % n, n);
  std::vector<std::uint32_t> out;
  out.reserve(defining_set.size());
  for (std::uint32_t j : defining_set) out.push_back(static_cast<std::uint32_t>(inv * j % n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cycperm
