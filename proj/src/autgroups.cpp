#include "cycperm/autgroups.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "cycperm/error.hpp"
#include "cycperm/numtheory.hpp"

namespace cycperm {

MultiplierScan multiplier_scan(const CyclicCode& code, std::uint64_t seed) {
  const std::uint32_t n = code.spec.n;
  const auto& d = code.spec.defining_set;
  MultiplierScan out;
  for (std::uint32_t a = 1; a < std::max<std::uint32_t>(n, 2); ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::vector<std::uint32_t> image;
    image.reserve(d.size());
    for (std::uint32_t j : d) image.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * j % n));
    std::sort(image.begin(), image.end());
    if (image == d) out.multiplier_set.push_back(a);
  }
  out.m = out.multiplier_set.size();
  std::vector<std::uint32_t> sample = out.multiplier_set;
  std::mt19937_64 rng(seed);
  std::shuffle(sample.begin(), sample.end(), rng);
  sample.resize(std::min<std::size_t>(3, sample.size()));
  std::sort(sample.begin(), sample.end());
  for (std::uint32_t a : sample) {
    if (!is_automorphism(code.code, multiplier(n, a))) {
      throw Error("multiplier scan disagrees with the matrix test at a = " + std::to_string(a));
    }
    out.audited.push_back(a);
  }
  return out;
}

bool check_m_p_plus_1(const CyclicCode& code) {
  const auto pp = as_prime_power(code.spec.n);
  if (!pp) throw Error("length is not a prime power");
  return is_automorphism(code.code, multiplier(code.spec.n, pp->prime + 1));
}

GkFamily gk_family(const CyclicCode& code, unsigned k) {
  const std::uint32_t n = code.spec.n;
  const auto pp = as_prime_power(n);
  if (!pp) throw Error("length is not a prime power");
  if (k < 1 || k > pp->exponent) throw Error("k out of range");
  const std::uint64_t q = code.spec.field->order();
  if (z_parameter(q, pp->prime) != 1) throw Error("hypothesis z=1 violated");
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= pp->prime;
  GkFamily out;
  out.k = k;
  out.t_k = pk == 1 ? 1 : multiplicative_order(q, pk);

  std::vector<Permutation> elements;
  std::uint64_t qi = 1;
  for (std::uint64_t i = 0; i < out.t_k; ++i, qi = qi * (q % pk) % pk) {
    for (std::uint64_t c = 0; c < pk; ++c) {
      Permutation mu = generalized_multiplier(n, k, qi, c);
      if (!is_automorphism(code.code, mu)) {
        throw Error("G_k element " + mu.to_string() + " does not fix the code");
      }
      elements.push_back(std::move(mu));
    }
    out.h_k.push_back(generalized_multiplier(n, k, qi, 0));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  out.group = PermGroup::from_elements(n, std::move(elements));

  const Idempotent e = idempotent(code.spec);
  const Vector ev = e.polynomial.cyclic_vector(n);
  for (const Permutation& h : out.h_k) {
    if (permute_word(ev, h) != ev) out.idempotent_fixed = false;
  }
  return out;
}

std::string to_string(GroupLabel label) {
  switch (label) {
    case GroupLabel::ElementarySn:
      return "ELEMENTARY_SN";
    case GroupLabel::AffineSubgroup:
      return "AFFINE_SUBGROUP";
    case GroupLabel::Psl2_11:
      return "PSL_2_11";
    case GroupLabel::M11:
      return "M_11";
    case GroupLabel::M23:
      return "M_23";
    case GroupLabel::PGammaL:
      return "PGAMMAL";
    case GroupLabel::Imprimitive:
      return "IMPRIMITIVE";
    case GroupLabel::Unresolved:
      return "UNRESOLVED";
  }
  return "UNRESOLVED";
}

std::vector<ProjectiveShape> projective_shapes(std::uint64_t n) {
  std::vector<ProjectiveShape> out;
  for (std::uint64_t t = 2; t * t + t + 1 <= n; ++t) {
    if (!as_prime_power(t)) continue;
    std::uint64_t sum = 1 + t + t * t;
    std::uint64_t power = t * t;
    for (unsigned d = 3; sum <= n; ++d) {
      if (sum == n) out.push_back({d, t});
      power *= t;
      sum += power;
    }
  }
  return out;
}

u128 pgl_order(unsigned d, std::uint64_t t) {
  // t^{d(d-1)/2} * prod_{i=2}^{d} (t^i - 1)
  u128 order = 1;
  for (unsigned i = 0; i < d * (d - 1) / 2; ++i) order *= t;
  u128 ti = t;
  for (unsigned i = 2; i <= d; ++i) {
    ti *= t;
    order *= ti - 1;
  }
  return order;
}

u128 psl_order(unsigned d, std::uint64_t t) { return pgl_order(d, t) / std::gcd<std::uint64_t>(d, t - 1); }

u128 pgammal_order(unsigned d, std::uint64_t t) { return pgl_order(d, t) * as_prime_power(t)->exponent; }

namespace {

std::string order_text(u128 v) { return to_string(v); }

// The residue-class systems mod p^i that are blocks of the group.
std::vector<BlockSystem> shift_orbit_blocks(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<BlockSystem> out;
  for (std::size_t b = 2; b < n; ++b) {
    if (n % b != 0) continue;
    BlockSystem s = residue_blocks(n, b);
    if (is_block_system(gens, s)) out.push_back(std::move(s));
  }
  return out;
}

GroupClass classify_prime(const LinearCode& code, const AutoReport& r) {
  const std::uint64_t p = code.length();
  GroupClass c;
  const auto shapes = projective_shapes(p);
  if (r.full_group_order) {
    const u128 order = *r.full_group_order;
    if (p == 11 && order == 660) {
      c.label = GroupLabel::Psl2_11;
      c.evidence = "backtracked order 660 = |PSL(2,11)| on 11 points";
      return c;
    }
    if (p == 11 && order == 7920) {
      c.label = GroupLabel::M11;
      c.evidence = "backtracked order 7920 = |M_11|";
      return c;
    }
    if (p == 23 && order == 10200960) {
      c.label = GroupLabel::M23;
      c.evidence = "backtracked order 10200960 = |M_23|";
      return c;
    }
    if (p <= 34 && order == factorial(static_cast<unsigned>(p)) / 2) {
      c.label = GroupLabel::Unresolved;
      c.evidence = "order equals |Alt(n)|, which no cyclic code attains; treated as an error";
      return c;
    }
    for (const auto& s : shapes) {
      if (order % psl_order(s.d, s.t) == 0 && pgammal_order(s.d, s.t) % order == 0) {
        c.label = GroupLabel::PGammaL;
        c.d = s.d;
        c.t = s.t;
        c.evidence = "n = (t^d-1)/(t-1) and the order " + order_text(order) +
                     " lies between |PSL(d,t)| and |PGammaL(d,t)|";
        return c;
      }
    }
    if (order % p == 0 && (p - 1) % static_cast<std::uint64_t>(order / p) == 0) {
      c.label = GroupLabel::AffineSubgroup;
      c.p = p;
      c.m = static_cast<std::uint64_t>(order / p);
      c.evidence = "order p*m with m | p-1: Per(C) = C_m x| C_p inside AGL(1,p)";
      return c;
    }
    c.evidence = "backtracked order " + order_text(order) + " matches no case for prime length";
    return c;
  }
  // Without the full group, a prime length outside the projective and
  // Mathieu degrees leaves only the affine case for a non-elementary code.
  if (shapes.empty() && p != 11 && p != 23 && p >= 5) {
    c.label = GroupLabel::AffineSubgroup;
    c.p = p;
    c.m = r.m;
    c.theory_backed = true;
    c.evidence = "prime length with no projective or Mathieu action: Per(C) = C_m x| C_p with m from the "
                 "multiplier scan; full group not computed";
    return c;
  }
  c.evidence = "full group unknown; several doubly transitive cases remain possible";
  return c;
}

GroupClass classify_composite(const LinearCode& code, const AutoReport& r) {
  const std::size_t n = code.length();
  GroupClass c;
  const auto shapes = projective_shapes(n);
  if (!r.full_generators.empty() || r.full_group_order) {
    const auto& gens = r.full_generators;
    if (!r.full_group_primitive) {
      c.label = GroupLabel::Imprimitive;
      c.blocks = r.block_systems;
      const auto residue = shift_orbit_blocks(n, gens);
      std::ostringstream os;
      os << "backtracked group has " << c.blocks.size() << " minimal block system(s)";
      if (!residue.empty()) {
        os << "; residue classes mod";
        for (const auto& b : residue) os << " " << b.block_count();
        os << " form block systems";
      }
      c.evidence = os.str();
      return c;
    }
    const u128 order = r.full_group_order.value_or(0);
    for (const auto& s : shapes) {
      if (order != 0 && order % psl_order(s.d, s.t) == 0 && pgammal_order(s.d, s.t) % order == 0) {
        c.label = GroupLabel::PGammaL;
        c.d = s.d;
        c.t = s.t;
        c.evidence = "primitive group of order " + order_text(order) + " with n = (t^d-1)/(t-1)";
        return c;
      }
    }
    c.evidence = "primitive backtracked group matches no projective case";
    return c;
  }
  if (shapes.empty()) {
    c.label = GroupLabel::Imprimitive;
    c.theory_backed = true;
    c.evidence = "n has no projective form, so a non-elementary cyclic code has an imprimitive group; "
                 "block data not computed";
    return c;
  }
  c.evidence = "full group unknown and n = (t^d-1)/(t-1) admits a projective action";
  return c;
}

}  // namespace

GroupClass classify(const LinearCode& code, const AutoReport& report) {
  if (report.is_elementary || is_elementary(code)) {
    GroupClass c;
    c.label = GroupLabel::ElementarySn;
    c.evidence = "elementary code: Per(C) = S_n";
    return c;
  }
  if (is_prime(code.length())) return classify_prime(code, report);
  return classify_composite(code, report);
}

bool sylow_exponent_bounds(std::uint64_t n, std::uint64_t q, unsigned s) {
  const auto pp = as_prime_power(n);
  if (!pp) throw Error("length is not a prime power");
  const unsigned r = pp->exponent;
  if (s < r || s > sylow_exponent_of_symmetric(pp->prime, r)) return false;
  if (q % pp->prime != 0 && z_parameter(q, pp->prime) == 1 && s < 2 * r - 1) return false;
  return true;
}

std::optional<ProjectiveWitness> projective_witness(const CyclicCode& code, std::uint64_t enumeration_bound) {
  const std::uint32_t n = code.spec.n;
  if (code.spec.field->order() != 2) return std::nullopt;
  unsigned d = 0;
  while ((std::uint64_t{1} << d) - 1 < n) ++d;
  if ((std::uint64_t{1} << d) - 1 != n || d < 3) return std::nullopt;

  const CyclotomicContext ctx(code.spec.field, n);
  const SplittingField& ext = ctx.splitting_field();
  auto key = [](const SplittingField::Element& v) {
    std::uint32_t k = 0;
    for (std::size_t b = 0; b < v.size(); ++b) k |= v[b] << b;
    return k;
  };
  std::vector<std::uint32_t> vec(n);
  std::vector<std::uint32_t> exponent(std::size_t{1} << d, 0);
  SplittingField::Element x = ext.one();
  for (std::uint32_t i = 0; i < n; ++i) {
    vec[i] = key(x);
    exponent[vec[i]] = i;
    x = ext.mul(x, ctx.root());
  }
  ProjectiveWitness w;
  w.d = d;
  // Transvection v -> v + v_j e_i.
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      if (i == j) continue;
      std::vector<Permutation::Point> images(n);
      for (std::uint32_t c = 0; c < n; ++c) {
        const std::uint32_t v = vec[c] ^ (((vec[c] >> j) & 1u) << i);
        images[c] = static_cast<Permutation::Point>(exponent[v]);
      }
      w.generators.emplace_back(std::move(images));
    }
  }
  w.fixes_code = std::all_of(w.generators.begin(), w.generators.end(),
                             [&](const Permutation& g) { return is_automorphism(code.code, g); });
  try {
    w.order = group_closure(n, w.generators, enumeration_bound).elements().size();
    w.order_enumerated = true;
  } catch (const BudgetExceeded&) {
    w.order = pgl_order(d, 2);
  }
  return w;
}

AutoReport analyze(const CyclicCode& code, const AnalyzeOptions& options) {
  const std::uint32_t n = code.spec.n;
  AutoReport r;
  r.n = n;
  r.k = code.code.dimension();
  r.distance = min_distance(code.code, options.distance_budget);
  r.is_elementary = is_elementary(code.code);

  const MultiplierScan scan = multiplier_scan(code, options.seed);
  r.multiplier_set = scan.multiplier_set;
  r.m = scan.m;

  std::vector<Permutation> discovered{shift(n)};
  for (std::uint32_t a : scan.multiplier_set) {
    if (a != 1) discovered.push_back(multiplier(n, a));
  }
  const std::uint64_t q = code.spec.field->order();
  const auto pp = as_prime_power(n);
  if (pp && q % pp->prime != 0) {
    r.z = z_parameter(q, pp->prime);
    if (*r.z == 1) {
      for (unsigned k = 1; k <= pp->exponent; ++k) {
        const GkFamily g = gk_family(code, k);
        r.gk_orders.emplace_back(k, g.group.elements().size());
        for (const Permutation& x : g.group.generators()) discovered.push_back(x);
      }
    }
  }
  r.projective = projective_witness(code, options.enumeration_bound);
  if (r.projective && r.projective->fixes_code) {
    for (const Permutation& g : r.projective->generators) discovered.push_back(g);
  }
  r.discovered_generators = discovered;
  std::optional<PermGroup> known;
  try {
    known = group_closure(n, discovered, options.enumeration_bound);
    r.known_subgroup_order = known->elements().size();
  } catch (const BudgetExceeded&) {
  }

  if (n <= options.backtrack_max_length) {
    try {
      const FullGroup full = backtrack_full_group(code.code, options.node_budget, options.distance_budget);
      r.full_group_order = full.order;
      r.full_generators = full.generators;
      r.backtrack_nodes = full.nodes;
      for (const Permutation& g : full.generators) {
        if (!is_automorphism(code.code, g)) throw Error("backtrack returned a non-automorphism");
      }
    } catch (const BudgetExceeded&) {
      r.backtrack_budget_exhausted = true;
      r.backtrack_nodes = options.node_budget;
    }
  }
  const std::vector<Permutation>& group_gens = r.full_group_order ? r.full_generators : r.discovered_generators;
  if (r.full_group_order) {
    r.block_systems = minimal_blocks(n, group_gens.empty() ? std::vector<Permutation>{shift(n)} : group_gens);
    r.full_group_primitive = r.block_systems.empty();
  }
  if (pp && pp->exponent > 1 && q % pp->prime != 0) {
    const std::optional<u128> ord = r.full_group_order ? r.full_group_order : r.known_subgroup_order;
    if (ord) {
      if (auto s = p_exponent(p_part(*ord, pp->prime), pp->prime)) {
        r.sylow_bounds_hold = sylow_exponent_bounds(n, q, *s);
      }
    }
  }
  r.classification = classify(code.code, r);
  return r;
}

}  // namespace cycperm
