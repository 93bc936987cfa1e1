#include "cycperm/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cycperm/error.hpp"
#include "cycperm/numtheory.hpp"

namespace cycperm {

bool palfy_multiplier_complete(std::uint64_t n) { return n == 4 || std::gcd(n, euler_phi(n)) == 1; }

bool palfy_conditional_shape(std::uint64_t n) {
  for (std::uint64_t r : prime_factors(n)) {
    const std::uint64_t p = n / r;
    if (p > r && is_prime(p) && p * r == n) return true;
  }
  return false;
}

bool hp_membership(const Permutation& sigma, const PermGroup& p_group) {
  const Permutation t = shift(sigma.degree());
  if (!p_group.contains(t)) throw Error("P must contain the shift");
  return p_group.contains(t.conjugated_by(sigma));
}

std::uint64_t QPolyMap::operator()(std::uint64_t i) const {
  std::uint64_t acc = 0;
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = (mulmod(acc, i, modulus) + coefficients[k]) % modulus;
  return acc;
}

Permutation QPolyMap::to_permutation() const {
  std::vector<Permutation::Point> images(modulus);
  for (std::uint64_t i = 0; i < modulus; ++i) images[i] = static_cast<Permutation::Point>((*this)(i));
  return Permutation(std::move(images));
}

namespace {

struct PrimePowerParts {
  std::uint64_t p;
  unsigned r;
  std::uint64_t p_r_minus_1;
};

PrimePowerParts parts(std::uint64_t n) {
  const auto pp = as_prime_power(n);
  if (!pp) throw Error("length is not a prime power");
  std::uint64_t low = 1;
  for (unsigned i = 1; i < pp->exponent; ++i) low *= pp->prime;
  return {pp->prime, pp->exponent, low};
}

}  // namespace

bool QPolyMap::in_q() const {
  const auto [p, r, low] = parts(modulus);
  if (coefficients.size() < 2 || coefficients[1] % p == 0) return false;
  for (std::size_t i = 2; i < coefficients.size(); ++i) {
    if (coefficients[i] % low != 0) return false;
  }
  return true;
}

bool QPolyMap::in_q1() const { return in_q() && coefficients[1] % parts(modulus).p_r_minus_1 == 1 % parts(modulus).p_r_minus_1; }

QGroups q_group(std::uint64_t n, unsigned m, std::uint64_t bound) {
  const auto [p, r, low] = parts(n);
  if (m >= p) throw Error("degree bound violated");
  if (m < 1) throw Error("degree must be positive");
  // Coefficient ranges: a_0 any, a_1 a unit, a_i (i >= 2) multiples of p^{r-1}.
  std::vector<std::vector<std::uint64_t>> choices(m + 1);
  for (std::uint64_t a = 0; a < n; ++a) choices[0].push_back(a);
  for (std::uint64_t a = 0; a < n; ++a) {
    if (a % p != 0) choices[1].push_back(a);
  }
  for (unsigned i = 2; i <= m; ++i) {
    for (std::uint64_t a = 0; a < n; a += low) choices[i].push_back(a);
  }
  std::unordered_set<Permutation> q_set, q1_set;
  std::vector<std::size_t> idx(m + 1, 0);
  QPolyMap f{std::vector<std::uint64_t>(m + 1), n};
  for (;;) {
    for (unsigned i = 0; i <= m; ++i) f.coefficients[i] = choices[i][idx[i]];
    Permutation perm = f.to_permutation();
    if (f.in_q1()) q1_set.insert(perm);
    q_set.insert(std::move(perm));
    if (q_set.size() > bound) throw BudgetExceeded("Q group exceeds the enumeration bound", q_set.size());
    unsigned i = 0;
    while (i <= m && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i > m) break;
  }
  return {PermGroup::from_elements(n, {q_set.begin(), q_set.end()}),
          PermGroup::from_elements(n, {q1_set.begin(), q1_set.end()})};
}

std::string to_string(HPKind kind) {
  switch (kind) {
    case HPKind::AgSet:
      return "AG_SET";
    case HPKind::QSet:
      return "Q_SET";
    case HPKind::GrFormula:
      return "GR_FORMULA";
    case HPKind::Predicate:
      return "PREDICATE";
  }
  return "PREDICATE";
}

std::vector<Permutation> affine_group_elements(std::uint64_t n) {
  std::vector<Permutation> out;
  for (std::uint64_t a = 1; a < std::max<std::uint64_t>(n, 2); ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (std::uint64_t b = 0; b < n; ++b) out.push_back(affine(n, a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> gr_formula_set(std::uint64_t n, std::uint64_t q) {
  const auto [p, r, low] = parts(n);
  if (q % p == 0) throw Error("q must be prime to p");
  const std::uint64_t t1 = p == 2 ? 1 : multiplicative_order(q, p);
  const std::uint64_t period = t1 * low;
  std::unordered_set<Permutation> set;
  std::vector<Permutation::Point> images(n);
  std::vector<bool> hit(n);
  for (std::uint64_t j = 0; j < period; ++j) {
    const std::uint64_t qj = powmod(q, j, n);
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t c = 0; c < n; ++c) {
        // tau(i) = Q_i a + c S_i with Q_{i+1} = Q_i q^j and S_{i+1} = 1 + q^j S_i.
        std::uint64_t qi = 1 % n, si = 0;
        std::fill(hit.begin(), hit.end(), false);
        bool bijective = true;
        for (std::uint64_t i = 0; i < n; ++i) {
          const std::uint64_t v = (qi * a + c * si) % n;
          if (hit[v]) {
            bijective = false;
            break;
          }
          hit[v] = true;
          images[i] = static_cast<Permutation::Point>(v);
          qi = qi * qj % n;
          si = (1 + qj * si) % n;
        }
        if (bijective) set.insert(Permutation::unchecked(images));
      }
    }
  }
  std::vector<Permutation> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> brute_hp_set(const PermGroup& p_group, std::size_t l) {
  const std::size_t n = p_group.degree();
  const Permutation tl = power_shift(n, l);
  if (!p_group.contains(tl)) throw Error("P must contain the shift power");
  return filter_symmetric(n, [&](const Permutation& s) { return p_group.contains(tl.conjugated_by(s)); });
}

std::vector<Permutation> hp_set(const HPDescriptor& d) {
  switch (d.kind) {
    case HPKind::AgSet:
      return affine_group_elements(d.n);
    case HPKind::QSet:
      return q_group(d.n, d.q_degree).q.elements();
    case HPKind::GrFormula:
      return gr_formula_set(d.n, d.q);
    case HPKind::Predicate:
      if (d.n > kMaxBruteDegree) throw Error("predicate descriptor needs n <= 10");
      return brute_hp_set(d.p_group);
  }
  return {};
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Multiplier:
      return "multiplier";
    case Strategy::HP:
      return "hp";
    case Strategy::Brute:
      return "brute";
  }
  return "brute";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "multiplier") return Strategy::Multiplier;
  if (s == "hp") return Strategy::HP;
  if (s == "brute") return Strategy::Brute;
  throw Error("unknown strategy: " + s);
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Equivalent:
      return "equivalent";
    case VerdictStatus::Inequivalent:
      return "inequivalent";
    case VerdictStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::optional<Permutation> first_witness(const LinearCode& c, const LinearCode& c2,
                                         const std::vector<Permutation>& sorted_candidates) {
  if (c.dimension() != c2.dimension()) return std::nullopt;
  for (const Permutation& s : sorted_candidates) {
    if (maps_onto(c, s, c2)) return s;
  }
  return std::nullopt;
}

std::optional<Permutation> brute_witness(const LinearCode& c, const LinearCode& c2, std::size_t max_length) {
  if (c.length() > max_length) throw Error("length exceeds the exhaustive oracle bound");
  if (c.dimension() != c2.dimension()) return std::nullopt;
  return first_in_symmetric(c.length(), [&](const Permutation& s) { return maps_onto(c, s, c2); });
}

std::optional<std::string> separating_invariant(const LinearCode& c, const LinearCode& c2,
                                                std::uint64_t distance_budget) {
  if (c.dimension() != c2.dimension()) {
    return "dimensions differ (" + std::to_string(c.dimension()) + " vs " + std::to_string(c2.dimension()) + ")";
  }
  try {
    if (weight_distribution(c, distance_budget) != weight_distribution(c2, distance_budget)) {
      return "weight distributions differ";
    }
  } catch (const BudgetExceeded&) {
  }
  return std::nullopt;
}

namespace {

void require_compatible(const CyclicCode& c, const CyclicCode& c2) {
  if (c.spec.n != c2.spec.n) throw Error("codes have different lengths");
  if (!(c.spec.field->spec() == c2.spec.field->spec())) throw Error("codes are over different fields");
}

Verdict multiplier_verdict(const CyclicCode& c, const CyclicCode& c2, const EquivalenceOptions& options) {
  Verdict v;
  v.strategy = Strategy::Multiplier;
  const std::uint32_t n = c.spec.n;
  for (std::uint32_t a = 1; a < std::max<std::uint32_t>(n, 2); ++a) {
    if (std::gcd(a, n) != 1) continue;
    ++v.candidates;
    if (multiply_defining_set(n, c.spec.defining_set, a) == c2.spec.defining_set) {
      v.status = VerdictStatus::Equivalent;
      v.witness = multiplier(n, a);
      v.complete = true;
      v.evidence = "M_" + std::to_string(a) + " maps the defining set of C onto that of C'";
      return v;
    }
  }
  if (palfy_multiplier_complete(n)) {
    v.complete = true;
    v.status = VerdictStatus::Inequivalent;
    v.evidence = "no multiplier maps C to C' and gcd(n, phi(n)) = 1 or n = 4";
    return v;
  }
  v.evidence = "no multiplier maps C to C'; multipliers are not complete for this length";
  if (palfy_conditional_shape(n)) {
    const std::uint64_t p = prime_factors(n).back();
    try {
      const FullGroup full = backtrack_full_group(c.code, options.node_budget, options.distance_budget);
      if (p_part(full.order, p) == p) {
        v.complete = true;
        v.status = VerdictStatus::Inequivalent;
        v.evidence = "no multiplier maps C to C'; n = p r and the backtracked Per(C) has Sylow " +
                     std::to_string(p) + "-subgroup of order p";
        return v;
      }
      v.evidence += "; n = p r but the Sylow " + std::to_string(p) + "-subgroup of Per(C) is larger than p";
    } catch (const BudgetExceeded&) {
      v.evidence += "; n = p r criterion inapplicable without a backtracked Sylow order";
    }
  }
  return v;
}

}  // namespace

HPPlan build_hp_plan(const CyclicCode& code, const EquivalenceOptions& options) {
  const std::uint32_t n = code.spec.n;
  const auto [p, r, low] = parts(n);
  const std::uint64_t q = code.spec.field->order();
  if (q % p == 0) throw Error("q must be prime to the length");
  HPPlan plan;
  std::ostringstream notes;

  // Known subgroup of Per(C): the full group when small, else T, multipliers and G_k.
  std::optional<PermGroup> known;
  u128 full_order = 0;
  if (n <= options.brute_max_length) {
    try {
      const FullGroup full = backtrack_full_group(code.code, options.node_budget, options.distance_budget);
      full_order = full.order;
      if (full.order <= options.enumeration_bound) {
        std::vector<Permutation> gens = full.generators;
        gens.push_back(shift(n));
        known = group_closure(n, gens, options.enumeration_bound);
        plan.known_is_full = true;
      }
    } catch (const BudgetExceeded&) {
      notes << "backtrack exhausted its budget; ";
    }
  }
  const unsigned z = z_parameter(q, p);
  std::optional<GkFamily> gr;
  if (z == 1) gr = gk_family(code, r);
  if (!known) {
    std::vector<Permutation> gens{shift(n)};
    for (std::uint32_t a : multiplier_scan(code).multiplier_set) {
      if (a != 1) gens.push_back(multiplier(n, a));
    }
    if (z == 1) {
      for (unsigned k = 1; k <= r; ++k) {
        for (const Permutation& g : gk_family(code, k).group.generators()) gens.push_back(g);
      }
    }
    known = group_closure(n, gens, options.enumeration_bound);
  }
  plan.known_order = known->elements().size();

  const PermGroup seed = group_closure(n, {shift(n)});
  const PermGroup p_group = sylow_ascend(*known, p, seed);
  const unsigned s = *p_exponent(p_group.elements().size(), p);
  const unsigned top = static_cast<unsigned>(sylow_exponent_of_symmetric(p, r));
  if (plan.known_is_full) {
    plan.sylow_certified = true;
    notes << "P is a Sylow subgroup of the backtracked Per(C) (order " << to_string(full_order) << "); ";
  } else if (s == top) {
    plan.sylow_certified = true;
    notes << "Sylow exponent reaches the symmetric-group bound; ";
  } else {
    notes << "P is Sylow only within the known subgroup of order " << plan.known_order << "; ";
  }

  HPDescriptor& d = plan.descriptor;
  d.n = n;
  d.p = p;
  d.r = r;
  d.q = q;
  d.t1 = p == 2 ? 1 : multiplicative_order(q, p);
  d.sylow_exponent = s;
  d.p_group = p_group;
  if (s == r) {
    d.kind = HPKind::AgSet;
  } else if (z == 1 && s == 2 * r - 1 && gr && gr->group.contains(p_group)) {
    d.kind = HPKind::GrFormula;
  } else if (s >= 3 && s - 1 < p) {
    try {
      const QGroups qg = q_group(n, s - 2, options.enumeration_bound);
      if (qg.q1 == p_group) {
        d.kind = HPKind::QSet;
        d.q_degree = s - 1;
        notes << "P equals Q_1^" << s - 2 << "; ";
      }
    } catch (const BudgetExceeded&) {
    }
  }
  if (d.kind == HPKind::Predicate && n > kMaxBruteDegree) {
    notes << "no closed-form descriptor and n > 10; ";
    d.complete = false;
    plan.notes = notes.str();
    return plan;
  }
  d.complete = plan.sylow_certified;
  plan.candidates = hp_set(d);
  notes << to_string(d.kind) << " with " << plan.candidates.size() << " elements";
  plan.notes = notes.str();
  return plan;
}

Verdict decide_with_plan(const HPPlan& plan, const CyclicCode& c, const CyclicCode& c2,
                         const EquivalenceOptions& options) {
  require_compatible(c, c2);
  Verdict v;
  v.strategy = Strategy::HP;
  v.descriptor = plan.descriptor;
  if (auto why = separating_invariant(c.code, c2.code, options.distance_budget)) {
    v.status = VerdictStatus::Inequivalent;
    v.complete = true;
    v.evidence = *why;
    return v;
  }
  v.candidates = plan.candidates.size();
  if (auto w = first_witness(c.code, c2.code, plan.candidates)) {
    v.status = VerdictStatus::Equivalent;
    v.witness = *w;
    v.complete = true;
    v.evidence = "witness found in H(P); " + plan.notes;
    return v;
  }
  v.complete = plan.descriptor.complete && !plan.candidates.empty();
  v.status = v.complete ? VerdictStatus::Inequivalent : VerdictStatus::Inconclusive;
  v.evidence = "no element of H(P) maps C to C'; " + plan.notes;
  return v;
}

Verdict decide_equivalence(const CyclicCode& c, const CyclicCode& c2, Strategy strategy,
                           const EquivalenceOptions& options) {
  require_compatible(c, c2);
  switch (strategy) {
    case Strategy::Multiplier: {
      if (auto why = separating_invariant(c.code, c2.code, options.distance_budget)) {
        Verdict v;
        v.strategy = Strategy::Multiplier;
        v.status = VerdictStatus::Inequivalent;
        v.complete = true;
        v.evidence = *why;
        return v;
      }
      return multiplier_verdict(c, c2, options);
    }
    case Strategy::HP:
      return decide_with_plan(build_hp_plan(c, options), c, c2, options);
    case Strategy::Brute: {
      Verdict v;
      v.strategy = Strategy::Brute;
      if (c.spec.n > options.brute_max_length) throw Error("length exceeds the exhaustive oracle bound");
      v.complete = true;
      if (auto w = brute_witness(c.code, c2.code, options.brute_max_length)) {
        v.status = VerdictStatus::Equivalent;
        v.witness = *w;
        v.evidence = "exhaustive scan of S_n";
      } else {
        v.status = VerdictStatus::Inequivalent;
        v.evidence = "exhaustive scan of S_n found no witness";
      }
      return v;
    }
  }
  return {};
}

}  // namespace cycperm
