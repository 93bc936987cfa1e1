#include "cycperm/quasicyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cycperm/autgroups.hpp"
#include "cycperm/error.hpp"
#include "cycperm/numtheory.hpp"

namespace cycperm {

namespace {

struct Hypothesis {
  std::uint64_t p;
  unsigned r;
};

Hypothesis check_hypothesis(const QuasiCyclicCode& c) {
  const auto pp = as_prime_power(c.m);
  if (!pp) throw Error("hypothesis violated: co-index " + std::to_string(c.m) + " is not a prime power");
  if (c.l % pp->prime == 0) throw Error("hypothesis violated: gcd(p, l) != 1");
  if (c.code.field()->characteristic() == pp->prime) throw Error("hypothesis violated: gcd(p, q) != 1");
  return {pp->prime, pp->exponent};
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Elements of <sigma_0, ..., sigma_{l-1}>: products sigma_0^{e_0} ... sigma_{l-1}^{e_{l-1}}.
std::vector<Permutation> sigma_products(std::size_t n, std::size_t l, std::uint64_t bound) {
  const std::size_t m = n / l;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < l; ++i) {
    count *= m;
    if (count > bound) throw BudgetExceeded("sigma products exceed the enumeration bound", bound);
  }
  std::vector<Permutation> out;
  out.reserve(count);
  std::vector<std::size_t> e(l, 0);
  std::vector<Permutation::Point> images(n);
  for (;;) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t i = j % l;
      images[j] = static_cast<Permutation::Point>((j + e[i] * l) % n);
    }
    out.push_back(Permutation::unchecked(images));
    std::size_t i = 0;
    while (i < l && ++e[i] == m) e[i++] = 0;
    if (i == l) break;
  }
  return out;
}

std::vector<Permutation> structured_family(const QuasiCyclicCode& c, const PermGroup& p_group,
                                           const EquivalenceOptions& options, bool& exhaustive,
                                           std::vector<std::string>& families) {
  std::set<Permutation> found;
  exhaustive = false;
  if (c.n <= options.brute_max_length) {
    for (const Permutation& s : brute_hp_set(p_group, c.l)) found.insert(s);
    families.push_back("brute H'(P)");
    exhaustive = true;
  } else {
    for (const Permutation& s : affine_group_elements(c.n)) found.insert(s);
    families.push_back("AG(n)");
    try {
      std::vector<Permutation> gens = sigma_cycles(c.n, c.l);
      gens.push_back(shift(c.n));
      const PermGroup q = group_closure(c.n, gens, options.enumeration_bound);
      for (const Permutation& s : q.elements()) found.insert(s);
      families.push_back("<sigma_i, T>");
    } catch (const BudgetExceeded&) {
    }
  }
  std::vector<Permutation> out(found.begin(), found.end());
  for (const Permutation& s : out) {
    if (!hprime_membership(s, p_group, c.l)) throw Error("element outside H'(P): " + s.to_string());
  }
  return out;
}

}  // namespace

QuasiCyclicCode quasi_cyclic_code(LinearCode code, std::size_t l) {
  const std::size_t n = code.length();
  if (l == 0 || n % l != 0) throw Error("index does not divide the length");
  if (!is_automorphism(code, power_shift(n, l))) throw Error("code is not invariant under T^l");
  return {n, l, n / l, std::move(code)};
}

QuasiCyclicCode qc_from_generators(const FieldPtr& field, std::size_t n, std::size_t l,
                                   const std::vector<Vector>& words) {
  if (l == 0 || n % l != 0) throw Error("index does not divide the length");
  std::vector<Vector> rows;
  const Permutation tl = power_shift(n, l);
  for (Vector w : words) {
    if (w.size() != n) throw Error("word length differs from n");
    for (std::size_t j = 0; j < n / l; ++j) {
      rows.push_back(w);
      w = permute_word(w, tl);
    }
  }
  return quasi_cyclic_code(LinearCode::from_rows(field, n, rows), l);
}

std::size_t minimal_index(const LinearCode& code) {
  const std::size_t n = code.length();
  for (std::size_t d : divisors(n)) {
    if (is_automorphism(code, power_shift(n, d))) return d;
  }
  return n;
}

std::vector<Permutation> sigma_cycles(std::size_t n, std::size_t l) {
  if (l == 0 || n % l != 0) throw Error("index does not divide the length");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Permutation::Point> images(n);
    std::iota(images.begin(), images.end(), Permutation::Point{0});
    for (std::size_t j = i; j < n; j += l) images[j] = static_cast<Permutation::Point>((j + l) % n);
    out.push_back(Permutation::unchecked(std::move(images)));
  }
  return out;
}

NormalizerWitnesses normalizer_witnesses(std::size_t n, std::size_t l) {
  if (l == 0 || n % l != 0) throw Error("index does not divide the length");
  const std::size_t m = n / l;
  if (std::gcd(m, l) != 1) throw Error("gcd(m, l) != 1");
  const Permutation tl = power_shift(n, l);
  const PermGroup cyclic = group_closure(n, {tl});
  NormalizerWitnesses w;
  std::vector<Permutation> gens = sigma_cycles(n, l);
  gens.push_back(shift(n));
  w.q = group_closure(n, gens);
  for (const Permutation& g : w.q.elements()) {
    if (!cyclic.contains(g * tl * g.inverse())) throw Error("element does not normalize <T^l>: " + g.to_string());
    ++w.checked;
  }
  for (std::uint64_t a = 1; a < std::max<std::uint64_t>(n, 2); ++a) {
    if (std::gcd<std::uint64_t>(a, n) != 1) continue;
    const Permutation expected = power_shift(n, (l * a) % n);
    for (std::uint64_t b = 0; b < n; ++b) {
      const Permutation t = affine(n, a, b);
      if (t * tl * t.inverse() != expected) throw Error("affine conjugation differs from T^{la}: " + t.to_string());
      w.affine.push_back(t);
      ++w.checked;
    }
  }
  return w;
}

bool hprime_membership(const Permutation& sigma, const PermGroup& p_group, std::size_t l) {
  const Permutation tl = power_shift(sigma.degree(), l);
  if (!p_group.contains(tl)) throw Error("P must contain T^l");
  return p_group.contains(tl.conjugated_by(sigma));
}

QcSylow qc_sylow(const QuasiCyclicCode& c, const EquivalenceOptions& options) {
  const auto [p, r] = check_hypothesis(c);
  const std::size_t n = c.n;
  const Permutation tl = power_shift(n, c.l);
  QcSylow out;
  out.p = p;
  out.r = r;
  std::optional<PermGroup> known;
  if (n <= options.brute_max_length) {
    try {
      const FullGroup full = backtrack_full_group(c.code, options.node_budget, options.distance_budget);
      if (full.order <= options.enumeration_bound) {
        std::vector<Permutation> gens = full.generators;
        gens.push_back(tl);
        known = group_closure(n, gens, options.enumeration_bound);
        out.certified = true;
        out.source = "backtracked Per(C)";
      }
    } catch (const BudgetExceeded&) {
    }
  }
  if (!known) {
    std::vector<Permutation> gens{tl};
    try {
      for (const Permutation& s : sigma_products(n, c.l, options.enumeration_bound)) {
        if (!s.is_identity() && is_automorphism(c.code, s)) gens.push_back(s);
      }
    } catch (const BudgetExceeded&) {
      for (const Permutation& s : sigma_cycles(n, c.l)) {
        if (is_automorphism(c.code, s)) gens.push_back(s);
      }
    }
    for (const Permutation& t : affine_group_elements(n)) {
      if (!t.is_identity() && is_automorphism(c.code, t)) gens.push_back(t);
    }
    known = group_closure(n, gens, options.enumeration_bound);
    out.source = "sigma products and affine maps fixing C";
  }
  out.known_order = known->elements().size();
  out.p_group = sylow_ascend(*known, p, group_closure(n, {tl}));
  return out;
}

Verdict qc_equivalence_search(const QuasiCyclicCode& c, const QuasiCyclicCode& c2, Strategy strategy,
                              const EquivalenceOptions& options) {
  if (c.n != c2.n || c.l != c2.l) throw Error("codes have different length or index");
  if (!(c.code.field()->spec() == c2.code.field()->spec())) throw Error("codes are over different fields");
  check_hypothesis(c);
  Verdict v;
  v.strategy = strategy;
  if (auto why = separating_invariant(c.code, c2.code, options.distance_budget)) {
    v.status = VerdictStatus::Inequivalent;
    v.complete = true;
    v.evidence = *why;
    return v;
  }
  std::vector<Permutation> candidates;
  std::string family;
  bool complete = false;
  switch (strategy) {
    case Strategy::Brute: {
      if (auto w = brute_witness(c.code, c2.code, options.brute_max_length)) {
        v.status = VerdictStatus::Equivalent;
        v.witness = *w;
        v.evidence = "exhaustive scan of S_n";
      } else {
        v.status = VerdictStatus::Inequivalent;
        v.evidence = "exhaustive scan of S_n found no witness";
      }
      v.complete = true;
      return v;
    }
    case Strategy::Multiplier:
      candidates = affine_group_elements(c.n);
      family = "AG(n)";
      break;
    case Strategy::HP: {
      const QcSylow sylow = qc_sylow(c, options);
      bool exhaustive = false;
      std::vector<std::string> families;
      candidates = structured_family(c, sylow.p_group, options, exhaustive, families);
      complete = exhaustive && sylow.certified;
      for (const std::string& f : families) family += (family.empty() ? "" : ", ") + f;
      break;
    }
  }
  v.candidates = candidates.size();
  if (auto w = first_witness(c.code, c2.code, candidates)) {
    if (!(permute_code(c.code, *w) == c2.code)) throw Error("witness audit failed");
    v.status = VerdictStatus::Equivalent;
    v.witness = *w;
    v.complete = true;
    v.evidence = "witness found in " + family;
    return v;
  }
  v.complete = complete;
  v.status = complete ? VerdictStatus::Inequivalent : VerdictStatus::Inconclusive;
  v.evidence = "no element of " + family + " maps C to C'";
  return v;
}

HPrimeReport imprimitivity_report(const QuasiCyclicCode& c, const EquivalenceOptions& options) {
  const QcSylow sylow = qc_sylow(c, options);
  HPrimeReport rep;
  rep.n = c.n;
  rep.l = c.l;
  rep.m = c.m;
  rep.minimal_index = minimal_index(c.code);
  rep.p = sylow.p;
  rep.r = sylow.r;
  rep.p_order = sylow.p_group.elements().size();
  rep.p_generators = sylow.p_group.generators();
  rep.p_certified = sylow.certified;
  rep.p_source = sylow.source;

  const std::vector<Permutation> found = structured_family(c, sylow.p_group, options, rep.exhaustive, rep.families);
  rep.elements_found = found.size();

  // Greedy generating set for the closure of the found elements.
  const std::size_t n = c.n;
  std::vector<Permutation> gens{shift(n)};
  std::optional<PermGroup> closure;
  try {
    closure = group_closure(n, gens, options.enumeration_bound);
    for (const Permutation& s : found) {
      if (closure->contains(s)) continue;
      gens.push_back(s);
      closure = group_closure(n, gens, options.enumeration_bound);
    }
  } catch (const BudgetExceeded& e) {
    rep.closure_lower_bound = e.partial_bound();
    closure.reset();
    gens = found;
    gens.push_back(shift(n));
  }
  rep.closure_generators = gens;
  if (closure) {
    rep.closure_order = closure->elements().size();
    rep.closure_lower_bound = *rep.closure_order;
    rep.closure_defect = static_cast<double>(*rep.closure_order) / static_cast<double>(found.size());
  }

  rep.block_systems = minimal_blocks(n, gens);
  rep.primitive = rep.block_systems.empty();
  for (std::size_t b : divisors(n)) {
    if (b > 1 && b < n && is_block_system(gens, residue_blocks(n, b))) rep.residue_moduli.push_back(b);
  }

  for (const Permutation& s : sigma_cycles(n, c.l)) rep.sigma_membership.push_back(hprime_membership(s, sylow.p_group, c.l));
  rep.williamson_cycle = c.m;
  const std::size_t rest = n - c.m;
  rep.williamson_holds = rest > 34 || static_cast<u128>(c.m) < factorial(static_cast<unsigned>(rest));
  rep.shift_is_odd = shift(n).is_odd();

  const bool sigma_in = std::all_of(rep.sigma_membership.begin(), rep.sigma_membership.end(), [](bool b) { return b; });
  if (!rep.primitive) {
    rep.conclusion = "imprimitive";
  } else if (rep.williamson_holds && sigma_in && c.l > 1) {
    const bool odd = std::any_of(gens.begin(), gens.end(), [](const Permutation& g) { return g.is_odd(); });
    rep.conclusion = odd ? "S_n" : "Alt(n)";
  } else {
    rep.conclusion = "primitive";
  }
  return rep;
}

}  // namespace cycperm
