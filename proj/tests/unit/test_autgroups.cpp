#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cycperm/autgroups.hpp"
#include "cycperm/error.hpp"
#include "cycperm/field.hpp"
#include "helpers.hpp"

using namespace cycperm;

TEST_CASE("multiplier scan") {
  auto f2 = make_field_of_order(2);
  auto ham = cyclic_code(f2, 7, {1, 2, 4});
  auto s = multiplier_scan(ham);
  CHECK(s.multiplier_set == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(s.m == 3);
  CHECK_FALSE(s.audited.empty());

  auto full = cyclic_code(f2, 9, {});
  CHECK(multiplier_scan(full).m == 6);

  bool found = false;
  for (const auto& c : testing::all_codes(11, 5)) {
    if (c.code.dimension() == 3 && multiplier_scan(c).m == 2) found = true;
  }
  CHECK(found);
}

TEST_CASE("multiplier sets agree with the matrix test and with the dual") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{11, 5}, {11, 7}, {13, 7}, {13, 17}, {2, 15}}) {
    auto f = make_field_of_order(q);
    for (const auto& c : testing::all_codes(q, n)) {
      auto s = multiplier_scan(c);
      for (std::uint32_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        const bool in_set = std::binary_search(s.multiplier_set.begin(), s.multiplier_set.end(), a);
        CHECK(in_set == is_automorphism(c.code, multiplier(n, a)));
      }
      auto d = cyclic_code(f, n, dual_defining_set(n, c.spec.defining_set));
      CHECK(multiplier_scan(d).multiplier_set == s.multiplier_set);
    }
  }
}

TEST_CASE("M_{p+1} fixes every code of prime-power length") {
  for (const auto& c : testing::all_codes(2, 49)) CHECK(check_m_p_plus_1(c));
  for (const auto& c : testing::all_codes(2, 9)) CHECK(check_m_p_plus_1(c));
  for (const auto& c : testing::all_codes(2, 7)) CHECK(check_m_p_plus_1(c));
  CHECK_THROWS_AS(check_m_p_plus_1(testing::all_codes(2, 15).front()), Error);
}

TEST_CASE("G_k families") {
  auto codes = testing::all_codes(2, 9);
  auto g2 = gk_family(codes[3], 2);
  CHECK(g2.group.elements().size() == 54);
  CHECK(g2.t_k == 6);
  CHECK(gk_family(codes[3], 1).group.elements().size() == 6);
  CHECK(std::find(g2.h_k.begin(), g2.h_k.end(), multiplier(9, 2)) != g2.h_k.end());
  for (const auto& c : codes) {
    for (unsigned k = 1; k <= 2; ++k) CHECK(gk_family(c, k).idempotent_fixed);
  }
  CHECK_THROWS_WITH_AS(gk_family(cyclic_code(make_field_of_order(8), 9, {0}), 1), "hypothesis z=1 violated", Error);
}

TEST_CASE("backtracked groups of classical codes") {
  auto ham = backtrack_full_group(cyclic_code(make_field_of_order(2), 15, {1, 2, 4, 8}).code);
  CHECK(ham.order == 20160);
  auto golay3 = backtrack_full_group(cyclic_code(make_field_of_order(3), 11, {1, 3, 4, 5, 9}).code);
  CHECK(golay3.order == 660);
  auto rep = backtrack_full_group(cyclic_code(make_field_of_order(2), 5, {1, 2, 3, 4}).code);
  CHECK(rep.order == 120);
  CHECK_THROWS_AS(backtrack_full_group(cyclic_code(make_field_of_order(2), 15, {1, 2, 4, 8}).code, 3), BudgetExceeded);
}

TEST_CASE("backtrack generators are automorphisms and orders are relabeling invariant") {
  std::mt19937_64 rng(21);
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 9}, {2, 15}, {3, 13}}) {
    for (const auto& c : testing::all_codes(q, n)) {
      auto full = backtrack_full_group(c.code);
      for (const auto& g : full.generators) CHECK(is_automorphism(c.code, g));
      auto relabeled = permute_code(c.code, testing::random_perm(n, rng));
      CHECK(backtrack_full_group(relabeled).order == full.order);
    }
  }
}

TEST_CASE("backtrack agrees with brute force on small lengths") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 7}, {3, 8}, {4, 5}}) {
    for (const auto& c : testing::all_codes(q, n)) {
      std::size_t count = filter_symmetric(n, [&](const Permutation& s) { return is_automorphism(c.code, s); }).size();
      CHECK(backtrack_full_group(c.code).order == count);
    }
  }
}

TEST_CASE("classification") {
  auto golay = analyze(cyclic_code(make_field_of_order(3), 11, {1, 3, 4, 5, 9}));
  CHECK(golay.classification.label == GroupLabel::Psl2_11);

  auto ham = analyze(cyclic_code(make_field_of_order(2), 15, {1, 2, 4, 8}));
  CHECK(ham.classification.label == GroupLabel::PGammaL);
  CHECK(ham.classification.d == 4);
  REQUIRE(ham.projective);
  CHECK(ham.projective->fixes_code);
  CHECK(ham.projective->order == 20160);

  auto rep = analyze(cyclic_code(make_field_of_order(2), 5, {1, 2, 3, 4}));
  CHECK(rep.classification.label == GroupLabel::ElementarySn);

  for (const auto& c : testing::all_codes(11, 5)) {
    if (c.code.dimension() != 3 || multiplier_scan(c).m != 2) continue;
    auto r = analyze(c);
    if (is_elementary(c.code)) continue;
    CHECK(r.classification.label == GroupLabel::AffineSubgroup);
    CHECK(r.classification.p == 5);
    CHECK(r.classification.m == 2);
  }

  auto m23 = analyze(cyclic_code(make_field_of_order(2), 23, {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18}));
  CHECK(m23.classification.label == GroupLabel::M23);
}

TEST_CASE("report generators are sound and imprimitive labels carry residue blocks") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 9}, {2, 27}, {2, 25}}) {
    for (const auto& c : testing::all_codes(q, n)) {
      auto r = analyze(c);
      for (const auto& g : r.discovered_generators) CHECK(is_automorphism(c.code, g));
      for (const auto& g : r.full_generators) CHECK(is_automorphism(c.code, g));
      if (r.classification.label == GroupLabel::Imprimitive) {
        auto gens = r.full_group_order ? r.full_generators : r.discovered_generators;
        gens.push_back(shift(n));
        const auto p = as_prime_power(n)->prime;
        bool some = false;
        for (std::uint64_t b = p; b < n; b *= p) some = some || is_block_system(gens, residue_blocks(n, b));
        CHECK(some);
      }
    }
  }
}

TEST_CASE("Sylow exponent bounds") {
  CHECK(sylow_exponent_bounds(9, 2, 3));
  CHECK(sylow_exponent_bounds(9, 2, 4));
  CHECK_FALSE(sylow_exponent_bounds(9, 2, 2));
}

TEST_CASE("projective arithmetic") {
  CHECK(pgl_order(4, 2) == 20160);
  CHECK(psl_order(2, 11) == 660);
  CHECK(pgammal_order(2, 4) == 120);
  auto shapes = projective_shapes(15);
  REQUIRE(!shapes.empty());
  CHECK(shapes.front().d == 4);
  CHECK(shapes.front().t == 2);
}
