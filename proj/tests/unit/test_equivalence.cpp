#include <doctest.h>

#include <algorithm>
#include <random>

#include "cycperm/equivalence.hpp"
#include "cycperm/error.hpp"
#include "cycperm/field.hpp"
#include "helpers.hpp"

using namespace cycperm;

namespace {

PermGroup cyclic_group(std::size_t n) { return group_closure(n, {shift(n)}); }

}  // namespace

TEST_CASE("multiplier completeness by length") {
  CHECK(palfy_multiplier_complete(7));
  CHECK(palfy_multiplier_complete(15));
  CHECK(palfy_multiplier_complete(4));
  CHECK_FALSE(palfy_multiplier_complete(9));
  CHECK_FALSE(palfy_multiplier_complete(8));
  CHECK_FALSE(palfy_multiplier_complete(21));
  CHECK(palfy_conditional_shape(21));
  CHECK(palfy_conditional_shape(15));
  CHECK_FALSE(palfy_conditional_shape(9));
  CHECK_FALSE(palfy_conditional_shape(7));
}

TEST_CASE("H(P) membership") {
  const std::size_t n = 9;
  auto c9 = cyclic_group(n);
  CHECK(hp_membership(shift(n), c9));
  for (const auto& a : affine_group_elements(n)) CHECK(hp_membership(a, c9));
  CHECK_FALSE(hp_membership(Permutation::from_cycles(n, {{0, 1}}), c9));
  CHECK_THROWS_WITH_AS(hp_membership(shift(n), PermGroup::trivial(n)), "P must contain the shift", Error);
  CHECK(affine_group_elements(n).size() == 54);
  CHECK(brute_hp_set(c9) == affine_group_elements(n));
}

TEST_CASE("polynomial groups Q^m and Q_1^m") {
  auto g1 = q_group(9, 1);
  CHECK(g1.q.elements().size() == 54);
  CHECK(g1.q1.elements().size() == 27);
  auto g2 = q_group(9, 2);
  CHECK(g2.q.elements().size() == 162);
  CHECK(g2.q1.elements().size() == 81);
  CHECK(g1.q1.contains(shift(9)));
  CHECK(g2.q.contains(g1.q));
  CHECK_THROWS_WITH_AS(q_group(9, 3), "degree bound violated", Error);

  QPolyMap f{{1, 1, 3}, 9};
  CHECK(f.in_q());
  CHECK(f.in_q1());
  CHECK(f(2) == 6);
  QPolyMap g{{0, 2, 1}, 9};
  CHECK_FALSE(g.in_q());
}

TEST_CASE("GR formula degenerates to the affine group on Z_p") {
  auto s = gr_formula_set(7, 2);
  auto ag = affine_group_elements(7);
  for (const auto& x : s) CHECK(std::binary_search(ag.begin(), ag.end(), x));
  CHECK(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("strategy and verdict names round trip") {
  for (auto s : {Strategy::Multiplier, Strategy::HP, Strategy::Brute}) CHECK(parse_strategy(to_string(s)) == s);
  CHECK_THROWS_AS(parse_strategy("magic"), Error);
  CHECK(to_string(VerdictStatus::Inconclusive) == "inconclusive");
  CHECK(to_string(HPKind::QSet) == "Q_SET");
}

TEST_CASE("binary Hamming codes of length 7 are equivalent via M_3") {
  auto f = make_field_of_order(2);
  auto a = cyclic_code(f, 7, {1, 2, 4});
  auto b = cyclic_code(f, 7, {3, 5, 6});
  auto v = decide_equivalence(a, b, Strategy::Multiplier);
  CHECK(v.status == VerdictStatus::Equivalent);
  CHECK(v.complete);
  REQUIRE(v.witness);
  CHECK(permute_code(a.code, *v.witness) == b.code);
  auto brute = decide_equivalence(a, b, Strategy::Brute);
  CHECK(brute.status == VerdictStatus::Equivalent);
  auto hp = decide_equivalence(a, b, Strategy::HP);
  CHECK(hp.status == VerdictStatus::Equivalent);
}

TEST_CASE("different dimensions are separated by an invariant") {
  auto codes = testing::all_codes(11, 5);
  for (const auto& c : codes) {
    if (c.code.dimension() != 3) continue;
    auto dual = cyclic_code(c.spec.field, 5, dual_defining_set(5, c.spec.defining_set));
    auto v = decide_equivalence(c, dual, Strategy::HP);
    CHECK(v.status == VerdictStatus::Inequivalent);
    CHECK(v.complete);
  }
}

TEST_CASE("strategies agree with the exhaustive oracle") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 7}, {2, 9}, {3, 8}, {11, 5}}) {
    auto codes = testing::all_codes(q, n);
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (std::size_t j = i; j < codes.size(); ++j) {
        auto brute = decide_equivalence(codes[i], codes[j], Strategy::Brute);
        REQUIRE(brute.complete);
        for (auto s : {Strategy::Multiplier, Strategy::HP}) {
          auto v = decide_equivalence(codes[i], codes[j], s);
          if (v.status == VerdictStatus::Equivalent) {
            CHECK(brute.status == VerdictStatus::Equivalent);
            REQUIRE(v.witness);
            CHECK(permute_code(codes[i].code, *v.witness) == codes[j].code);
          }
          if (v.complete) CHECK(v.status == brute.status);
        }
      }
    }
  }
}

TEST_CASE("planted equivalences are recovered") {
  std::mt19937_64 rng(5);
  for (const auto& c : testing::all_codes(2, 9)) {
    auto plan = build_hp_plan(c);
    for (int trial = 0; trial < 3; ++trial) {
      auto sigma = testing::random_perm(9, rng);
      auto image = permute_code(c.code, sigma);
      // keep only planted images that are again cyclic
      if (!is_automorphism(image, shift(9))) continue;
      auto brute = brute_witness(c.code, image);
      REQUIRE(brute);
      CHECK(permute_code(c.code, *brute) == image);
    }
    CHECK(std::is_sorted(plan.candidates.begin(), plan.candidates.end()));
    for (const auto& s : plan.candidates) CHECK(hp_membership(s, plan.descriptor.p_group));
  }
}

TEST_CASE("H(P) sets of the chain C_9 <= G_1 <= G_2") {
  auto c9 = cyclic_group(9);
  auto q1 = q_group(9, 1).q1;
  auto q2 = q_group(9, 2).q1;
  auto a = brute_hp_set(c9);
  auto b = brute_hp_set(q1);
  CHECK(a.size() == 54);
  CHECK(b.size() >= a.size());
  for (const auto& s : b) CHECK(hp_membership(s, q1));
  CHECK(q2.contains(q1));
}
