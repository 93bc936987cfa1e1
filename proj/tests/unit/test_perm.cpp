#include <doctest.h>

#include <random>

#include "cycperm/autgroups.hpp"
#include "cycperm/error.hpp"
#include "cycperm/perm_group.hpp"
#include "cycperm/permutation.hpp"
#include "cycperm/quasicyclic.hpp"
#include "helpers.hpp"

using namespace cycperm;

TEST_CASE("shifts and their powers") {
  CHECK(shift(5).to_string() == "(0 1 2 3 4)");
  CHECK(power_shift(15, 3).order() == 5);
  Permutation prod(15);
  for (const auto& s : sigma_cycles(15, 3)) prod = prod * s;
  CHECK(prod == power_shift(15, 3));
  CHECK(sigma_cycles(15, 3)[0].to_string() == "(0 3 6 9 12)");
}

TEST_CASE("permutation validation and cycles") {
  CHECK_THROWS_WITH_AS(Permutation(std::vector<Permutation::Point>{0, 0, 1}), "not a bijection", Error);
  auto p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(p.order() == 6);
  CHECK(p.is_odd());
  CHECK(p.inverse() * p == Permutation(6));
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
}

TEST_CASE("affine maps") {
  CHECK(affine(9, 1, 1) == shift(9));
  CHECK_THROWS_WITH_AS(affine(9, 3, 0), "not a unit", Error);
  for (std::uint64_t a : {1, 2, 4, 5, 7, 8}) {
    for (std::uint64_t c : {1, 2, 4, 5, 7, 8}) {
      for (std::uint64_t b = 0; b < 9; b += 2) {
        for (std::uint64_t d = 0; d < 9; d += 3) {
          CHECK(affine(9, a, b) * affine(9, c, d) == affine(9, a * c % 9, (a * d + b) % 9));
        }
      }
    }
  }
  CHECK(affine_group_elements(9).size() == 54);
}

TEST_CASE("generalized multipliers") {
  CHECK(generalized_multiplier(9, 2, 1, 1) == shift(9));
  CHECK(generalized_multiplier(9, 2, 2, 0) == multiplier(9, 2));
  CHECK(generalized_multiplier(9, 1, 2, 0).images() == std::vector<Permutation::Point>{0, 2, 1, 3, 5, 4, 6, 8, 7});
  CHECK_THROWS_AS(generalized_multiplier(9, 1, 3, 0), Error);
}

TEST_CASE("group closure") {
  CHECK(group_closure(9, {shift(9)}).elements().size() == 9);
  CHECK(group_closure(9, {multiplier(9, 2), shift(9)}).elements().size() == 54);
  CHECK(group_closure(9, {generalized_multiplier(9, 2, 2, 0), shift(9)}).elements().size() == 54);
  try {
    group_closure(9, {Permutation::from_cycles(9, {{0, 1}}), shift(9)}, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.partial_bound() > 1000);
  }
}

TEST_CASE("orbits") {
  CHECK(is_transitive(9, {shift(9)}));
  CHECK(orbits(9, {power_shift(9, 3)}) == std::vector<Orbit>{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  auto o = orbits(15, {sigma_cycles(15, 3)[0]});
  CHECK(o.size() == 11);
  CHECK(o.front() == Orbit{0, 3, 6, 9, 12});
}

TEST_CASE("block systems") {
  auto t = minimal_blocks(9, {shift(9)});
  REQUIRE(t.size() == 1);
  CHECK(t.front() == residue_blocks(9, 3));
  CHECK(is_primitive(4, {Permutation::from_cycles(4, {{0, 1}}), shift(4)}));
  auto ag = minimal_blocks(9, {multiplier(9, 2), shift(9)});
  REQUIRE(ag.size() == 1);
  CHECK(ag.front() == residue_blocks(9, 3));
  CHECK_THROWS_WITH_AS(minimal_blocks(9, {power_shift(9, 3)}), "group is not transitive", Error);
}

TEST_CASE("normalizers") {
  CHECK(normalizer_in_symmetric(group_closure(9, {shift(9)})).elements() == affine_group_elements(9));
  CHECK(normalizer_in_symmetric(group_closure(5, {shift(5)})).elements().size() == 20);
  CHECK_THROWS_WITH_AS(normalizer_in_symmetric(group_closure(11, {shift(11)})),
                       "degree too large for exhaustive normalizer", Error);
  auto f2 = make_field_of_order(2);
  auto code = cyclic_code(f2, 9, {0});
  auto g2 = gk_family(code, 2).group;
  auto p = sylow_ascend(g2, 3, group_closure(9, {shift(9)}));
  CHECK(normalizer_within(p, g2) == g2);
}

TEST_CASE("Sylow ascent") {
  auto t = group_closure(9, {shift(9)});
  CHECK(sylow_ascend(t, 3, t) == t);
  auto g2 = gk_family(cyclic_code(make_field_of_order(2), 9, {0}), 2).group;
  CHECK(sylow_ascend(g2, 3, t).elements().size() == 27);
  auto ag5 = group_closure(5, {multiplier(5, 2), shift(5)});
  CHECK(sylow_ascend(ag5, 5, group_closure(5, {shift(5)})).elements().size() == 5);
  CHECK_THROWS_AS(sylow_ascend(ag5, 2, group_closure(5, {shift(5)})), Error);
}

TEST_CASE("group axioms, Lagrange and Sylow order on random subgroups of S_7") {
  std::mt19937_64 rng(3);
  auto s7 = group_closure(7, {shift(7), Permutation::from_cycles(7, {{0, 1}})});
  CHECK(s7.elements().size() == 5040);
  for (int trial = 0; trial < 12; ++trial) {
    auto a = testing::random_perm(7, rng), b = testing::random_perm(7, rng);
    auto g = group_closure(7, {a, b});
    const auto& els = g.elements();
    CHECK(g.contains(Permutation(7)));
    for (int k = 0; k < 20; ++k) {
      const auto& x = els[rng() % els.size()];
      const auto& y = els[rng() % els.size()];
      CHECK(g.contains(x * y));
      CHECK(g.contains(x.inverse()));
    }
    CHECK(5040 % els.size() == 0);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      auto trivial = PermGroup::trivial(7);
      auto sylow = sylow_ascend(g, p, group_closure(7, {Permutation(7)}));
      CHECK(sylow.elements().size() == static_cast<std::size_t>(p_part(els.size(), p)));
      CHECK(els.size() % sylow.elements().size() == 0);
      (void)trivial;
    }
  }
}

TEST_CASE("block soundness on imprimitive groups") {
  std::vector<std::vector<Permutation>> groups{{shift(9)}, {multiplier(9, 2), shift(9)}, {shift(12), multiplier(12, 5)}};
  for (const auto& gens : groups) {
    const std::size_t n = gens.front().degree();
    for (const auto& b : minimal_blocks(n, gens)) {
      CHECK(is_block_system(gens, b));
      const auto group = group_closure(n, gens);
      for (const auto& g : group.elements()) CHECK(is_block_system({g}, b));
    }
  }
}

TEST_CASE("conjugation relabels cycles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto sigma = testing::random_perm(10, rng), s = testing::random_perm(10, rng);
    auto conj = s * sigma * s.inverse();
    std::vector<std::vector<std::size_t>> cycles;
    for (const auto& c : sigma.cycles(true)) {
      cycles.emplace_back();
      for (auto x : c) cycles.back().push_back(s(x));
    }
    CHECK(Permutation::from_cycles(10, cycles) == conj);
  }
}

TEST_CASE("exhaustive filters keep lexicographic order") {
  auto all = filter_symmetric(5, [](const Permutation&) { return true; });
  CHECK(all.size() == 120);
  CHECK(std::is_sorted(all.begin(), all.end()));
  auto first = first_in_symmetric(6, [](const Permutation& p) { return p(0) == 3 && p(5) == 0; });
  REQUIRE(first);
  CHECK(first->images() == std::vector<Permutation::Point>{3, 1, 2, 4, 5, 0});
  CHECK_FALSE(first_in_symmetric(4, [](const Permutation&) { return false; }));
  CHECK_THROWS_AS(filter_symmetric(11, [](const Permutation&) { return true; }), Error);
}
