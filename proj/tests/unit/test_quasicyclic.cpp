#include <doctest.h>

#include "cycperm/error.hpp"
#include "cycperm/field.hpp"
#include "cycperm/quasicyclic.hpp"
#include "helpers.hpp"

using namespace cycperm;

namespace {

QuasiCyclicCode sample_qc() {
  auto f = make_field_of_order(2);
  return qc_from_generators(f, 10, 2, {Vector{1, 1, 0, 1, 0, 0, 0, 0, 0, 0}});
}

}  // namespace

TEST_CASE("quasi-cyclic construction") {
  auto c = sample_qc();
  CHECK(c.m == 5);
  CHECK(is_automorphism(c.code, power_shift(10, 2)));
  CHECK(minimal_index(c.code) == 2);
  CHECK_THROWS_WITH_AS(quasi_cyclic_code(c.code, 3), "index does not divide the length", Error);
  auto cyc = qc_from_generators(make_field_of_order(2), 10, 1, {Vector{1, 1, 0, 0, 0, 0, 0, 0, 0, 0}});
  CHECK(minimal_index(cyc.code) == 1);
}

TEST_CASE("sigma cycles") {
  auto s = sigma_cycles(10, 2);
  REQUIRE(s.size() == 2);
  CHECK(s[0](0) == 2);
  CHECK(s[0](8) == 0);
  CHECK(s[0](1) == 1);
  CHECK(s[0].order() == 5);
  CHECK_THROWS_AS(sigma_cycles(10, 3), Error);
}

TEST_CASE("normalizer witnesses of T^l") {
  auto w = normalizer_witnesses(10, 2);
  CHECK(w.checked > 0);
  CHECK(w.affine.size() == 40);
  CHECK(w.q.contains(shift(10)));
  CHECK_THROWS_AS(normalizer_witnesses(8, 2), Error);
}

TEST_CASE("H'(P) membership") {
  auto p = group_closure(10, {power_shift(10, 2)});
  for (const auto& s : sigma_cycles(10, 2)) CHECK(hprime_membership(s, p, 2));
  CHECK(hprime_membership(shift(10), p, 2));
  CHECK_THROWS_AS(hprime_membership(shift(10), PermGroup::trivial(10), 2), Error);
}

TEST_CASE("quasi-cyclic equivalence search") {
  auto c = sample_qc();
  auto v = qc_equivalence_search(c, c, Strategy::Brute);
  CHECK(v.status == VerdictStatus::Equivalent);
  CHECK(v.complete);
  auto shifted = quasi_cyclic_code(permute_code(c.code, shift(10)), 2);
  auto h = qc_equivalence_search(c, shifted, Strategy::HP);
  CHECK(h.status == VerdictStatus::Equivalent);
  REQUIRE(h.witness);
  CHECK(permute_code(c.code, *h.witness) == shifted.code);
}

TEST_CASE("imprimitivity report") {
  auto r = imprimitivity_report(sample_qc());
  CHECK(r.n == 10);
  CHECK(r.p == 5);
  CHECK(r.shift_is_odd);
  CHECK(r.williamson_holds);
  CHECK(r.sigma_membership.size() == 2);
  if (!r.primitive) {
    CHECK_FALSE(r.block_systems.empty());
    CHECK(r.conclusion == "imprimitive");
  }
  for (const auto& b : r.block_systems) CHECK(is_block_system(r.closure_generators, b));
}
