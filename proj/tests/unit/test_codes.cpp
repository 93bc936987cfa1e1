#include <doctest.h>

#include <random>

#include "cycperm/cyclic_code.hpp"
#include "cycperm/distance.hpp"
#include "cycperm/error.hpp"
#include "cycperm/field.hpp"
#include "cycperm/linear_code.hpp"
#include "helpers.hpp"

using namespace cycperm;

namespace {

std::size_t brute_distance(const LinearCode& c) {
  const auto& f = *c.field();
  const std::size_t k = c.dimension();
  if (k == 0) return c.length() + 1;
  std::size_t best = c.length();
  std::vector<Field::Element> msg(k, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++msg[i] == f.order()) msg[i++] = 0;
    if (i == k) break;
    auto w = c.encode(msg);
    best = std::min<std::size_t>(best, std::count_if(w.begin(), w.end(), [](auto x) { return x != 0; }));
  }
  return best;
}

}  // namespace

TEST_CASE("cyclic code construction") {
  auto f2 = make_field_of_order(2);
  auto ham = cyclic_code(f2, 7, {1, 2, 4});
  CHECK(ham.code.dimension() == 4);
  CHECK(min_distance(ham.code).value() == 3);

  auto full = cyclic_code(f2, 7, {});
  CHECK(full.code.dimension() == 7);
  CHECK(min_distance(full.code).value() == 1);

  auto rep = cyclic_code(make_field_of_order(11), 5, {1, 2, 3, 4});
  CHECK(rep.code.dimension() == 1);
  CHECK(min_distance(rep.code).value() == 5);
  CHECK(is_elementary(rep.code));

  CHECK_THROWS_WITH_AS(cyclic_code(f2, 7, {1, 2}), "not Frobenius-closed", Error);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_cyclic_codes(make_field_of_order(11), 5).size() == 32);
  auto thirteen = testing::all_codes(13, 5);
  CHECK(thirteen.size() == 4);
  for (const auto& c : thirteen) CHECK(is_elementary(c.code));
  CHECK(enumerate_cyclic_codes(make_field_of_order(2), 7).size() == 8);
  CHECK(count_cyclic_codes(49, 2) == 32);
  CHECK_THROWS_AS(enumerate_cyclic_codes(make_field_of_order(2), 255), Error);
  CHECK(count_cyclic_codes(255, 2) == (u128(1) << 35));
}

TEST_CASE("idempotents") {
  auto f2 = make_field_of_order(2);
  CHECK(idempotent(cyclic_code_spec(CyclotomicContext(f2, 7), {})).polynomial == Polynomial::constant(f2, 1));
  auto e = idempotent(cyclic_code_spec(CyclotomicContext(f2, 7), {1, 2, 4}));
  CHECK(e.polynomial == Polynomial(f2, {0, 1, 1, 0, 1}));

  auto f11 = make_field_of_order(11);
  auto rep = idempotent(cyclic_code_spec(CyclotomicContext(f11, 5), {1, 2, 3, 4}));
  CHECK(rep.polynomial == Polynomial(f11, {9, 9, 9, 9, 9}));

  auto zero = idempotent(cyclic_code_spec(CyclotomicContext(f2, 7), {0, 1, 2, 3, 4, 5, 6}));
  CHECK(zero.zero_code);
  CHECK(zero.polynomial.is_zero());
}

TEST_CASE("idempotent law and generation for every code with n <= 50") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 7}, {2, 9}, {2, 15}, {3, 11}, {2, 21}, {2, 23}, {11, 5}, {2, 49}, {4, 5}}) {
    for (const auto& c : testing::all_codes(q, n)) {
      const auto e = idempotent(c.spec);
      if (e.zero_code) continue;
      const auto mod = Polynomial::x_n_minus_one(c.spec.field, n);
      CHECK(poly_mulmod(e.polynomial, e.polynomial, mod) == e.polynomial);
      std::vector<Vector> rows;
      auto word = e.polynomial.cyclic_vector(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        rows.push_back(word);
        std::rotate(word.rbegin(), word.rbegin() + 1, word.rend());
      }
      CHECK(LinearCode::from_rows(c.spec.field, n, rows) == c.code);
    }
  }
}

TEST_CASE("every cyclic code is shift invariant and transitive under T") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 9}, {2, 15}, {2, 21}, {3, 13}, {2, 45}}) {
    for (const auto& c : testing::all_codes(q, n)) CHECK(is_automorphism(c.code, shift(n)));
  }
}

TEST_CASE("duality") {
  auto f2 = make_field_of_order(2);
  CHECK(dual(LinearCode::full(f2, 6)) == LinearCode::zero(f2, 6));
  auto simplex = dual(cyclic_code(f2, 7, {1, 2, 4}).code);
  CHECK(simplex.dimension() == 3);
  CHECK(min_distance(simplex).value() == 4);

  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 15}, {3, 13}, {11, 5}, {4, 21}}) {
    auto f = make_field_of_order(q);
    for (const auto& c : testing::all_codes(q, n)) {
      const auto d = dual(c.code);
      CHECK(c.code.dimension() + d.dimension() == n);
      CHECK(cyclic_code(f, n, dual_defining_set(n, c.spec.defining_set)).code == d);
    }
  }
}

TEST_CASE("canonical form is independent of the generator matrix") {
  std::mt19937_64 rng(5);
  auto f = make_field_of_order(5);
  for (const auto& c : testing::all_codes(5, 6)) {
    const std::size_t k = c.code.dimension();
    if (k == 0) continue;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Vector> rows;
      for (std::size_t r = 0; r < k + 1; ++r) {
        std::vector<Field::Element> msg(k);
        for (auto& m : msg) m = static_cast<Field::Element>(rng() % 5);
        rows.push_back(c.code.encode(msg));
      }
      const auto g = LinearCode::from_rows(f, 6, rows);
      if (g.dimension() == k) CHECK(g == c.code);
    }
  }
}

TEST_CASE("minimum distance agrees with brute enumeration") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 15}, {3, 11}, {2, 21}, {4, 7}}) {
    for (const auto& c : testing::all_codes(q, n)) {
      if (c.code.dimension() > 12) continue;
      CHECK(min_distance(c.code).value() == brute_distance(c.code));
    }
  }
}

TEST_CASE("support search agrees with exhaustive enumeration") {
  for (const auto& c : testing::all_codes(2, 21)) {
    auto exhaustive = min_distance(c.code, 1u << 22);
    auto support = min_distance(c.code, 1);  // forces the column-subset route
    if (support.exact) CHECK(support.lower == exhaustive.value());
    else CHECK((support.lower <= exhaustive.value() && exhaustive.value() <= support.upper));
  }
}

TEST_CASE("distance oracles from the literature") {
  CHECK(min_distance(cyclic_code(make_field_of_order(3), 11, {1, 3, 4, 5, 9}).code).value() == 5);
  auto golay = cyclic_code(make_field_of_order(2), 23, {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18});
  auto d = min_distance(golay.code);
  CHECK(d.value() == 7);
  CHECK_FALSE(is_mds(golay.code, d).mds);
}

TEST_CASE("interval results bracket the truth and refuse value()") {
  auto c = cyclic_code(make_field_of_order(2), 23, {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18});
  auto d = min_distance(c.code, 100);
  if (!d.exact) {
    CHECK(d.lower <= 7);
    CHECK(d.upper >= 7);
    CHECK_THROWS_WITH_AS(d.value(), "distance not certified", Error);
    CHECK_THROWS_WITH_AS(is_mds(c.code, d), "distance not certified", Error);
  }
}

TEST_CASE("MDS") {
  auto f11 = make_field_of_order(11);
  for (const auto& c : testing::all_codes(11, 5)) {
    if (c.code.dimension() == 3) {
      auto d = min_distance(c.code);
      if (d.value() == 3) CHECK(is_mds(c.code, d).mds);
    }
  }
  auto ham = cyclic_code(make_field_of_order(2), 7, {1, 2, 4});
  CHECK_FALSE(is_mds(ham.code, min_distance(ham.code)).mds);
}

TEST_CASE("zero code distance convention") {
  auto f = make_field_of_order(2);
  CHECK(min_distance(LinearCode::zero(f, 5)).value() == 6);
}

TEST_CASE("weight distribution sums to q^k") {
  auto c = cyclic_code(make_field_of_order(3), 11, {1, 3, 4, 5, 9});
  auto w = weight_distribution(c.code);
  std::uint64_t total = 0;
  for (auto [wt, count] : w.counts) total += count;
  CHECK(total == 729);
  CHECK(w.counts.at(0) == 1);
  CHECK(w.counts.at(5) == 132);
}

TEST_CASE("permuting codes") {
  std::mt19937_64 rng(9);
  auto c = cyclic_code(make_field_of_order(2), 15, {1, 2, 4, 8}).code;
  CHECK(permute_code(c, Permutation(15)) == c);
  CHECK(permute_code(c, shift(15)) == c);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = testing::random_perm(15, rng), t = testing::random_perm(15, rng);
    CHECK(permute_code(permute_code(c, s), t) == permute_code(c, t * s));
    CHECK(maps_onto(c, s, permute_code(c, s)));
  }
  CHECK_THROWS_AS(permute_code(c, Permutation(14)), Error);
}
