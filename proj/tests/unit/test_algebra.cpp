#include <doctest.h>

#include "cycperm/cyclotomic.hpp"
#include "cycperm/error.hpp"
#include "cycperm/field.hpp"
#include "cycperm/numtheory.hpp"
#include "cycperm/polynomial.hpp"
#include "cycperm/splitting_field.hpp"

using namespace cycperm;

TEST_CASE("make_field builds prime and extension fields") {
  auto f2 = make_field(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->spec().modulus == std::vector<std::uint32_t>{0, 1});

  auto f9 = make_field(3, 2);
  CHECK(f9->order() == 9);
  for (Field::Element e = 0; e < 9; ++e) CHECK(f9->pow(e, 9) == e);

  CHECK_THROWS_WITH_AS(make_field(4, 1), "not a prime", Error);
}

TEST_CASE("field axioms hold in GF(16) and GF(25)") {
  for (auto f : {make_field(2, 4), make_field(5, 2)}) {
    const auto q = f->order();
    for (Field::Element a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      for (Field::Element b = 0; b < q; b += 3) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (Field::Element c = 0; c < q; c += 5) {
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative orders") {
  CHECK(multiplicative_order(11, 5) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 49) == 21);
  CHECK_THROWS_AS(multiplicative_order(3, 9), Error);
}

TEST_CASE("z parameter") {
  CHECK(z_parameter(2, 7) == 1);
  CHECK(z_parameter(11, 5) == 1);
  CHECK(z_parameter(2, 1093) == 2);
  CHECK_THROWS_AS(z_parameter(9, 3), Error);
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(9) == 6);
  CHECK(prime_factors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(as_prime_power(49)->prime == 7);
  CHECK(as_prime_power(49)->exponent == 2);
  CHECK_FALSE(as_prime_power(12));
  CHECK(invmod(3, 7) == 5);
  CHECK(sylow_exponent_of_symmetric(3, 2) == 4);
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("polynomial division") {
  auto f11 = make_field_of_order(11);
  Polynomial a(f11, {10, 0, 1});  // x^2 - 1
  Polynomial b(f11, {10, 1});     // x - 1
  auto [quo, rem] = poly_divmod(a, b);
  CHECK(quo == Polynomial(f11, {1, 1}));
  CHECK(rem.is_zero());

  auto f2 = make_field_of_order(2);
  CHECK(poly_divmod(Polynomial::x_n_minus_one(f2, 7), Polynomial(f2, {1, 1, 0, 1})).remainder.is_zero());

  Polynomial x = Polynomial::monomial(f2, 1);
  auto small = poly_divmod(x, Polynomial::monomial(f2, 2));
  CHECK(small.quotient.is_zero());
  CHECK(small.remainder == x);
  CHECK_THROWS_AS(poly_divmod(x, Polynomial(f2)), Error);
}

TEST_CASE("divmod identity on random polynomials") {
  auto f = make_field_of_order(7);
  std::uint32_t seed = 17;
  auto next = [&] { return seed = seed * 1103515245u + 12345u, (seed >> 16) % 7; };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Field::Element> ca(9), cb(4);
    for (auto& c : ca) c = next();
    for (auto& c : cb) c = next();
    cb.back() = 1 + next() % 6;
    Polynomial a(f, ca), b(f, cb);
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("irreducibility and the least irreducible") {
  auto f2 = make_field_of_order(2);
  CHECK(is_irreducible(Polynomial(f2, {1, 1, 0, 1})));
  CHECK_FALSE(is_irreducible(Polynomial(f2, {1, 0, 1})));
  CHECK(least_irreducible(f2, 3) == Polynomial(f2, {1, 1, 0, 1}));
}

TEST_CASE("cyclotomic cosets") {
  CHECK(cyclotomic_cosets(7, 2) == std::vector<Coset>{{0}, {1, 2, 4}, {3, 5, 6}});
  CHECK(cyclotomic_cosets(5, 11) == std::vector<Coset>{{0}, {1}, {2}, {3}, {4}});
  std::vector<std::size_t> sizes;
  for (const auto& c : cyclotomic_cosets(49, 2)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 3, 21, 21});
  CHECK_THROWS_AS(cyclotomic_cosets(6, 2), Error);
}

TEST_CASE("minimal polynomials") {
  auto f2 = make_field_of_order(2);
  CHECK(minimal_polynomial(f2, 7, {0}) == Polynomial(f2, {1, 1}));
  CHECK(minimal_polynomial(f2, 7, {1, 2, 4}) == Polynomial(f2, {1, 1, 0, 1}));
  CHECK_THROWS_WITH_AS(minimal_polynomial(f2, 7, {1, 2}), "not a coset", Error);

  auto f11 = make_field_of_order(11);
  const CyclotomicContext ctx(f11, 5);
  const auto& alpha = ctx.root();
  const Field::Element a2 = ctx.splitting_field().pow(alpha, 2)[0];
  CHECK(minimal_polynomial(f11, 5, {2}) == Polynomial(f11, {f11->neg(a2), 1}));
}

TEST_CASE("x^n - 1 factors multiply back") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 7}, {2, 9}, {3, 11}, {2, 49}, {4, 15}, {13, 29}}) {
    auto f = make_field_of_order(q);
    Polynomial prod = Polynomial::constant(f, 1);
    for (const auto& g : factor_x_n_minus_one(f, n)) {
      CHECK(is_irreducible(g));
      prod = prod * g;
    }
    CHECK(prod == Polynomial::x_n_minus_one(f, n));
  }
}

TEST_CASE("splitting field root of unity has exact order") {
  auto f2 = make_field_of_order(2);
  SplittingField ext(f2, 21);
  const auto alpha = ext.root_of_unity(49);
  CHECK(ext.is_one(ext.pow(alpha, 49)));
  CHECK_FALSE(ext.is_one(ext.pow(alpha, 7)));
  CHECK_THROWS_AS(ext.root_of_unity(5), Error);
}
