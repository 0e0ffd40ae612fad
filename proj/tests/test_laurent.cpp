#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laurent.hpp"

using namespace qrr;

namespace {

// {coeff, z_exp, q_exp}
LaurentPolynomial P(std::initializer_list<std::array<int64_t, 3>> terms) {
  LaurentPolynomial p(2);
  for (const auto& t : terms) p.add_term(ExponentVector::zq(t[1], t[2]), t[0]);
  return p;
}

LaurentPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 6), expd(-5, 5), coeffd(-9, 9);
  LaurentPolynomial p(2);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    p.add_term(ExponentVector::zq(expd(rng), expd(rng)), coeffd(rng));
  return p;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  int n = num(rng);
  if (n == 0) n = 3;
  return Rational(n, den(rng));
}

void check_canonical(const LaurentPolynomial& p) {
  for (const auto& [e, c] : p.terms()) CHECK(c != 0);
}

} // namespace

TEST_CASE("addition") {
  auto p = P({{1, 0, 0}, {3, 1, 2}});
  CHECK(p + LaurentPolynomial(2) == p);
  CHECK(P({{1, 0, 0}, {1, 0, 1}}) + P({{-1, 0, 0}, {1, 0, 1}}) == P({{2, 0, 1}}));
  CHECK(P({{1, 1, 0}, {1, -1, 0}}) + P({{1, 1, 0}, {-1, -1, 0}}) == P({{2, 1, 0}}));
  check_canonical(P({{1, 0, 0}, {1, 0, 1}}) + P({{-1, 0, 0}, {1, 0, 1}}));
  CHECK_THROWS_AS(p + LaurentPolynomial(3), std::invalid_argument);
}

TEST_CASE("multiplication") {
  // (1 + zq)(1 - q/z) = 1 + zq - q/z - q^2
  CHECK(P({{1, 0, 0}, {1, 1, 1}}) * P({{1, 0, 0}, {-1, -1, 1}}) ==
        P({{1, 0, 0}, {1, 1, 1}, {-1, -1, 1}, {-1, 0, 2}}));
  auto p = P({{2, -1, 3}, {5, 0, 0}});
  CHECK(p * LaurentPolynomial::constant(1) == p);
  // telescoping: (1 - q)(1 + q + q^2) = 1 - q^3
  CHECK(P({{1, 0, 0}, {-1, 0, 1}}) * P({{1, 0, 0}, {1, 0, 1}, {1, 0, 2}}) ==
        P({{1, 0, 0}, {-1, 0, 3}}));
}

TEST_CASE("monomial_scale") {
  CHECK(P({{1, 0, 0}, {1, 0, 1}}).monomial_scale(ExponentVector::zq(1, 2), -1) ==
        P({{-1, 1, 2}, {-1, 1, 3}}));
  auto p = P({{4, 2, -1}, {-7, 0, 3}});
  CHECK(p.monomial_scale(ExponentVector::zq(0, 0), 1) == p);
  CHECK(P({{1, -1, 0}}).monomial_scale(ExponentVector::zq(1, 0), 1) ==
        LaurentPolynomial::constant(1));
}

TEST_CASE("substitute_q_power") {
  CHECK(P({{1, 0, 0}, {1, 0, 1}}).substitute_q_power(2) == P({{1, 0, 0}, {1, 0, 2}}));
  CHECK(P({{1, 1, 3}}).substitute_q_power(2) == P({{1, 1, 6}}));
  auto p = P({{3, -2, 1}, {1, 0, 4}});
  CHECK(p.substitute_q_power(1) == p);
  CHECK_THROWS_AS(p.substitute_q_power(0), std::invalid_argument);
  CHECK_THROWS_AS(p.substitute_q_power(-2), std::invalid_argument);
}

TEST_CASE("invert_z") {
  auto sym = P({{1, 1, 0}, {1, -1, 0}});
  CHECK(sym.invert_z() == sym);
  CHECK(P({{1, 1, 1}}).invert_z() == P({{1, -1, 1}}));
  CHECK(P({{1, 0, 0}, {-1, -1, 1}}).invert_z() == P({{1, 0, 0}, {-1, 1, 1}}));
}

TEST_CASE("evaluate") {
  std::vector<Rational> pt = {Rational(1), Rational(2)};
  CHECK(P({{1, 0, 0}, {1, 0, 2}}).evaluate(pt) == Rational(5));
  std::vector<Rational> pt2 = {Rational(2), Rational(7)};
  CHECK(P({{1, 1, 0}, {1, -1, 0}}).evaluate(pt2) == Rational(5, 2));
  CHECK(LaurentPolynomial(2).evaluate(pt2) == Rational(0));
  std::vector<Rational> zero_z = {Rational(0), Rational(2)};
  CHECK_THROWS_AS(P({{1, -1, 0}}).evaluate(zero_z), std::domain_error);
  // zero coordinate with only nonnegative exponents is fine
  CHECK(P({{3, 1, 0}, {2, 0, 0}}).evaluate(zero_z) == Rational(2));
}

TEST_CASE("q_valuation") {
  CHECK(P({{1, -1, 3}, {1, 0, 5}}).q_valuation() == 3);
  CHECK(!LaurentPolynomial(2).q_valuation().has_value());
  CHECK(P({{1, 1, 0}, {1, -1, 0}}).q_valuation() == 0);
}

TEST_CASE("truncate_q") {
  CHECK(P({{1, 0, 0}, {1, 0, 1}, {1, 0, 5}}).truncate_q(3) == P({{1, 0, 0}, {1, 0, 1}}));
  auto p = P({{1, 0, 0}, {2, 1, 4}});
  CHECK(p.truncate_q(1000) == p);
  CHECK(P({{1, 0, 4}}).truncate_q(3).is_zero());
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(20260810);
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    check_canonical(a * b);
    check_canonical(a + b);
    check_canonical(a - b);
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 120; ++t) {
    auto a = random_poly(rng), b = random_poly(rng);
    std::vector<Rational> pt = {random_nonzero_rational(rng), random_nonzero_rational(rng)};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("invert_z is an involution") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    auto p = random_poly(rng);
    CHECK(p.invert_z().invert_z() == p);
  }
}

TEST_CASE("substitute_q_power is a ring homomorphism") {
  std::mt19937_64 rng(5150);
  for (int64_t k : {1, 2, 3}) {
    for (int t = 0; t < 60; ++t) {
      auto a = random_poly(rng), b = random_poly(rng);
      CHECK((a * b).substitute_q_power(k) ==
            a.substitute_q_power(k) * b.substitute_q_power(k));
      CHECK((a + b).substitute_q_power(k) ==
            a.substitute_q_power(k) + b.substitute_q_power(k));
    }
  }
}

TEST_CASE("canonical text form") {
  CHECK(LaurentPolynomial(2).to_text() == "0");
  CHECK(LaurentPolynomial::constant(-3).to_text() == "-3");
  // P_3 of the first identity
  CHECK(P({{1, 0, 0}, {1, 0, 2}, {-1, 1, 3}, {-1, -1, 3}}).to_text() ==
        "1 + q^2 - (z + z^-1)*q^3");
  CHECK(P({{1, 0, 0}, {-1, -1, 1}}).to_text() == "1 - z^-1*q");
  CHECK(P({{1, 0, 0}, {1, 0, 1}, {2, 0, 2}}).to_text() == "1 + q + 2*q^2");
  CHECK(P({{1, 0, 1}, {-1, 1, 1}, {-1, -1, 1}}).to_text() == "(1 - z - z^-1)*q");
  CHECK(P({{-2, 2, -3}}).to_text() == "-2*z^2*q^-3");
  CHECK(P({{1, 1, 0}, {1, -1, 0}, {1, 0, 1}}).to_text() == "(z + z^-1) + q");
}

TEST_CASE("term rows follow the canonical order") {
  auto rows = P({{1, 1, 3}, {-1, -1, 3}, {5, 0, 0}, {2, 0, 2}}).term_rows();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].q_exp == 0);
  CHECK(rows[1].q_exp == 2);
  CHECK(rows[2].z_exp == -1);
  CHECK(rows[2].q_exp == 3);
  CHECK(rows[3].z_exp == 1);
  CHECK(rows[3].coeff == "1");
}
