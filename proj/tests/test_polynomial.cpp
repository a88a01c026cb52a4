#include <doctest.h>

#include "possum/errors.hpp"
#include "possum/polynomial.hpp"
#include "test_support.hpp"

using namespace possum;
using possum::testing::random_point;
using possum::testing::random_polynomial;

namespace {

Polynomial P(const char* text, std::size_t arity = 2) { return parse_polynomial(text, arity); }

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("rationals stay reduced") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(2, 3) == 0);
    CHECK(factorial(5) == 120);
  }

  TEST_CASE("add") {
    CHECK((P("x1") + P("-x1")).is_zero());
    CHECK(P("x1 + x2") + P("x2") == P("x1 + 2 * x2"));
    CHECK_THROWS_AS(add(P("x1", 1), P("x1", 2)), InputError);
  }

  TEST_CASE("mul and pow") {
    CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
    CHECK(pow(P("x1 - x2"), 2) == P("x1^2 - 2 * x1 * x2 + x2^2"));
    CHECK(pow(P("x1 + x2"), 2) == P("x1^2 + 2 x1 x2 + x2^2"));
    CHECK(pow(P("x1"), 3) == P("x1^3"));
    CHECK(pow(P("3 x1 - 1/2"), 0) == Polynomial::constant(2, 1));
    CHECK(P("x1 + 1") * Polynomial::constant(2, 1) == P("x1 + 1"));
    CHECK_THROWS_AS(mul(P("x1", 1), P("x1", 3)), InputError);
  }

  TEST_CASE("substitute_monomials") {
    const std::vector<ExpVec> squares{ExpVec{2, 0}, ExpVec{0, 2}};
    CHECK(substitute_monomials(P("x1 + x2"), squares) == P("x1^2 + x2^2"));

    // x1 -> x1*y2, x2 -> x2*y1 with variables (x1, x2, y1, y2).
    const std::vector<ExpVec> mixed{ExpVec{1, 0, 0, 1}, ExpVec{0, 1, 1, 0}};
    CHECK(substitute_monomials(P("x1 x2"), mixed) == P("x1 x2 x3 x4", 4));

    const std::vector<ExpVec> identity{ExpVec{1, 0}, ExpVec{0, 1}};
    const Polynomial f = P("1/3 x1^2 x2 - 7 x2 + 2");
    CHECK(substitute_monomials(f, identity) == f);
    CHECK_THROWS_AS(substitute_monomials(f, std::span(identity).first(1)), InputError);
  }

  TEST_CASE("evaluate") {
    const std::vector<Rational> pt{3, 1};
    CHECK(evaluate(P("x1^2 - 2 x1 x2 + x2^2"), pt) == 4);
    const std::vector<Rational> zero{0, 0, 0};
    CHECK(evaluate(P("x1^2 x2 - 5 x3^3 + x1 x2 x3", 3), zero) == 0);
    CHECK_THROWS_AS(evaluate(P("x1"), zero), InputError);
  }

  TEST_CASE("split_even") {
    auto [h1, r1] = split_even(ExpVec{3, 2});
    CHECK(h1 == ExpVec{1, 1});
    CHECK(r1 == ExpVec{1, 0});
    auto [h2, r2] = split_even(ExpVec{0, 0});
    CHECK(h2 == ExpVec{0, 0});
    CHECK(r2 == ExpVec{0, 0});
    auto [h3, r3] = split_even(ExpVec{5, 0, 1});
    CHECK(h3 == ExpVec{2, 0, 0});
    CHECK(r3 == ExpVec{1, 0, 1});
  }

  TEST_CASE("graded lex term order") {
    const Polynomial f = P("x2^3 + x1 x2 + x1^2 + 1 + x1^3", 2);
    std::vector<ExpVec> order;
    for (const auto& t : f.terms()) order.push_back(t.exps);
    CHECK(order == std::vector<ExpVec>{ExpVec{3, 0}, ExpVec{0, 3}, ExpVec{2, 0}, ExpVec{1, 1}, ExpVec{0, 0}});
    CHECK(to_text(f) == "x1^3 + x2^3 + x1^2 + x1 * x2 + 1");
  }

  TEST_CASE("text format") {
    CHECK(to_text(Polynomial(3)) == "0");
    CHECK(to_text(P("1/2 x1^2 - x1 x2 + 1/2 x2^2")) == "1/2 * x1^2 - x1 * x2 + 1/2 * x2^2");
    CHECK(to_text(P("-x1 + 3")) == "-x1 + 3");
    CHECK(P("x1 * x1") == P("x1^2"));
    CHECK_THROWS_AS(P("x3"), InputError);
    CHECK_THROWS_AS(P("x1 +"), InputError);
    CHECK_THROWS_AS(P("y1"), InputError);
    CHECK_THROWS_AS(P("x1^"), InputError);
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 3;
      const auto a = random_polynomial(rng, n);
      const auto b = random_polynomial(rng, n);
      const auto c = random_polynomial(rng, n);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a + Polynomial(n) == a);
    }
  }

  TEST_CASE("text round trip") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const auto a = random_polynomial(rng, n, 6, 4);
      CHECK(parse_polynomial(to_text(a), n) == a);
    }
  }

  TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<unsigned> e(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_polynomial(rng, 2);
      const auto b = random_polynomial(rng, 2);
      std::vector<ExpVec> images;
      for (int j = 0; j < 2; ++j) images.push_back(ExpVec{e(rng), e(rng), e(rng)});
      CHECK(substitute_monomials(a * b, images) ==
            substitute_monomials(a, images) * substitute_monomials(b, images));
      CHECK(substitute_monomials(a + b, images) ==
            substitute_monomials(a, images) + substitute_monomials(b, images));
    }
  }

  TEST_CASE("evaluation is multiplicative") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_polynomial(rng, 3);
      const auto b = random_polynomial(rng, 3);
      const auto pt = random_point(rng, 3);
      CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    }
  }
}
