#include <doctest.h>

#include "possum/errors.hpp"
#include "possum/generators.hpp"
#include "possum/symmetric.hpp"
#include "possum/verify.hpp"
#include "test_support.hpp"

using namespace possum;
using namespace possum::testing;

namespace {

Polynomial P(const char* text, std::size_t arity) { return parse_polynomial(text, arity); }

Polynomial Pk(unsigned k, std::size_t n) { return direct_power_sum(k, n); }
Polynomial Ek(unsigned k, std::size_t n) { return direct_elementary(k, n); }

// Symmetrized monomial, from the literal n! average.
Polynomial bracket(const Partition& a) {
  return brute_reynolds(Polynomial::monomial(ExpVec(a.parts())));
}

bool nonneg_on_samples(const Certificate& c, std::uint64_t seed) {
  const Polynomial e = expand(c);
  for (const auto& pt : sample_points(c.arity(), 20, seed)) {
    if (evaluate(e, pt) < 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("closed forms") {
    CHECK(expand(power_mean(2, 1, 2)) == Rational(1, 4) * pow(P("x1 - x2", 2), 2));
    CHECK(expand(power_mean(2, 1, 2)) == Pk(2, 2) - direct_pow(Pk(1, 2), 2));

    const Polynomial pairs3 =
        pow(P("x1 - x2", 3), 2) + pow(P("x1 - x3", 3), 2) + pow(P("x2 - x3", 3), 2);
    CHECK(expand(e_product_gap(1, 1, 3)) == Rational(1, 18) * pairs3);
    CHECK(expand(e_product_gap(1, 1, 3)) == direct_pow(Ek(1, 3), 2) - Ek(2, 3));
    CHECK(e_gap_weight(1, 1, 3, 0) == Rational(1, 3));

    // Variables x1, x2, y1, y2.
    CHECK(expand(minkowski(2)) == pow(P("x1 x4 - x2 x3", 4), 2));
    CHECK(expand(minkowski(2)) ==
          P("x1^2 + x3^2", 4) * P("x2^2 + x4^2", 4) - pow(P("x1 x2 + x3 x4", 4), 2));

    CHECK(expand(amgm(2)) == P("1/2 x1^2 + 1/2 x2^2 - x1 x2", 2));
  }

  TEST_CASE("muirhead against the symmetrized monomials") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::uint64_t d = 0; d <= 5; ++d) {
        const auto parts = all_partitions(d, n);
        for (const auto& a : parts) {
          for (const auto& b : parts) {
            if (!dominates(a, b)) {
              CHECK_THROWS_AS(muirhead(a, b), DomainError);
              continue;
            }
            const Certificate c = muirhead(a, b);
            CHECK(expand(c) == bracket(a) - bracket(b));
            if (a == b) CHECK(c.empty());
          }
        }
      }
    }
  }

  TEST_CASE("muirhead_step preconditions") {
    CHECK(expand(muirhead_step(part({2, 0}), part({1, 1}))) == P("1/2 x1^2 + 1/2 x2^2 - x1 x2", 2));
    CHECK_THROWS_AS(muirhead_step(part({3, 0, 0}), part({1, 1, 1})), DomainError);
    CHECK_THROWS_AS(muirhead_step(part({2, 0}), part({2, 0, 0})), InputError);
  }

  TEST_CASE("product gaps") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned i = 1; i <= k; ++i) {
          const Polynomial target = Pk(i - 1, n) * Pk(k + 1, n) - Pk(i, n) * Pk(k, n);
          CHECK(expand(p_product_gap(i, k, n)) == target);
        }
      }
    }
    CHECK(p_product_gap(1, 2, 1).empty());
    CHECK_THROWS_AS(p_product_gap(0, 1, 2), InputError);
    CHECK_THROWS_AS(p_product_gap(3, 2, 2), InputError);

    for (std::size_t n = 2; n <= 6; ++n) {
      for (unsigned k = 1; k + 1 <= n; ++k) {
        for (unsigned i = 1; i <= k; ++i) {
          const Polynomial target = Ek(i, n) * Ek(k, n) - Ek(i - 1, n) * Ek(k + 1, n);
          CHECK(expand(e_product_gap(i, k, n)) == target);
        }
      }
    }
    CHECK_THROWS_AS(e_product_gap(1, 3, 3), InputError);
    CHECK_THROWS_AS(e_product_gap(2, 1, 3), InputError);
  }

  TEST_CASE("e-gap weights are nonnegative") {
    for (std::size_t n = 2; n <= 8; ++n) {
      for (unsigned k = 1; k + 1 <= n; ++k) {
        for (unsigned i = 1; i <= k; ++i) {
          Rational total = 0;
          for (unsigned r = 0; r < i; ++r) {
            const Rational a = e_gap_weight(i, k, n, r);
            CHECK(a >= 0);
            total += a;
          }
          CHECK(total > 0);
        }
      }
    }
  }

  TEST_CASE("power mean and lyapunov") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (unsigned p = 1; p <= 4; ++p) {
        for (unsigned q = 1; q <= p; ++q) {
          const Polynomial pm = direct_pow(Pk(p, n), q) - direct_pow(Pk(q, n), p);
          CHECK(expand(power_mean(p, q, n)) == pm);
          for (unsigned r = 0; r <= q; ++r) {
            const Polynomial ly =
                direct_pow(Pk(p, n), q - r) * direct_pow(Pk(r, n), p - q) - direct_pow(Pk(q, n), p - r);
            CHECK(expand(lyapunov(p, q, r, n)) == ly);
          }
        }
      }
    }
    CHECK(power_mean(3, 3, 2).empty());
    CHECK(power_mean(3, 2, 2) == lyapunov(3, 2, 0, 2));
    CHECK_THROWS_AS(power_mean(1, 2, 2), InputError);
    CHECK_THROWS_AS(lyapunov(3, 1, 2, 2), InputError);
  }

  TEST_CASE("maclaurin families") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (unsigned p = 1; p <= n; ++p) {
        for (unsigned q = 1; q <= p; ++q) {
          const Polynomial mt = direct_pow(Ek(q, n), p) - direct_pow(Ek(p, n), q);
          CHECK(expand(maclaurin(p, q, n)) == mt);
        }
        for (unsigned q = 0; q <= p; ++q) {
          for (unsigned r = 0; r <= q; ++r) {
            const Polynomial ml =
                direct_pow(Ek(q, n), p - r) - direct_pow(Ek(p, n), q - r) * direct_pow(Ek(r, n), p - q);
            CHECK(expand(maclaurin_lyapunov(p, q, r, n)) == ml);
          }
        }
      }
    }
    // Newton: E_q^2 - E_{q+1} E_{q-1}.
    CHECK(expand(maclaurin_lyapunov(3, 2, 1, 4)) == direct_pow(Ek(2, 4), 2) - Ek(3, 4) * Ek(1, 4));
    CHECK(maclaurin(3, 2, 4) == maclaurin_lyapunov(3, 2, 0, 4));
    CHECK_THROWS_AS(maclaurin(4, 2, 3), InputError);
    CHECK_THROWS_AS(maclaurin(2, 0, 3), InputError);
  }

  TEST_CASE("amgm and minkowski against direct products") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(expand(amgm(n)) == Pk(n, n) - Ek(n, n));
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      Polynomial lhs = Polynomial::constant(2 * n, 1);
      Polynomial xs = Polynomial::constant(2 * n, 1);
      Polynomial ys = Polynomial::constant(2 * n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        const Polynomial x = Polynomial::variable(2 * n, i);
        const Polynomial y = Polynomial::variable(2 * n, n + i);
        lhs = lhs * (direct_pow(x, n) + direct_pow(y, n));
        xs = xs * x;
        ys = ys * y;
      }
      CHECK(expand(minkowski(n)) == lhs - direct_pow(xs + ys, n));
    }
    CHECK(minkowski(1).empty());
    CHECK(minkowski(1).arity() == 2);
  }

  TEST_CASE("generators match their library targets") {
    CHECK(expand(lyapunov(4, 2, 1, 3)) == lyapunov_target(4, 2, 1, 3));
    CHECK(expand(maclaurin_lyapunov(4, 3, 1, 5)) == maclaurin_lyapunov_target(4, 3, 1, 5));
    CHECK(expand(minkowski(3)) == minkowski_target(3));
    CHECK(expand(amgm(4)) == amgm_target(4));
    CHECK(muirhead_target(part({3, 1, 0}), part({2, 1, 1})) == bracket(part({3, 1, 0})) - bracket(part({2, 1, 1})));
  }

  TEST_CASE("certificates are homogeneous and nonnegative") {
    const std::vector<Certificate> certs{
        power_mean(5, 2, 3),  lyapunov(5, 3, 1, 3),       maclaurin(4, 2, 5),
        maclaurin_lyapunov(5, 3, 2, 5), minkowski(3), amgm(5),
        muirhead(part({4, 2, 0, 0}), part({2, 2, 1, 1}))};
    for (const auto& c : certs) {
      CHECK(expand(c).is_homogeneous());
      CHECK(nonneg_on_samples(c, 7));
      for (const auto& a : c.atoms()) CHECK(a.coeff() > 0);
    }
  }

  TEST_CASE("size guards") {
    CHECK_THROWS_AS(minkowski(6), InputError);
    CHECK_THROWS_AS(minkowski(9), InputError);
    CHECK_THROWS_AS(amgm(9), InputError);
    CHECK_THROWS_AS(amgm(0), InputError);
    CHECK_THROWS_AS(power_mean(2, 1, 9), InputError);
    CHECK_NOTHROW(power_mean(2, 1, 9, SizeGuard::allow_large));
  }
}
