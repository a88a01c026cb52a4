#include "possum/generators.hpp"

#include <string>

#include "possum/errors.hpp"
#include "possum/symmetric.hpp"

namespace possum {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::string args(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
  std::string out;
  for (const auto& [name, value] : kv) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

Partition padded(std::vector<Partition::value_type> head, std::size_t n) {
  head.resize(n, 0);
  return Partition(std::move(head));
}

// beta_(r) = (2^r, 1^(i+k-2r), 0^(n-i-k+r)); requires i+k-r <= n.
Partition e_gap_partition(std::uint32_t i, std::uint32_t k, std::size_t n, std::uint32_t r) {
  std::vector<Partition::value_type> parts(n, 0);
  std::fill_n(parts.begin(), r, 2U);
  std::fill_n(parts.begin() + r, i + k - 2 * r, 1U);
  return Partition(std::move(parts));
}

// Certificate for sum_{i,k} gap(i,k) * multiplier(i,k), the shape shared by
// the four telescoping theorems.
template <typename Gap, typename Multiplier>
Certificate telescope(std::size_t n, std::uint32_t i_lo, std::uint32_t i_hi, std::uint32_t k_lo,
                      std::uint32_t k_hi, Gap gap, Multiplier multiplier) {
  std::vector<Certificate> parts;
  for (std::uint32_t i = i_lo; i <= i_hi; ++i) {
    for (std::uint32_t k = k_lo; k <= k_hi; ++k) {
      parts.push_back(cert_mul(gap(i, k), from_nonneg(multiplier(i, k))));
    }
  }
  return cert_sum(n, parts);
}

}  // namespace

Certificate muirhead_step(const Partition& alpha, const Partition& beta, SizeGuard guard) {
  const std::size_t n = alpha.length();
  check_arity(n, guard);
  const auto step = is_step(alpha, beta);
  if (!step) {
    throw DomainError(alpha.to_string() + " -> " + beta.to_string() + " is not a unit move");
  }
  const auto [k, l] = *step;
  const std::uint32_t hi = alpha[k];
  const std::uint32_t lo = alpha[l];

  std::vector<Term> cofactor;
  for (std::uint32_t j = lo; j + 2 <= hi; ++j) {
    ExpVec e = alpha.exponents();
    e.set(k, j);
    e.set(l, hi + lo - 2 - j);
    cofactor.push_back({std::move(e), 1});
  }
  const Polynomial diff = Polynomial::variable(n, k) - Polynomial::variable(n, l);
  const Certificate inner =
      cert_mul(square(diff), from_nonneg(Polynomial::from_terms(n, std::move(cofactor))));
  return cert_scale(cert_reynolds(inner, guard), Rational(1, 2));
}

Certificate muirhead(const Partition& alpha, const Partition& beta, SizeGuard guard) {
  check_arity(alpha.length(), guard);
  const auto chain = find_chain(alpha, beta);
  std::vector<Certificate> steps;
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    steps.push_back(muirhead_step(chain[s], chain[s + 1], guard));
  }
  return cert_sum(alpha.length(), steps);
}

Certificate p_product_gap(std::uint32_t i, std::uint32_t k, std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  require(1 <= i && i <= k, "p_product_gap needs 1 <= i <= k (" + args({{"i", i}, {"k", k}}) + ")");
  if (n == 1) return Certificate(1);
  std::vector<Term> cofactor;
  for (std::uint32_t j = i - 1; j <= k - 1; ++j) {
    ExpVec e(n);
    e.set(0, j);
    e.set(1, i + k - 2 - j);
    cofactor.push_back({std::move(e), 1});
  }
  const Polynomial diff = Polynomial::variable(n, 0) - Polynomial::variable(n, 1);
  const Certificate inner =
      cert_mul(square(diff), from_nonneg(Polynomial::from_terms(n, std::move(cofactor))));
  const auto nn = static_cast<unsigned long>(n);
  return cert_scale(cert_reynolds(inner, guard), ratio(static_cast<long>(nn - 1), 2 * nn));
}

Rational e_gap_weight(std::uint32_t i, std::uint32_t k, std::size_t n, std::uint32_t r) {
  require(1 <= i && i <= k && k + 1 <= n && r + 1 <= i,
          "e_gap_weight needs 1 <= i <= k <= n-1 and r <= i-1 (" +
              args({{"i", i}, {"k", k}, {"n", n}, {"r", r}}) + ")");
  return binomial(k, r) * binomial(n - 1 - k, i - 1 - r) * ratio(k + 1 - i, i) /
         binomial(n, i);
}

Certificate e_product_gap(std::uint32_t i, std::uint32_t k, std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  require(1 <= i && i <= k && k + 1 <= n,
          "e_product_gap needs 1 <= i <= k <= n-1 (" + args({{"i", i}, {"k", k}, {"n", n}}) + ")");
  std::vector<Certificate> steps;
  for (std::uint32_t r = 0; r < i; ++r) {
    const Rational weight = e_gap_weight(i, k, n, r);
    // A zero weight is exactly the case where beta_(r) would need more than
    // n parts.
    if (weight == 0) continue;
    steps.push_back(cert_scale(
        muirhead_step(e_gap_partition(i, k, n, r + 1), e_gap_partition(i, k, n, r), guard), weight));
  }
  return cert_sum(n, steps);
}

Certificate power_mean(std::uint32_t p, std::uint32_t q, std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  require(p >= q && q >= 1, "power mean needs p >= q >= 1 (" + args({{"p", p}, {"q", q}}) + ")");
  return lyapunov(p, q, 0, n, guard);
}

Certificate lyapunov(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::size_t n,
                     SizeGuard guard) {
  check_arity(n, guard);
  require(p >= q && q >= r,
          "lyapunov needs p >= q >= r >= 0 (" + args({{"p", p}, {"q", q}, {"r", r}}) + ")");
  if (p == q) return Certificate(n);
  auto P = [&](std::uint32_t m) { return power_sum(m, n, guard); };
  return telescope(
      n, r + 1, q, q, p - 1, [&](auto i, auto k) { return p_product_gap(i, k, n, guard); },
      [&](std::uint32_t i, std::uint32_t k) {
        return pow(P(i - 1), k - q) * pow(P(i), p - k - 1) * pow(P(p), q - i) *
               pow(P(q), i - 1 - r);
      });
}

Certificate maclaurin(std::uint32_t p, std::uint32_t q, std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  require(n >= p && p >= q && q >= 1,
          "maclaurin needs n >= p >= q >= 1 (" + args({{"n", n}, {"p", p}, {"q", q}}) + ")");
  return maclaurin_lyapunov(p, q, 0, n, guard);
}

Certificate maclaurin_lyapunov(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::size_t n,
                               SizeGuard guard) {
  check_arity(n, guard);
  require(n >= p && p >= q && q >= r,
          "generalized maclaurin needs n >= p >= q >= r >= 0 (" +
              args({{"n", n}, {"p", p}, {"q", q}, {"r", r}}) + ")");
  if (p == q) return Certificate(n);
  auto E = [&](std::uint32_t m) { return elementary(m, n, guard); };
  return telescope(
      n, r + 1, q, q, p - 1, [&](auto i, auto k) { return e_product_gap(i, k, n, guard); },
      [&](std::uint32_t i, std::uint32_t k) {
        return pow(E(i), p - 1 - k) * pow(E(i - 1), k - q) * pow(E(p), q - i) *
               pow(E(q), i - 1 - r);
      });
}

Certificate amgm(std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  return muirhead(padded({static_cast<Partition::value_type>(n)}, n),
                  Partition(std::vector<Partition::value_type>(n, 1)), guard);
}

Certificate minkowski(std::size_t n, SizeGuard guard) {
  check_arity(n, guard, kMaxMinkowskiArity);
  const Certificate f = amgm(n, SizeGuard::allow_large);
  std::vector<Certificate> parts;
  // Subsets I of Z/nZ as bitmasks; every size k = 0..n is covered.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ExpVec> images;
    for (std::size_t t = 0; t < n; ++t) {
      ExpVec z(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        // i lies in I + t iff i - t lies in I.
        const bool in_shifted = (mask >> ((i + n - t) % n)) & 1U;
        z.set(in_shifted ? i : n + i, 1);
      }
      images.push_back(std::move(z));
    }
    parts.push_back(cert_substitute(f, images));
  }
  return cert_sum(2 * n, parts);
}

Polynomial muirhead_target(const Partition& alpha, const Partition& beta, SizeGuard guard) {
  return monomial_symmetric(alpha, guard) - monomial_symmetric(beta, guard);
}

Polynomial p_product_gap_target(std::uint32_t i, std::uint32_t k, std::size_t n, SizeGuard guard) {
  require(1 <= i && i <= k, "p_product_gap needs 1 <= i <= k");
  return power_sum(i - 1, n, guard) * power_sum(k + 1, n, guard) -
         power_sum(i, n, guard) * power_sum(k, n, guard);
}

Polynomial e_product_gap_target(std::uint32_t i, std::uint32_t k, std::size_t n, SizeGuard guard) {
  require(1 <= i && i <= k && k + 1 <= n, "e_product_gap needs 1 <= i <= k <= n-1");
  return elementary(i, n, guard) * elementary(k, n, guard) -
         elementary(i - 1, n, guard) * elementary(k + 1, n, guard);
}

Polynomial power_mean_target(std::uint32_t p, std::uint32_t q, std::size_t n, SizeGuard guard) {
  require(p >= q && q >= 1, "power mean needs p >= q >= 1");
  return pow(power_sum(p, n, guard), q) - pow(power_sum(q, n, guard), p);
}

Polynomial lyapunov_target(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::size_t n,
                           SizeGuard guard) {
  require(p >= q && q >= r, "lyapunov needs p >= q >= r >= 0");
  return pow(power_sum(p, n, guard), q - r) * pow(power_sum(r, n, guard), p - q) -
         pow(power_sum(q, n, guard), p - r);
}

Polynomial maclaurin_target(std::uint32_t p, std::uint32_t q, std::size_t n, SizeGuard guard) {
  require(n >= p && p >= q && q >= 1, "maclaurin needs n >= p >= q >= 1");
  return pow(elementary(q, n, guard), p) - pow(elementary(p, n, guard), q);
}

Polynomial maclaurin_lyapunov_target(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                                     std::size_t n, SizeGuard guard) {
  require(n >= p && p >= q && q >= r, "generalized maclaurin needs n >= p >= q >= r >= 0");
  return pow(elementary(q, n, guard), p - r) -
         pow(elementary(p, n, guard), q - r) * pow(elementary(r, n, guard), p - q);
}

Polynomial amgm_target(std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  Polynomial mean(n);
  ExpVec all_ones(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExpVec e(n);
    e.set(i, static_cast<ExpVec::value_type>(n));
    mean += Polynomial::monomial(std::move(e), ratio(1, static_cast<unsigned long>(n)));
    all_ones.set(i, 1);
  }
  return mean - Polynomial::monomial(std::move(all_ones));
}

Polynomial minkowski_target(std::size_t n, SizeGuard guard) {
  check_arity(n, guard, kMaxMinkowskiArity);
  const std::size_t m = 2 * n;
  const auto power = static_cast<ExpVec::value_type>(n);
  Polynomial lhs = Polynomial::constant(m, 1);
  ExpVec xs(m), ys(m);
  for (std::size_t i = 0; i < n; ++i) {
    ExpVec xe(m), ye(m);
    xe.set(i, power);
    ye.set(n + i, power);
    lhs *= Polynomial::monomial(std::move(xe)) + Polynomial::monomial(std::move(ye));
    xs.set(i, 1);
    ys.set(n + i, 1);
  }
  return lhs - pow(Polynomial::monomial(std::move(xs)) + Polynomial::monomial(std::move(ys)), n);
}

}  // namespace possum
