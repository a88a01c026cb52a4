#include "possum/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "possum/errors.hpp"

namespace possum {

void check_arity(std::size_t n, SizeGuard guard, std::size_t limit) {
  if (n == 0) throw InputError("arity must be positive");
  if (guard == SizeGuard::enforce && n > limit) {
    throw InputError("arity " + std::to_string(n) + " exceeds the limit of " +
                     std::to_string(limit) + " (allow-large overrides)");
  }
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Polynomial reynolds(const Polynomial& f, SizeGuard guard) {
  check_arity(f.arity(), guard);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto e = std::vector<ExpVec::value_type>(t.exps.values().begin(), t.exps.values().end());
    std::sort(e.begin(), e.end());
    std::vector<ExpVec> orbit;
    do {
      orbit.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    const Rational share = t.coeff / Rational(static_cast<unsigned long>(orbit.size()));
    for (auto& image : orbit) terms.push_back({std::move(image), share});
  }
  return Polynomial::from_terms(f.arity(), std::move(terms));
}

Polynomial monomial_symmetric(const Partition& alpha, SizeGuard guard) {
  return reynolds(Polynomial::monomial(alpha.exponents()), guard);
}

Polynomial power_sum(std::uint32_t k, std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  std::vector<Partition::value_type> parts(n, 0);
  parts[0] = k;
  return monomial_symmetric(Partition(std::move(parts)), guard);
}

Polynomial elementary(std::uint32_t k, std::size_t n, SizeGuard guard) {
  check_arity(n, guard);
  if (k > n) {
    throw InputError("E_" + std::to_string(k) + " undefined for " + std::to_string(n) + " variables");
  }
  std::vector<Partition::value_type> parts(n, 0);
  std::fill_n(parts.begin(), k, 1U);
  return monomial_symmetric(Partition(std::move(parts)), guard);
}

}  // namespace possum
