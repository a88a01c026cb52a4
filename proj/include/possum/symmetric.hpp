#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "possum/partitions.hpp"
#include "possum/polynomial.hpp"

namespace possum {

/// Symmetrization and the minkowski subset sums grow combinatorially in the
/// number of variables; operations refuse arities above the limit unless
/// called with SizeGuard::allow_large.
enum class SizeGuard { enforce, allow_large };

inline constexpr std::size_t kMaxArity = 8;

/// Throws InputError if n exceeds `limit` and the guard is enforced.
void check_arity(std::size_t n, SizeGuard guard, std::size_t limit = kMaxArity);

/// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// Average of f over all permutations of its variables. Each term is spread
/// over the distinct rearrangements of its exponent vector, which equals the
/// n!-term average.
Polynomial reynolds(const Polynomial& f, SizeGuard guard = SizeGuard::enforce);

/// [alpha]: the Reynolds average of x^alpha.
Polynomial monomial_symmetric(const Partition& alpha, SizeGuard guard = SizeGuard::enforce);

/// P_k = (x1^k + ... + xn^k) / n. P_0 = 1.
Polynomial power_sum(std::uint32_t k, std::size_t n, SizeGuard guard = SizeGuard::enforce);

/// E_k = binom(n,k)^-1 * e_k(x1..xn). E_0 = 1. Throws InputError for k > n.
Polynomial elementary(std::uint32_t k, std::size_t n, SizeGuard guard = SizeGuard::enforce);

}  // namespace possum
