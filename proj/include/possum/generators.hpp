#pragma once

#include <cstddef>
#include <cstdint>

#include "possum/certificate.hpp"
#include "possum/partitions.hpp"
#include "possum/polynomial.hpp"

namespace possum {

/// Largest n accepted by minkowski without SizeGuard::allow_large. The
/// result lives in 2n variables.
inline constexpr std::size_t kMaxMinkowskiArity = 5;

// Every generator below returns a certificate whose expansion is exactly the
// matching *_target polynomial. Parameter violations throw InputError;
// non-comparable partitions throw DomainError.

/// [alpha] - [beta] for a single unit move alpha -> beta at positions k < l:
/// half the symmetrization of
///   (x_k - x_l)^2 * sum_{j=alpha_l}^{alpha_k-2} x_k^j x_l^(alpha_k+alpha_l-2-j)
///   * prod_{i != k,l} x_i^alpha_i.
Certificate muirhead_step(const Partition& alpha, const Partition& beta,
                          SizeGuard guard = SizeGuard::enforce);

/// [alpha] - [beta] for alpha dominating beta, summed over the steps of
/// find_chain(alpha, beta).
Certificate muirhead(const Partition& alpha, const Partition& beta,
                     SizeGuard guard = SizeGuard::enforce);

/// P_{i-1} P_{k+1} - P_i P_k for 1 <= i <= k:
///   (n-1)/(2n) * R((x1 - x2)^2 * sum_{j=i-1}^{k-1} x1^j x2^(i+k-2-j)).
Certificate p_product_gap(std::uint32_t i, std::uint32_t k, std::size_t n,
                          SizeGuard guard = SizeGuard::enforce);

/// Weight a_r of the step [beta_(r+1)] - [beta_(r)] in the E-product gap,
/// binom(n,i)^-1 binom(k,r) binom(n-1-k, i-1-r) (k+1-i)/i, where
/// beta_(r) = (2^r, 1^(i+k-2r), 0^(n-i-k+r)).
Rational e_gap_weight(std::uint32_t i, std::uint32_t k, std::size_t n, std::uint32_t r);

/// E_i E_k - E_{i-1} E_{k+1} for 1 <= i <= k <= n-1, as the a_r-weighted sum
/// of muirhead steps beta_(r+1) -> beta_(r), r = 0..i-1.
Certificate e_product_gap(std::uint32_t i, std::uint32_t k, std::size_t n,
                          SizeGuard guard = SizeGuard::enforce);

/// P_p^q - P_q^p for p >= q >= 1.
Certificate power_mean(std::uint32_t p, std::uint32_t q, std::size_t n,
                       SizeGuard guard = SizeGuard::enforce);

/// P_p^(q-r) P_r^(p-q) - P_q^(p-r) for p >= q >= r >= 0.
Certificate lyapunov(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::size_t n,
                     SizeGuard guard = SizeGuard::enforce);

/// E_q^p - E_p^q for n >= p >= q >= 1.
Certificate maclaurin(std::uint32_t p, std::uint32_t q, std::size_t n,
                      SizeGuard guard = SizeGuard::enforce);

/// E_q^(p-r) - E_p^(q-r) E_r^(p-q) for n >= p >= q >= r >= 0.
Certificate maclaurin_lyapunov(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::size_t n,
                               SizeGuard guard = SizeGuard::enforce);

/// (x1^n + ... + xn^n)/n - x1...xn, i.e. muirhead((n,0,...,0), (1,...,1)).
Certificate amgm(std::size_t n, SizeGuard guard = SizeGuard::enforce);

/// prod_i (x_i^n + y_i^n) - (prod_i x_i + prod_i y_i)^n in 2n variables
/// ordered x1..xn, y1..yn.
Certificate minkowski(std::size_t n, SizeGuard guard = SizeGuard::enforce);

// Target polynomials, built directly from the symmetric functions and the
// defining products.

Polynomial muirhead_target(const Partition& alpha, const Partition& beta,
                           SizeGuard guard = SizeGuard::enforce);
Polynomial p_product_gap_target(std::uint32_t i, std::uint32_t k, std::size_t n,
                                SizeGuard guard = SizeGuard::enforce);
Polynomial e_product_gap_target(std::uint32_t i, std::uint32_t k, std::size_t n,
                                SizeGuard guard = SizeGuard::enforce);
Polynomial power_mean_target(std::uint32_t p, std::uint32_t q, std::size_t n,
                             SizeGuard guard = SizeGuard::enforce);
Polynomial lyapunov_target(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::size_t n,
                           SizeGuard guard = SizeGuard::enforce);
Polynomial maclaurin_target(std::uint32_t p, std::uint32_t q, std::size_t n,
                            SizeGuard guard = SizeGuard::enforce);
Polynomial maclaurin_lyapunov_target(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                                     std::size_t n, SizeGuard guard = SizeGuard::enforce);
Polynomial amgm_target(std::size_t n, SizeGuard guard = SizeGuard::enforce);
Polynomial minkowski_target(std::size_t n, SizeGuard guard = SizeGuard::enforce);

}  // namespace possum
