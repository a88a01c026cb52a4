#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "possum/polynomial.hpp"
#include "possum/symmetric.hpp"

namespace possum {

/// One generator of the nonnegative-orthant semiring: coeff * root^2 * x^multiplier.
///
/// Canonical form: coeff > 0, root nonzero with graded-lex leading
/// coefficient exactly 1 (any scale or sign of the root is moved into
/// coeff), multiplier squarefree. Every such atom is nonnegative whenever
/// all variables are.
class Atom {
 public:
  /// Canonicalizes. Returns nullopt for a zero-valued atom (coeff == 0 or
  /// root == 0). Throws DomainError for a negative coeff and InputError for
  /// a non-squarefree multiplier or mismatched arities.
  static std::optional<Atom> make(Rational coeff, Polynomial root, ExpVec multiplier);

  const Rational& coeff() const noexcept { return coeff_; }
  const Polynomial& root() const noexcept { return root_; }
  const ExpVec& multiplier() const noexcept { return multiplier_; }
  std::size_t arity() const noexcept { return root_.arity(); }

  /// coeff * root^2 * x^multiplier, expanded.
  Polynomial value() const;

  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  friend class Certificate;

  Atom(Rational coeff, Polynomial root, ExpVec multiplier)
      : coeff_(std::move(coeff)), root_(std::move(root)), multiplier_(std::move(multiplier)) {}

  Rational coeff_;
  Polynomial root_;
  ExpVec multiplier_;
};

/// A finite sum of atoms: an explicit witness that its expansion lies in the
/// semiring generated by the variables and by squares of polynomials.
///
/// Atoms are kept normalized: atoms with the same (root, multiplier) are
/// merged by adding coefficients and the list is sorted, so equal
/// certificates built along different routes compare equal.
class Certificate {
 public:
  explicit Certificate(std::size_t arity);
  Certificate(std::size_t arity, std::vector<Atom> atoms);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  std::size_t arity_;
  std::vector<Atom> atoms_;
};

/// The certificate with the single atom 1 * 1^2.
Certificate one(std::size_t arity);
/// The single atom 1 * root^2 (empty certificate when root is zero).
Certificate square(const Polynomial& root);

Polynomial expand(const Certificate& c);

Certificate cert_add(const Certificate& a, const Certificate& b);
/// Sum of many certificates with a single normalization pass.
Certificate cert_sum(std::size_t arity, std::span<const Certificate> parts);
Certificate cert_mul(const Certificate& a, const Certificate& b);
/// Multiplies every coefficient by factor >= 0.
Certificate cert_scale(const Certificate& c, const Rational& factor);
Certificate cert_pow(const Certificate& c, std::uint64_t e);

/// Each term c * x^g of p becomes c * (x^(g/2))^2 * x^(g mod 2). Throws
/// DomainError if some coefficient is negative.
Certificate from_nonneg(const Polynomial& p);

/// Average of the certificate over all permutations of its variables,
/// permuting roots and multipliers together.
Certificate cert_reynolds(const Certificate& c, SizeGuard guard = SizeGuard::enforce);

/// Replaces x_j by the monomial images[j] in every atom. The image of a
/// multiplier is split into a square part (absorbed into the root) and a
/// squarefree residue; atoms whose root vanishes are dropped.
Certificate cert_substitute(const Certificate& c, std::span<const ExpVec> images);

struct SosTerm {
  Rational coeff;
  Polynomial root;

  friend bool operator==(const SosTerm&, const SosTerm&) = default;
};

/// sum coeff_i * root_i^2 with every coeff_i > 0.
struct SosDecomposition {
  std::size_t arity = 1;
  std::vector<SosTerm> terms;
};

Polynomial expand(const SosDecomposition& sos);

/// If c expands to p, the result expands to p(x1^2, ..., xn^2): each atom
/// coeff * g^2 * x^e maps to coeff * (g(x^2) * x^e)^2.
SosDecomposition s_to_sos(const Certificate& c);

/// Inverse direction: given a sum of squares q that is a polynomial in the
/// squares of the variables, q = p(x1^2, ..., xn^2), returns a certificate
/// expanding to p. Each root is split into parity classes of its exponents.
/// Throws DomainError when q has a monomial with an odd exponent.
Certificate sos_to_s(const SosDecomposition& sos, std::size_t arity);

}  // namespace possum
