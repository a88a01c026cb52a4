#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "possum/exp_vec.hpp"
#include "possum/rational.hpp"

namespace possum {

struct Term {
  ExpVec exps;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables.
///
/// Terms are kept sorted by descending graded-lex order of their exponent
/// vectors and no stored coefficient is zero, so two polynomials are equal
/// exactly when their term sequences are equal. Arity is part of the value:
/// mixing arities in arithmetic throws InputError.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 1);

  /// Sums duplicate exponent vectors and drops zeros.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms);
  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial monomial(ExpVec exps, const Rational& c = 1);
  static Polynomial variable(std::size_t arity, std::size_t var);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Leading term in graded-lex order; the polynomial must be nonzero.
  const Term& leading() const { return terms_.front(); }
  Rational coefficient(const ExpVec& e) const;
  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
  /// Lexicographic comparison of the term sequences; used for canonical
  /// ordering of certificate atoms, not a mathematical order.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t arity_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, std::uint64_t e);

/// Multiplies every term by the monomial x^shift.
Polynomial shift(const Polynomial& a, const ExpVec& shift);

/// Replaces variable x_j by the monomial images[j]. All images share the
/// target arity, which becomes the arity of the result.
Polynomial substitute_monomials(const Polynomial& a, std::span<const ExpVec> images);

/// Renames variables: x_j becomes x_{perm[j]}. perm must be a permutation
/// of 0..arity-1.
Polynomial permute_variables(const Polynomial& a, std::span<const std::size_t> perm);

Rational evaluate(const Polynomial& a, std::span<const Rational> point);

/// Canonical text form, e.g. "1/2 * x1^2 - x1 * x2 + 1/2 * x2^2". The zero
/// polynomial prints as "0". parse_polynomial(to_text(p), p.arity()) == p.
std::string to_text(const Polynomial& p);

/// Accepts the canonical form plus free whitespace, optional "*" between
/// factors, repeated variables and an optional leading sign. Variables are
/// x1..x<arity>. Throws InputError on anything else.
Polynomial parse_polynomial(std::string_view text, std::size_t arity);

}  // namespace possum
