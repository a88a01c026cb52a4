#pragma once

#include <string>
#include <string_view>

#include "possum/certificate.hpp"

namespace possum {

/// {"arity": n, "atoms": [{"coeff": "p/q", "square": [["p/q", [e1, ...]], ...],
///   "multiplier": [0|1, ...]}]}
///
/// Rationals are written as "p" or "p/q" in lowest terms; terms of each
/// square root appear in descending graded-lex order. Output is compact and
/// byte-stable: to_json(from_json(to_json(c))) == to_json(c).
std::string to_json(const Certificate& c);

/// Throws InputError on schema violations (wrong arity of an exponent
/// vector, non-0/1 multiplier entries, nonpositive coefficients, bad
/// rationals, malformed JSON).
Certificate certificate_from_json(std::string_view text);

/// One atom per line: "1/4 * (x1 - x2)^2 * x3". "0" for an empty
/// certificate.
std::string to_text(const Certificate& c);

/// LaTeX rendering of a polynomial in variables x_{1}, x_{2}, ...
std::string to_latex(const Polynomial& p);

/// A display-math block with one atom per line,
/// \frac{p}{q}\left(g\right)^2 x_{i} ..., atoms joined by "+".
std::string to_latex(const Certificate& c);

}  // namespace possum
