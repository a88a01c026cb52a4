#include "possum/rational.hpp"

#include <algorithm>
#include <cctype>

#include "possum/errors.hpp"

namespace possum {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(std::string(num), 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational ratio(long num, unsigned long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Rational factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

}  // namespace possum
