#include <cctype>
#include <string>

#include "possum/errors.hpp"
#include "possum/polynomial.hpp"

namespace possum {

namespace {

std::string monomial_text(const ExpVec& e) {
  std::string out;
  for (std::size_t j = 0; j < e.arity(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += " * ";
    out += "x" + std::to_string(j + 1);
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out;
}

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-'));
    }
    return Polynomial::from_terms(arity_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    Rational coeff = 1;
    ExpVec exps(arity_);
    bool any = false;
    while (true) {
      skip_space();
      if (any) {
        if (peek() == '*') {
          get();
          skip_space();
        } else if (peek() != 'x' && !std::isdigit(static_cast<unsigned char>(peek()))) {
          break;
        }
      }
      if (peek() == 'x') {
        get();
        const std::string index = digits();
        if (index.empty()) fail("expected a variable index after 'x'");
        const unsigned long var = std::stoul(index);
        if (var == 0 || var > arity_) fail("variable x" + index + " outside arity");
        unsigned long power = 1;
        skip_space();
        if (peek() == '^') {
          get();
          skip_space();
          const std::string e = digits();
          if (e.empty()) fail("expected an exponent after '^'");
          power = std::stoul(e);
        }
        exps.set(var - 1, exps[var - 1] + static_cast<ExpVec::value_type>(power));
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string number = digits();
        skip_space();
        if (peek() == '/') {
          get();
          skip_space();
          number += "/" + digits();
        }
        coeff *= parse_rational(number);
      } else {
        fail("expected a number or a variable");
      }
      any = true;
    }
    if (negative) coeff = -coeff;
    return {std::move(exps), std::move(coeff)};
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    return out;
  }

  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    if (t.exps.is_zero()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial_text(t.exps);
    } else {
      out += to_string(magnitude) + " * " + monomial_text(t.exps);
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  return PolynomialParser(text, arity).parse();
}

}  // namespace possum
