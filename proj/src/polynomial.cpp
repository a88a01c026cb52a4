#include "possum/polynomial.hpp"

#include <algorithm>
#include <string>

#include "possum/errors.hpp"

namespace possum {

namespace {

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) {
    throw InputError("polynomial arity mismatch: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
  }
}

// Sorts descending, merges duplicates, removes zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exps > b.exps; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exps == terms[i].exps) {
      terms[i].coeff += terms[j].coeff;
      ++j;
    }
    if (terms[i].coeff != 0) {
      terms[i].coeff.canonicalize();
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Rational rational_pow(const Rational& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw InputError("polynomial arity must be positive");
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  Polynomial p(arity);
  for (const auto& t : terms) {
    if (t.exps.arity() != arity) throw InputError("term arity does not match polynomial arity");
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  return monomial(ExpVec(arity), c);
}

Polynomial Polynomial::monomial(ExpVec exps, const Rational& c) {
  Polynomial p(exps.arity());
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t var) {
  if (var >= arity) throw InputError("variable index out of range");
  return monomial(ExpVec::unit(arity, var));
}

Rational Polynomial::coefficient(const ExpVec& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExpVec& key) { return t.exps > key; });
  return it != terms_.end() && it->exps == e ? it->coeff : Rational(0);
}

std::uint64_t Polynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().exps.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.front().exps.degree() == terms_.back().exps.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exps > b->exps)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps > a->exps) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({std::move(a->exps), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.exps + t.exps, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(a.arity(), std::move(products));
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    const Term& s = a.terms_[i];
    const Term& t = b.terms_[i];
    if (auto c = s.exps <=> t.exps; c != 0) return c;
    if (s.coeff != t.coeff) {
      return s.coeff < t.coeff ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return a.size() <=> b.size();
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& a, std::uint64_t e) {
  Polynomial result = Polynomial::constant(a.arity(), 1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial shift(const Polynomial& a, const ExpVec& by) {
  if (by.arity() != a.arity()) throw InputError("shift arity mismatch");
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({t.exps + by, t.coeff});
  return Polynomial::from_terms(a.arity(), std::move(terms));
}

Polynomial substitute_monomials(const Polynomial& a, std::span<const ExpVec> images) {
  if (images.size() != a.arity()) {
    throw InputError("substitution needs one image per variable: expected " +
                     std::to_string(a.arity()) + ", got " + std::to_string(images.size()));
  }
  if (images.empty()) throw InputError("empty substitution");
  const std::size_t target = images.front().arity();
  for (const auto& im : images) {
    if (im.arity() != target) throw InputError("substitution images differ in arity");
  }
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    ExpVec e(target);
    for (std::size_t j = 0; j < a.arity(); ++j) {
      if (t.exps[j] != 0) e += images[j].scaled(t.exps[j]);
    }
    terms.push_back({std::move(e), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial permute_variables(const Polynomial& a, std::span<const std::size_t> perm) {
  if (perm.size() != a.arity()) throw InputError("permutation length differs from arity");
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    std::vector<ExpVec::value_type> e(a.arity());
    for (std::size_t j = 0; j < a.arity(); ++j) e[perm[j]] = t.exps[j];
    terms.push_back({ExpVec(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(a.arity(), std::move(terms));
}

Rational evaluate(const Polynomial& a, std::span<const Rational> point) {
  if (point.size() != a.arity()) {
    throw InputError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has arity " + std::to_string(a.arity()));
  }
  Rational sum = 0;
  for (const auto& t : a.terms()) {
    Rational value = t.coeff;
    for (std::size_t j = 0; j < a.arity() && value != 0; ++j) {
      if (t.exps[j] != 0) value *= rational_pow(point[j], t.exps[j]);
    }
    sum += value;
  }
  return sum;
}

}  // namespace possum
