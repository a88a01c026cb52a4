#include "possum/certificate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "possum/errors.hpp"

namespace possum {

namespace {

void require_same_arity(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("certificate arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

std::strong_ordering atom_order(const Atom& a, const Atom& b) {
  if (auto c = a.root() <=> b.root(); c != 0) return c;
  return a.multiplier() <=> b.multiplier();
}

}  // namespace

std::optional<Atom> Atom::make(Rational coeff, Polynomial root, ExpVec multiplier) {
  if (multiplier.arity() != root.arity()) throw InputError("atom multiplier arity mismatch");
  coeff.canonicalize();
  if (!multiplier.is_squarefree()) throw InputError("atom multiplier must be squarefree");
  if (coeff < 0) throw DomainError("atom coefficient must be nonnegative, got " + to_string(coeff));
  if (coeff == 0 || root.is_zero()) return std::nullopt;
  const Rational lead = root.leading().coeff;
  if (lead != 1) {
    coeff *= lead * lead;
    root *= Rational(1 / lead);
  }
  return Atom(std::move(coeff), std::move(root), std::move(multiplier));
}

Polynomial Atom::value() const {
  return shift(root_ * root_, multiplier_) * coeff_;
}

Certificate::Certificate(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw InputError("certificate arity must be positive");
}

Certificate::Certificate(std::size_t arity, std::vector<Atom> atoms) : Certificate(arity) {
  for (const auto& a : atoms) require_same_arity(arity, a.arity());
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return atom_order(a, b) < 0; });
  for (auto& a : atoms) {
    if (!atoms_.empty() && atom_order(atoms_.back(), a) == 0) {
      atoms_.back().coeff_ += a.coeff_;
    } else {
      atoms_.push_back(std::move(a));
    }
  }
}

Certificate one(std::size_t arity) { return square(Polynomial::constant(arity, 1)); }

Certificate square(const Polynomial& root) {
  std::vector<Atom> atoms;
  if (auto a = Atom::make(1, root, ExpVec(root.arity()))) atoms.push_back(std::move(*a));
  return Certificate(root.arity(), std::move(atoms));
}

Polynomial expand(const Certificate& c) {
  std::vector<Term> terms;
  for (const auto& atom : c.atoms()) {
    const Polynomial sq = atom.root() * atom.root();
    for (const auto& t : sq.terms()) {
      terms.push_back({t.exps + atom.multiplier(), t.coeff * atom.coeff()});
    }
  }
  return Polynomial::from_terms(c.arity(), std::move(terms));
}

Certificate cert_add(const Certificate& a, const Certificate& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Atom> atoms(a.atoms().begin(), a.atoms().end());
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return Certificate(a.arity(), std::move(atoms));
}

Certificate cert_sum(std::size_t arity, std::span<const Certificate> parts) {
  std::vector<Atom> atoms;
  for (const auto& part : parts) {
    require_same_arity(arity, part.arity());
    atoms.insert(atoms.end(), part.atoms().begin(), part.atoms().end());
  }
  return Certificate(arity, std::move(atoms));
}

Certificate cert_mul(const Certificate& a, const Certificate& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Atom> atoms;
  atoms.reserve(a.size() * b.size());
  for (const auto& s : a.atoms()) {
    for (const auto& t : b.atoms()) {
      auto [half, residue] = split_even(s.multiplier() + t.multiplier());
      auto atom = Atom::make(s.coeff() * t.coeff(), shift(s.root() * t.root(), half),
                             std::move(residue));
      if (atom) atoms.push_back(std::move(*atom));
    }
  }
  return Certificate(a.arity(), std::move(atoms));
}

Certificate cert_scale(const Certificate& c, const Rational& factor) {
  std::vector<Atom> atoms;
  for (const auto& a : c.atoms()) {
    if (auto scaled = Atom::make(a.coeff() * factor, a.root(), a.multiplier())) {
      atoms.push_back(std::move(*scaled));
    }
  }
  return Certificate(c.arity(), std::move(atoms));
}

Certificate cert_pow(const Certificate& c, std::uint64_t e) {
  Certificate result = one(c.arity());
  for (std::uint64_t i = 0; i < e; ++i) result = cert_mul(result, c);
  return result;
}

Certificate from_nonneg(const Polynomial& p) {
  std::vector<Atom> atoms;
  atoms.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.coeff < 0) {
      throw DomainError("polynomial has a negative coefficient: " + to_string(t.coeff));
    }
    auto [half, residue] = split_even(t.exps);
    atoms.push_back(*Atom::make(t.coeff, Polynomial::monomial(std::move(half)), std::move(residue)));
  }
  return Certificate(p.arity(), std::move(atoms));
}

Certificate cert_reynolds(const Certificate& c, SizeGuard guard) {
  check_arity(c.arity(), guard);
  const auto perms = permutations(c.arity());
  const Rational share = 1 / factorial(c.arity());
  std::vector<Atom> atoms;
  atoms.reserve(perms.size() * c.size());
  for (const auto& perm : perms) {
    for (const auto& a : c.atoms()) {
      std::vector<ExpVec::value_type> mult(c.arity());
      for (std::size_t j = 0; j < c.arity(); ++j) mult[perm[j]] = a.multiplier()[j];
      atoms.push_back(*Atom::make(a.coeff() * share, permute_variables(a.root(), perm),
                                  ExpVec(std::move(mult))));
    }
  }
  return Certificate(c.arity(), std::move(atoms));
}

Certificate cert_substitute(const Certificate& c, std::span<const ExpVec> images) {
  if (images.size() != c.arity()) {
    throw InputError("substitution needs one image per variable: expected " +
                     std::to_string(c.arity()) + ", got " + std::to_string(images.size()));
  }
  const std::size_t target = images.front().arity();
  std::vector<Atom> atoms;
  for (const auto& a : c.atoms()) {
    ExpVec image(target);
    for (std::size_t j = 0; j < c.arity(); ++j) {
      if (a.multiplier()[j]) image += images[j];
    }
    auto [half, residue] = split_even(image);
    auto atom = Atom::make(a.coeff(), shift(substitute_monomials(a.root(), images), half),
                           std::move(residue));
    if (atom) atoms.push_back(std::move(*atom));
  }
  return Certificate(target, std::move(atoms));
}

Polynomial expand(const SosDecomposition& sos) {
  Polynomial sum(sos.arity);
  for (const auto& t : sos.terms) sum += t.root * t.root * t.coeff;
  return sum;
}

SosDecomposition s_to_sos(const Certificate& c) {
  std::vector<ExpVec> squares;
  for (std::size_t j = 0; j < c.arity(); ++j) squares.push_back(ExpVec::unit(c.arity(), j).scaled(2));
  SosDecomposition sos{c.arity(), {}};
  for (const auto& a : c.atoms()) {
    sos.terms.push_back({a.coeff(), shift(substitute_monomials(a.root(), squares), a.multiplier())});
  }
  return sos;
}

Certificate sos_to_s(const SosDecomposition& sos, std::size_t arity) {
  require_same_arity(sos.arity, arity);
  for (const auto& t : sos.terms) {
    require_same_arity(t.root.arity(), arity);
    if (t.coeff <= 0) throw DomainError("sum of squares coefficients must be positive");
  }
  const Polynomial value = expand(sos);
  for (const auto& t : value.terms()) {
    if (!split_even(t.exps).residue.is_zero()) {
      throw DomainError("sum of squares is not a polynomial in the squared variables");
    }
  }
  std::vector<Atom> atoms;
  for (const auto& t : sos.terms) {
    std::map<ExpVec, std::vector<Term>> classes;
    for (const auto& term : t.root.terms()) {
      auto [half, residue] = split_even(term.exps);
      classes[std::move(residue)].push_back({std::move(half), term.coeff});
    }
    for (auto& [residue, terms] : classes) {
      auto atom = Atom::make(t.coeff, Polynomial::from_terms(arity, std::move(terms)), residue);
      if (atom) atoms.push_back(std::move(*atom));
    }
  }
  return Certificate(arity, std::move(atoms));
}

}  // namespace possum
