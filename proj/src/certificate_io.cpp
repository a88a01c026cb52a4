#include "possum/certificate_io.hpp"

#include <json.hpp>

#include "possum/errors.hpp"

namespace possum {

namespace {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (auto e : t.exps.values()) exps.push_back(e);
    terms.push_back(json::array({to_string(t.coeff), std::move(exps)}));
  }
  return terms;
}

ExpVec exps_from_json(const json& j, std::size_t arity, const char* what) {
  if (!j.is_array() || j.size() != arity) {
    throw InputError(std::string(what) + " must be an array of " + std::to_string(arity) + " integers");
  }
  std::vector<ExpVec::value_type> exps;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw InputError(std::string(what) + " entries must be nonnegative integers");
    exps.push_back(e.get<ExpVec::value_type>());
  }
  return ExpVec(std::move(exps));
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InputError("rationals must be JSON strings of the form \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Polynomial polynomial_from_json(const json& j, std::size_t arity) {
  if (!j.is_array()) throw InputError("\"square\" must be an array of [coeff, exponents] pairs");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw InputError("each term must be [coeff, exponents]");
    terms.push_back({exps_from_json(t[1], arity, "exponent vector"), rational_from_json(t[0])});
  }
  return Polynomial::from_terms(arity, std::move(terms));
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_monomial(const ExpVec& e) {
  std::string out;
  for (std::size_t j = 0; j < e.arity(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x_{" + std::to_string(j + 1) + "}";
    if (e[j] > 1) out += "^{" + std::to_string(e[j]) + "}";
  }
  return out;
}

std::string text_monomial(const ExpVec& e) {
  return to_text(Polynomial::monomial(e));
}

}  // namespace

std::string to_json(const Certificate& c) {
  json atoms = json::array();
  for (const auto& a : c.atoms()) {
    json mult = json::array();
    for (auto e : a.multiplier().values()) mult.push_back(e);
    atoms.push_back({{"coeff", to_string(a.coeff())},
                     {"square", polynomial_to_json(a.root())},
                     {"multiplier", std::move(mult)}});
  }
  json doc = {{"arity", c.arity()}, {"atoms", std::move(atoms)}};
  return doc.dump() + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("arity") || !doc.contains("atoms")) {
    throw InputError("certificate JSON needs \"arity\" and \"atoms\"");
  }
  if (!doc["arity"].is_number_unsigned() || doc["arity"].get<std::size_t>() == 0) {
    throw InputError("\"arity\" must be a positive integer");
  }
  const auto arity = doc["arity"].get<std::size_t>();
  if (!doc["atoms"].is_array()) throw InputError("\"atoms\" must be an array");
  std::vector<Atom> atoms;
  for (const auto& a : doc["atoms"]) {
    if (!a.is_object() || !a.contains("coeff") || !a.contains("square") || !a.contains("multiplier")) {
      throw InputError("each atom needs \"coeff\", \"square\" and \"multiplier\"");
    }
    const Rational coeff = rational_from_json(a["coeff"]);
    if (coeff <= 0) throw InputError("atom coefficients must be positive");
    ExpVec mult = exps_from_json(a["multiplier"], arity, "multiplier");
    if (!mult.is_squarefree()) throw InputError("multiplier entries must be 0 or 1");
    if (auto atom = Atom::make(coeff, polynomial_from_json(a["square"], arity), std::move(mult))) {
      atoms.push_back(std::move(*atom));
    }
  }
  return Certificate(arity, std::move(atoms));
}

std::string to_text(const Certificate& c) {
  if (c.empty()) return "0\n";
  std::string out;
  for (const auto& a : c.atoms()) {
    std::string line;
    if (a.coeff() != 1) line = to_string(a.coeff());
    if (a.root() != Polynomial::constant(c.arity(), 1)) {
      if (!line.empty()) line += " * ";
      line += "(" + to_text(a.root()) + ")^2";
    }
    if (!a.multiplier().is_zero()) {
      if (!line.empty()) line += " * ";
      line += text_monomial(a.multiplier());
    }
    if (line.empty()) line = "1";
    out += line + "\n";
  }
  return out;
}

std::string to_latex(const Polynomial& p) {
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
      out += latex_rational(magnitude);
    } else if (magnitude == 1) {
      out += latex_monomial(t.exps);
    } else {
      out += latex_rational(magnitude) + " " + latex_monomial(t.exps);
    }
  }
  return out;
}

std::string to_latex(const Certificate& c) {
  std::string out = "\\[\n";
  if (c.empty()) out += "0\n";
  bool first = true;
  for (const auto& a : c.atoms()) {
    std::string line = first ? "" : "+ ";
    first = false;
    line += latex_rational(a.coeff()) + "\\left(" + to_latex(a.root()) + "\\right)^2";
    if (!a.multiplier().is_zero()) line += " " + latex_monomial(a.multiplier());
    out += line + "\n";
  }
  return out + "\\]\n";
}

}  // namespace possum
