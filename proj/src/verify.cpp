#include "possum/verify.hpp"

#include <random>

#include "possum/errors.hpp"

namespace possum {

std::vector<std::vector<Rational>> sample_points(std::size_t arity, std::size_t count,
                                                 std::uint64_t seed) {
  // mt19937_64 output is fixed by the standard; the distributions are not,
  // so the ranges are reduced by hand.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> points(count);
  for (auto& point : points) {
    point.reserve(arity);
    for (std::size_t j = 0; j < arity; ++j) {
      const auto num = static_cast<unsigned long>(rng() % 101);
      const auto den = static_cast<unsigned long>(rng() % 10 + 1);
      Rational v(num, den);
      v.canonicalize();
      point.push_back(std::move(v));
    }
  }
  return points;
}

VerificationReport verify(const Certificate& c, const Polynomial& target, std::size_t samples,
                          std::uint64_t seed) {
  if (c.arity() != target.arity()) {
    throw InputError("certificate arity " + std::to_string(c.arity()) +
                     " differs from target arity " + std::to_string(target.arity()));
  }
  VerificationReport report;
  const Polynomial expansion = expand(c);
  report.difference = target - expansion;
  report.exact_match = report.difference.is_zero();
  bool first = true;
  for (const auto& point : sample_points(c.arity(), samples, seed)) {
    const Rational value = evaluate(expansion, point);
    if (value != evaluate(target, point)) report.samples_agree = false;
    if (first || value < report.min_sample_value) report.min_sample_value = value;
    first = false;
    ++report.samples_checked;
  }
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::string out;
  out += std::string("exact match: ") + (report.exact_match ? "yes" : "no") + "\n";
  if (!report.exact_match) out += "difference (target - certificate): " + to_text(report.difference) + "\n";
  out += "samples checked: " + std::to_string(report.samples_checked) + "\n";
  out += "min sample value: " + to_string(report.min_sample_value) + "\n";
  out += std::string("samples agree: ") + (report.samples_agree ? "yes" : "no") + "\n";
  return out;
}

}  // namespace possum
