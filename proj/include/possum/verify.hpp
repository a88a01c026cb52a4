#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "possum/certificate.hpp"
#include "possum/polynomial.hpp"

namespace possum {

struct VerificationReport {
  /// True iff difference is the zero polynomial.
  bool exact_match = false;
  /// target - expand(certificate).
  Polynomial difference;
  std::size_t samples_checked = 0;
  /// Smallest value of the expanded certificate over the sample points; 0
  /// when no samples were taken.
  Rational min_sample_value = 0;
  /// The expansion and the target agreed at every sample point.
  bool samples_agree = true;
};

/// `count` points in the closed nonnegative orthant with coordinates a/b,
/// a uniform in 0..100 and b uniform in 1..10, drawn from a 64-bit Mersenne
/// twister seeded with `seed`. Identical arguments give identical points
/// on every platform.
std::vector<std::vector<Rational>> sample_points(std::size_t arity, std::size_t count,
                                                 std::uint64_t seed);

/// Compares the expansion of c with target exactly, then evaluates both at
/// `samples` seeded points. Throws InputError on arity mismatch.
VerificationReport verify(const Certificate& c, const Polynomial& target, std::size_t samples,
                          std::uint64_t seed);

/// Multi-line human readable summary.
std::string to_text(const VerificationReport& report);

}  // namespace possum
