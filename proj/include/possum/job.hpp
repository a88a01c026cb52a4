#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "possum/certificate.hpp"
#include "possum/partitions.hpp"
#include "possum/polynomial.hpp"

namespace possum {

enum class Family { muirhead, powermean, lyapunov, maclaurin, maclaurin_general, minkowski, amgm };
enum class OutputFormat { text, json, latex };

inline constexpr int kExitVerified = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

std::string_view family_name(Family f);
/// "muirhead", "powermean", "lyapunov", "maclaurin", "maclaurin-general",
/// "minkowski", "amgm".
std::optional<Family> parse_family(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);

/// One generator invocation. Only the parameters relevant to the family are
/// read; muirhead takes its arity from alpha.
struct JobSpec {
  Family family = Family::amgm;
  std::size_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint32_t r = 0;
  std::optional<Partition> alpha;
  std::optional<Partition> beta;
  OutputFormat format = OutputFormat::text;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  bool allow_large = false;
};

/// e.g. "powermean n=2 p=2 q=1"
std::string describe(const JobSpec& job);

/// Builds the certificate for the job. Throws InputError/DomainError when the
/// parameters violate the generator's preconditions.
Certificate generate(const JobSpec& job);

/// The polynomial the job's certificate must expand to, built directly from
/// the symmetric functions or the defining products.
Polynomial build_target(const JobSpec& job);

struct RunResult {
  int exit_code = kExitVerified;
  /// Rendered certificate (or verification report for run_verify).
  std::string output;
  /// Human readable notes for stderr.
  std::string diagnostics;
};

/// Generates, self-verifies against build_target, and renders.
/// Exit codes: 0 generated and verified, 1 verification failed, 2 invalid
/// parameters.
RunResult run(const JobSpec& job);

/// Checks an exported certificate against a target. Exit 0 on exact match
/// with no negative sample, 1 otherwise, 2 when the certificate cannot be
/// read.
RunResult run_verify(std::string_view certificate_json, const Polynomial& target,
                     std::size_t samples, std::uint64_t seed);

/// The generator parameter grid used for acceptance: every comparable
/// partition pair with d <= 6, n <= 5; power means 1 <= q <= p <= 5 with
/// n in {2,3,4}; lyapunov 0 <= r <= q <= p <= 5 with n in {2,3}; maclaurin
/// 1 <= q <= p <= n <= 6; generalized maclaurin 0 <= r <= q <= p <= n <= 5;
/// minkowski n in {1,2,3,4}.
std::vector<JobSpec> acceptance_grid();

/// Runs every job on `threads` workers. Results are in job order and do not
/// depend on the thread count.
std::vector<RunResult> run_all(std::span<const JobSpec> jobs, unsigned threads);

}  // namespace possum
