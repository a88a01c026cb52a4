#include "possum/job.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>
#include <utility>

#include "possum/certificate_io.hpp"
#include "possum/errors.hpp"
#include "possum/generators.hpp"
#include "possum/verify.hpp"

namespace possum {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilies{{
    {Family::muirhead, "muirhead"},
    {Family::powermean, "powermean"},
    {Family::lyapunov, "lyapunov"},
    {Family::maclaurin, "maclaurin"},
    {Family::maclaurin_general, "maclaurin-general"},
    {Family::minkowski, "minkowski"},
    {Family::amgm, "amgm"},
}};

SizeGuard guard_of(const JobSpec& job) {
  return job.allow_large ? SizeGuard::allow_large : SizeGuard::enforce;
}

std::pair<Partition, Partition> partitions_of(const JobSpec& job) {
  if (!job.alpha || !job.beta) throw InputError("muirhead needs --alpha and --beta");
  if (job.alpha->length() != job.beta->length()) {
    throw InputError("--alpha and --beta must have the same number of parts");
  }
  if (job.n != 0 && job.n != job.alpha->length()) {
    throw InputError("--n disagrees with the length of --alpha");
  }
  return {*job.alpha, *job.beta};
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilies) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, n] : kFamilies) {
    if (n == name) return family;
  }
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  return std::nullopt;
}

std::string describe(const JobSpec& job) {
  std::string out(family_name(job.family));
  auto put = [&out](const char* key, std::uint64_t v) { out += " " + std::string(key) + "=" + std::to_string(v); };
  switch (job.family) {
    case Family::muirhead:
      out += " alpha=" + (job.alpha ? job.alpha->to_string() : std::string("?"));
      out += " beta=" + (job.beta ? job.beta->to_string() : std::string("?"));
      break;
    case Family::powermean:
    case Family::maclaurin:
      put("n", job.n);
      put("p", job.p);
      put("q", job.q);
      break;
    case Family::lyapunov:
    case Family::maclaurin_general:
      put("n", job.n);
      put("p", job.p);
      put("q", job.q);
      put("r", job.r);
      break;
    case Family::minkowski:
    case Family::amgm:
      put("n", job.n);
      break;
  }
  return out;
}

Certificate generate(const JobSpec& job) {
  const SizeGuard guard = guard_of(job);
  switch (job.family) {
    case Family::muirhead: {
      auto [alpha, beta] = partitions_of(job);
      return muirhead(alpha, beta, guard);
    }
    case Family::powermean:
      return power_mean(job.p, job.q, job.n, guard);
    case Family::lyapunov:
      return lyapunov(job.p, job.q, job.r, job.n, guard);
    case Family::maclaurin:
      return maclaurin(job.p, job.q, job.n, guard);
    case Family::maclaurin_general:
      return maclaurin_lyapunov(job.p, job.q, job.r, job.n, guard);
    case Family::minkowski:
      return minkowski(job.n, guard);
    case Family::amgm:
      return amgm(job.n, guard);
  }
  throw InputError("unknown family");
}

Polynomial build_target(const JobSpec& job) {
  const SizeGuard guard = guard_of(job);
  switch (job.family) {
    case Family::muirhead: {
      auto [alpha, beta] = partitions_of(job);
      if (!dominates(alpha, beta)) {
        throw DomainError(alpha.to_string() + " does not dominate " + beta.to_string());
      }
      return muirhead_target(alpha, beta, guard);
    }
    case Family::powermean:
      check_arity(job.n, guard);
      return power_mean_target(job.p, job.q, job.n, guard);
    case Family::lyapunov:
      check_arity(job.n, guard);
      return lyapunov_target(job.p, job.q, job.r, job.n, guard);
    case Family::maclaurin:
      check_arity(job.n, guard);
      return maclaurin_target(job.p, job.q, job.n, guard);
    case Family::maclaurin_general:
      check_arity(job.n, guard);
      return maclaurin_lyapunov_target(job.p, job.q, job.r, job.n, guard);
    case Family::minkowski:
      return minkowski_target(job.n, guard);
    case Family::amgm:
      return amgm_target(job.n, guard);
  }
  throw InputError("unknown family");
}

RunResult run(const JobSpec& job) {
  RunResult result;
  std::optional<Certificate> cert;
  std::optional<Polynomial> target;
  try {
    cert = generate(job);
    target = build_target(job);
  } catch (const InputError& e) {
    return {kExitInvalidInput, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitInvalidInput, "", std::string("invalid input: ") + e.what() + "\n"};
  }

  const VerificationReport report = verify(*cert, *target, job.samples, job.seed);
  const bool ok = report.exact_match && report.samples_agree && report.min_sample_value >= 0;
  result.exit_code = ok ? kExitVerified : kExitVerificationFailed;
  result.diagnostics = describe(job) + ": " + std::to_string(cert->size()) + " atoms\n" + to_text(report);

  switch (job.format) {
    case OutputFormat::text:
      result.output = "# " + describe(job) + "\n# arity " + std::to_string(cert->arity()) + ", " +
                      std::to_string(cert->size()) + " atoms\n" + to_text(*cert) + "# " +
                      (ok ? "verified: exact match" : "VERIFICATION FAILED") + ", " +
                      std::to_string(report.samples_checked) + " samples, min value " +
                      to_string(report.min_sample_value) + "\n";
      break;
    case OutputFormat::json:
      result.output = to_json(*cert);
      break;
    case OutputFormat::latex:
      result.output = "% " + describe(job) + "\n" + to_latex(*cert);
      break;
  }
  return result;
}

RunResult run_verify(std::string_view certificate_json, const Polynomial& target,
                     std::size_t samples, std::uint64_t seed) {
  std::optional<Certificate> cert;
  std::optional<VerificationReport> report;
  try {
    cert = certificate_from_json(certificate_json);
    report = verify(*cert, target, samples, seed);
  } catch (const InputError& e) {
    return {kExitInvalidInput, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitInvalidInput, "", std::string("invalid input: ") + e.what() + "\n"};
  }
  const bool ok = report->exact_match && report->min_sample_value >= 0;
  return {ok ? kExitVerified : kExitVerificationFailed, to_text(*report), ""};
}

std::vector<JobSpec> acceptance_grid() {
  std::vector<JobSpec> jobs;
  auto add = [&jobs](Family f, std::size_t n, std::uint32_t p, std::uint32_t q, std::uint32_t r) {
    JobSpec job;
    job.family = f;
    job.n = n;
    job.p = p;
    job.q = q;
    job.r = r;
    jobs.push_back(std::move(job));
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t d = 0; d <= 6; ++d) {
      const auto parts = all_partitions(d, n);
      for (const auto& a : parts) {
        for (const auto& b : parts) {
          if (!dominates(a, b)) continue;
          JobSpec job;
          job.family = Family::muirhead;
          job.n = n;
          job.alpha = a;
          job.beta = b;
          jobs.push_back(std::move(job));
        }
      }
    }
  }
  for (std::size_t n : {2, 3, 4}) {
    for (std::uint32_t p = 1; p <= 5; ++p) {
      for (std::uint32_t q = 1; q <= p; ++q) add(Family::powermean, n, p, q, 0);
    }
  }
  for (std::size_t n : {2, 3}) {
    for (std::uint32_t p = 0; p <= 5; ++p) {
      for (std::uint32_t q = 0; q <= p; ++q) {
        for (std::uint32_t r = 0; r <= q; ++r) add(Family::lyapunov, n, p, q, r);
      }
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint32_t p = 1; p <= n; ++p) {
      for (std::uint32_t q = 1; q <= p; ++q) add(Family::maclaurin, n, p, q, 0);
    }
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint32_t p = 0; p <= n; ++p) {
      for (std::uint32_t q = 0; q <= p; ++q) {
        for (std::uint32_t r = 0; r <= q; ++r) add(Family::maclaurin_general, n, p, q, r);
      }
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) add(Family::minkowski, n, 0, 0, 0);
  return jobs;
}

std::vector<RunResult> run_all(std::span<const JobSpec> jobs, unsigned threads) {
  std::vector<RunResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run(jobs[i]);
  };
  const unsigned count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

}  // namespace possum
