#include <doctest.h>

#include "possum/certificate_io.hpp"
#include "possum/errors.hpp"
#include "possum/generators.hpp"
#include "possum/job.hpp"
#include "possum/verify.hpp"

using namespace possum;

namespace {

Polynomial P(const char* text, std::size_t arity) { return parse_polynomial(text, arity); }

JobSpec job(Family f, std::size_t n, std::uint32_t p = 0, std::uint32_t q = 0, std::uint32_t r = 0) {
  JobSpec j;
  j.family = f;
  j.n = n;
  j.p = p;
  j.q = q;
  j.r = r;
  return j;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("exact comparison") {
    const Polynomial target = P("1/2 x1^2 + 1/2 x2^2 - x1 x2", 2);
    const auto ok = verify(amgm(2), target, 20, 0);
    CHECK(ok.exact_match);
    CHECK(ok.difference.is_zero());
    CHECK(ok.samples_checked == 20);
    CHECK(ok.samples_agree);
    CHECK(ok.min_sample_value >= 0);

    const auto bad = verify(amgm(2), target + P("1/1000 x1 x2", 2), 20, 0);
    CHECK_FALSE(bad.exact_match);
    CHECK(bad.difference == P("1/1000 x1 x2", 2));
    CHECK_FALSE(bad.samples_agree);

    const auto empty = verify(Certificate(3), Polynomial(3), 5, 1);
    CHECK(empty.exact_match);
    CHECK(empty.min_sample_value == 0);

    const auto none = verify(amgm(2), target, 0, 0);
    CHECK(none.samples_checked == 0);
    CHECK(none.min_sample_value == 0);

    CHECK_THROWS_AS(verify(amgm(2), Polynomial(3), 1, 0), InputError);
  }

  TEST_CASE("sample points are seeded, nonnegative and bounded") {
    const auto a = sample_points(3, 50, 42);
    CHECK(a == sample_points(3, 50, 42));
    CHECK(a != sample_points(3, 50, 43));
    for (const auto& pt : a) {
      REQUIRE(pt.size() == 3);
      for (const auto& v : pt) {
        CHECK(v >= 0);
        CHECK(v <= 100);
      }
    }
  }

  TEST_CASE("run exit codes and formats") {
    JobSpec pm = job(Family::powermean, 2, 2, 1);
    const RunResult text = run(pm);
    CHECK(text.exit_code == kExitVerified);
    CHECK(text.output.find("1/4 * (x1 - x2)^2") != std::string::npos);
    CHECK(text.output.find("verified: exact match") != std::string::npos);

    pm.format = OutputFormat::json;
    const RunResult js = run(pm);
    CHECK(js.exit_code == kExitVerified);
    CHECK(expand(certificate_from_json(js.output)) == Rational(1, 4) * pow(P("x1 - x2", 2), 2));
    CHECK(run(pm).output == js.output);

    pm.format = OutputFormat::latex;
    CHECK(run(pm).output.find("\\[") != std::string::npos);

    CHECK(run(job(Family::minkowski, 9)).exit_code == kExitInvalidInput);
    CHECK(run(job(Family::maclaurin, 3, 4, 2)).exit_code == kExitInvalidInput);

    JobSpec mu;
    mu.family = Family::muirhead;
    mu.alpha = parse_partition("2,2,0");
    mu.beta = parse_partition("3,1,0");
    CHECK(run(mu).exit_code == kExitInvalidInput);
    mu.beta.reset();
    CHECK(run(mu).exit_code == kExitInvalidInput);
  }

  TEST_CASE("run_verify") {
    JobSpec am = job(Family::amgm, 3);
    am.format = OutputFormat::json;
    const RunResult exported = run(am);
    REQUIRE(exported.exit_code == kExitVerified);
    CHECK(run_verify(exported.output, build_target(am), 20, 0).exit_code == kExitVerified);
    CHECK(run_verify(exported.output, build_target(am) + P("x1", 3), 20, 0).exit_code ==
          kExitVerificationFailed);
    CHECK(run_verify("not json", build_target(am), 20, 0).exit_code == kExitInvalidInput);
    CHECK(run_verify(exported.output, Polynomial(2), 20, 0).exit_code == kExitInvalidInput);
  }

  TEST_CASE("family and format names") {
    for (Family f : {Family::muirhead, Family::powermean, Family::lyapunov, Family::maclaurin,
                     Family::maclaurin_general, Family::minkowski, Family::amgm}) {
      CHECK(parse_family(family_name(f)) == f);
    }
    CHECK(family_name(Family::maclaurin_general) == "maclaurin-general");
    CHECK_FALSE(parse_family("newton"));
    CHECK(parse_format("latex") == OutputFormat::latex);
    CHECK_FALSE(parse_format("xml"));
  }

  TEST_CASE("run_all is independent of thread count") {
    std::vector<JobSpec> jobs;
    for (const auto& j : acceptance_grid()) {
      if (j.family == Family::muirhead && j.n > 3) continue;
      if (j.family == Family::minkowski && j.n > 2) continue;
      if (j.n > 3) continue;
      jobs.push_back(j);
      jobs.back().format = OutputFormat::json;
    }
    REQUIRE(jobs.size() > 50);
    const auto one = run_all(jobs, 1);
    const auto four = run_all(jobs, 4);
    REQUIRE(one.size() == jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      CHECK(one[i].exit_code == kExitVerified);
      CHECK(one[i].output == four[i].output);
    }
  }
}
