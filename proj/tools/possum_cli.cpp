// possum: build and check exact sum-of-squares style certificates for
// classical inequalities.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "possum/certificate_io.hpp"
#include "possum/errors.hpp"
#include "possum/job.hpp"

namespace {

using namespace possum;

struct CommonOptions {
  std::string format = "text";
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  bool allow_large = false;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  cmd->add_option("--samples", opts.samples, "Random nonnegative sample points");
  cmd->add_option("--seed", opts.seed, "Seed for the sample points");
  cmd->add_flag("--allow-large", opts.allow_large, "Lift the arity guard");
  cmd->add_option("--output", opts.output, "Write the result to FILE instead of stdout");
}

int emit(const RunResult& result, const std::string& output_path) {
  std::cerr << result.diagnostics;
  if (output_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output_path << "\n";
      return kExitInvalidInput;
    }
    out << result.output;
  }
  return result.exit_code;
}

std::optional<Partition> partition_or_empty(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_partition(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for classical inequalities on the nonnegative orthant"};
  app.require_subcommand(1);

  CommonOptions common;
  std::size_t n = 0;
  std::uint32_t p = 0, q = 0, r = 0;
  std::string alpha, beta;

  struct Generator {
    Family family;
    CLI::App* cmd;
  };
  std::vector<Generator> generators;
  auto generator = [&](Family family, const std::string& help) {
    auto* cmd = app.add_subcommand(std::string(family_name(family)), help);
    add_common(cmd, common);
    generators.push_back({family, cmd});
    return cmd;
  };

  auto* muir = generator(Family::muirhead, "[alpha] - [beta] for alpha dominating beta");
  muir->add_option("--alpha", alpha, "Comma-separated parts, e.g. 3,0,0")->required();
  muir->add_option("--beta", beta, "Comma-separated parts, e.g. 1,1,1")->required();

  auto* pm = generator(Family::powermean, "P_p^q - P_q^p");
  pm->add_option("--n", n)->required();
  pm->add_option("--p", p)->required();
  pm->add_option("--q", q)->required();

  auto* ly = generator(Family::lyapunov, "P_p^(q-r) P_r^(p-q) - P_q^(p-r)");
  ly->add_option("--n", n)->required();
  ly->add_option("--p", p)->required();
  ly->add_option("--q", q)->required();
  ly->add_option("--r", r)->required();

  auto* mac = generator(Family::maclaurin, "E_q^p - E_p^q");
  mac->add_option("--n", n)->required();
  mac->add_option("--p", p)->required();
  mac->add_option("--q", q)->required();

  auto* macg = generator(Family::maclaurin_general, "E_q^(p-r) - E_p^(q-r) E_r^(p-q)");
  macg->add_option("--n", n)->required();
  macg->add_option("--p", p)->required();
  macg->add_option("--q", q)->required();
  macg->add_option("--r", r)->required();

  generator(Family::amgm, "(x1^n + ... + xn^n)/n - x1...xn")->add_option("--n", n)->required();
  generator(Family::minkowski, "prod(x_i^n + y_i^n) - (prod x_i + prod y_i)^n")
      ->add_option("--n", n)
      ->required();

  auto* ver = app.add_subcommand("verify", "Check a JSON certificate against a target");
  std::string input, target_family, target_text;
  ver->add_option("--input", input, "Certificate JSON file")->required();
  auto* fam_opt = ver->add_option("--target-family", target_family, "Generator family of the target");
  auto* text_opt = ver->add_option("--target", target_text, "Target polynomial text");
  fam_opt->excludes(text_opt);
  ver->add_option("--n", n);
  ver->add_option("--p", p);
  ver->add_option("--q", q);
  ver->add_option("--r", r);
  ver->add_option("--alpha", alpha);
  ver->add_option("--beta", beta);
  ver->add_option("--samples", common.samples);
  ver->add_option("--seed", common.seed);
  ver->add_flag("--allow-large", common.allow_large);
  ver->add_option("--output", common.output);

  auto* grid = app.add_subcommand("grid", "Generate and verify the acceptance parameter grid");
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  grid->add_option("--threads", threads, "Worker threads");
  add_common(grid, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    JobSpec job;
    job.n = n;
    job.p = p;
    job.q = q;
    job.r = r;
    job.format = *parse_format(common.format);
    job.samples = common.samples;
    job.seed = common.seed;
    job.allow_large = common.allow_large;

    for (const auto& g : generators) {
      if (!g.cmd->parsed()) continue;
      job.family = g.family;
      if (g.family == Family::muirhead) {
        job.alpha = parse_partition(alpha);
        job.beta = parse_partition(beta);
      }
      return emit(run(job), common.output);
    }

    if (ver->parsed()) {
      if (target_family.empty() == target_text.empty()) {
        std::cerr << "verify needs exactly one of --target-family or --target\n";
        return kExitInvalidInput;
      }
      std::ifstream in(input, std::ios::binary);
      if (!in) {
        std::cerr << "cannot read " << input << "\n";
        return kExitInvalidInput;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      const std::string cert_json = buffer.str();

      Polynomial target(1);
      if (!target_family.empty()) {
        auto family = parse_family(target_family);
        if (!family) {
          std::cerr << "unknown family '" << target_family << "'\n";
          return kExitInvalidInput;
        }
        job.family = *family;
        job.alpha = partition_or_empty(alpha);
        job.beta = partition_or_empty(beta);
        target = build_target(job);
      } else {
        // The target text has no arity of its own; take the certificate's.
        target = parse_polynomial(target_text, certificate_from_json(cert_json).arity());
      }
      return emit(run_verify(cert_json, target, common.samples, common.seed), common.output);
    }

    if (grid->parsed()) {
      auto formatted = acceptance_grid();
      for (auto& j : formatted) {
        j.format = job.format;
        j.samples = job.samples;
        j.seed = job.seed;
      }
      const auto results = run_all(formatted, threads);
      RunResult combined;
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].exit_code != kExitVerified) {
          combined.exit_code = kExitVerificationFailed;
          combined.diagnostics += describe(formatted[i]) + ": FAILED\n" + results[i].diagnostics;
        }
        combined.output += results[i].output;
      }
      combined.diagnostics += std::to_string(results.size()) + " jobs, " +
                              (combined.exit_code == kExitVerified ? "all verified" : "failures above") +
                              "\n";
      return emit(combined, common.output);
    }
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
