// simplex-growth: command-line front end for the growth, star, urn,
// closed-form and verify routines.
//
// Exit codes: 0 ok, 1 runtime error, 2 usage or validation error,
// 3 acceptance failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "simplex/closed_form.hpp"
#include "simplex/complex.hpp"
#include "simplex/config_io.hpp"
#include "simplex/hypotheses.hpp"
#include "simplex/io.hpp"
#include "simplex/runner.hpp"
#include "simplex/star.hpp"
#include "simplex/urn.hpp"
#include "simplex/verify.hpp"
#include "simplex/version.hpp"

using namespace simplex;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAcceptance = 3;

struct Common {
  std::string config;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  unsigned threads = default_threads();
  std::string out;
  std::string manifest;
};

void add_config_options(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "JSON model config");
  app->add_option("--set", c.sets, "override a config key, e.g. --set weights.kind=uniform01");
}

void add_run_options(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "base seed (default: config seed, else 0)");
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* app, Common& c, const std::string& what) {
  app->add_option("--out", c.out, what + " (default: stdout)");
  app->add_option("--manifest", c.manifest, "run manifest path (default: <out>.manifest.json)");
}

ModelConfig load(const Common& c) {
  auto cfg = load_config(c.config, c.sets);
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

// Writes `text` to --out or stdout.
void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(c.out, text);
  }
}

class ManifestScope {
 public:
  ManifestScope(std::string subcommand, std::vector<std::string> args)
      : start_(std::chrono::steady_clock::now()) {
    m_.subcommand = std::move(subcommand);
    m_.arguments = std::move(args);
    m_.version = kGitDescribe;
  }

  RunManifest& manifest() { return m_; }

  void write(const Common& c) {
    const std::string path = !c.manifest.empty() ? c.manifest
                             : !c.out.empty()    ? c.out + ".manifest.json"
                                                 : std::string();
    if (path.empty()) return;
    m_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    write_text_file(path, manifest_to_json(m_));
  }

 private:
  RunManifest m_;
  std::chrono::steady_clock::time_point start_;
};

// Seed law for the star process: exact urn pi-hat when the urn exists,
// otherwise the empirical law of chosen types from a growth run.
TypeDistribution seed_types(const ModelConfig& cfg, std::uint64_t growth_steps, unsigned threads,
                            std::optional<double>* lambda_out) {
  if (cfg.weights.finitely_supported() && check_hypotheses(cfg).h1.passed()) {
    const auto urn = solve_urn(cfg);
    if (lambda_out && !*lambda_out) *lambda_out = urn.lambda;
    std::cerr << "star: seeding from urn pi-hat (" << urn.types.size() << " types, lambda "
              << format_real(urn.lambda) << ")\n";
    return urn.type_law();
  }
  GrowthRunOptions g;
  g.steps = growth_steps;
  g.seed = mix_seed(cfg.seed, 0x5eed);
  g.threads = threads;
  g.trace.trace_y = true;
  g.trace.z_stride = std::max<std::uint64_t>(1, growth_steps / 10'000);
  const auto run = run_growth(cfg, g);
  if (lambda_out && !*lambda_out) *lambda_out = lambda_hat(run.z_trace).lambda;
  std::cerr << "star: seeding from " << run.y_samples.size() << " chosen types of a "
            << growth_steps << "-step growth run\n";
  return empirical_type_sampler(run.y_samples);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random simplicial complex growth: simulation and limiting degree laws"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion) + " (" + kGitDescribe + ")");

  std::vector<std::string> raw_args(argv + 1, argv + argc);

  // grow
  Common grow_c;
  std::uint64_t grow_steps = 0;
  std::uint64_t grow_replicas = 1;
  std::string trace_z;
  std::uint64_t z_stride = 1;
  std::string trace_y;
  double y_burn_in = 0.5;
  bool audit = false;
  auto* grow = app.add_subcommand("grow", "grow the complex and report N_k(n)/n");
  add_config_options(grow, grow_c);
  add_run_options(grow, grow_c);
  add_output_options(grow, grow_c, "profile CSV");
  grow->add_option("--steps", grow_steps, "number of steps n")->required();
  grow->add_option("--replicas", grow_replicas, "independent replicas")->check(CLI::PositiveNumber);
  grow->add_option("--trace-z", trace_z, "write the Z_n trace of replica 0 to this CSV");
  grow->add_option("--z-stride", z_stride, "record Z every this many steps")
      ->check(CLI::PositiveNumber);
  grow->add_option("--trace-y", trace_y, "write chosen-type frequencies of replica 0 to this CSV");
  grow->add_option("--y-burn-in", y_burn_in, "fraction of steps skipped before tracing types")
      ->check(CLI::Range(0.0, 1.0));
  grow->add_flag("--audit", audit, "keep an edge log and recount all invariants at the end");

  // star
  Common star_c;
  std::optional<double> star_lambda;
  int kmax = 20;
  std::uint64_t star_replicas = 100'000;
  bool lambda_star = false;
  double weight = 1.0;
  std::uint64_t star_steps = 10'000;
  std::uint64_t seed_steps = 100'000;
  auto* star = app.add_subcommand("star", "Monte Carlo p_k or lambda*_w from the star process");
  add_config_options(star, star_c);
  add_run_options(star, star_c);
  add_output_options(star, star_c, "p_k CSV");
  star->add_option("--lambda", star_lambda, "growth rate lambda (default: urn or growth estimate)");
  star->add_option("--kmax", kmax, "largest k")->check(CLI::NonNegativeNumber);
  star->add_option("--replicas", star_replicas, "star chains (default 100000, or 100 with --lambda-star)")->check(CLI::PositiveNumber);
  star->add_flag("--lambda-star", lambda_star, "estimate lambda*_w instead of p_k");
  star->add_option("--weight", weight, "centre weight w for --lambda-star");
  star->add_option("--steps", star_steps, "chain length for --lambda-star");
  star->add_option("--seed-steps", seed_steps,
                   "growth steps used to seed types when no urn solution exists");

  // urn
  Common urn_c;
  double urn_tol = 1e-10;
  auto* urn = app.add_subcommand("urn", "exact lambda, pi and pi-hat for finitely supported weights");
  add_config_options(urn, urn_c);
  add_output_options(urn, urn_c, "urn JSON");
  urn->add_option("--tol", urn_tol, "relative Perron residual tolerance");

  // closed-form
  Common cf_c;
  std::string cf_model = "A";
  int cf_d = 2;
  int cf_kmax = 50;
  bool printed = false;
  bool wrt = false;
  auto* cf = app.add_subcommand("closed-form", "exact constant-fitness or weighted-tree p_k");
  add_config_options(cf, cf_c);
  add_output_options(cf, cf_c, "p_k CSV");
  cf->add_option("--model", cf_model, "A or B")->check(CLI::IsMember({"A", "B", "a", "b"}));
  cf->add_option("--d", cf_d, "dimension")->check(CLI::Range(1, kMaxDimension));
  cf->add_option("--kmax", cf_kmax, "largest k")->check(CLI::NonNegativeNumber);
  cf->add_flag("--printed", printed, "Model B, d=2: use 2^{k-1}/3^k instead of (1/3)(2/3)^k");
  cf->add_flag("--wrt", wrt, "weighted recursive tree p_k for a d=1 Model A --config");

  // verify
  Common ver_c;
  std::string suite = "fast";
  double budget = 0.0;
  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  add_run_options(ver, ver_c);
  ver->add_option("--suite", suite, "fast or full");
  ver->add_option("--budget", budget, "time budget in seconds (0: none)");
  ver->add_option("--out", ver_c.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (grow->parsed()) {
      const auto cfg = load(grow_c);
      ManifestScope ms("grow", raw_args);
      GrowthRunOptions o;
      o.steps = grow_steps;
      o.replicas = grow_replicas;
      o.seed = cfg.seed;
      o.threads = grow_c.threads;
      o.audit = audit;
      if (!trace_z.empty()) o.trace.z_stride = z_stride;
      o.trace.trace_y = !trace_y.empty();
      o.trace.y_burn_in = y_burn_in;
      const auto run = run_growth(cfg, o);
      std::ostringstream csv;
      write_profile_csv(csv, run.profile);
      emit(grow_c, csv.str());
      ms.manifest().config_json = config_to_json(cfg);
      ms.manifest().seed = cfg.seed;
      if (!grow_c.out.empty()) ms.manifest().outputs.push_back(grow_c.out);
      if (!trace_z.empty()) {
        save_z_trace_csv(trace_z, run.z_trace);
        ms.manifest().outputs.push_back(trace_z);
        if (run.z_trace.size() >= 100) {
          std::cerr << "lambda_hat " << format_real(lambda_hat(run.z_trace).lambda) << '\n';
        }
      }
      if (!trace_y.empty()) {
        const auto law = TypeDistribution::empirical(run.y_samples);
        std::ostringstream ys;
        ys << "type,probability\n";
        for (std::size_t i = 0; i < law.size(); ++i) {
          ys << '"' << law.types()[i].to_string() << "\"," << format_real(law.probabilities()[i])
             << '\n';
        }
        write_text_file(trace_y, ys.str());
        ms.manifest().outputs.push_back(trace_y);
      }
      ms.write(grow_c);
      return 0;
    }

    if (star->parsed()) {
      const auto cfg = load(star_c);
      ManifestScope ms("star", raw_args);
      ms.manifest().config_json = config_to_json(cfg);
      ms.manifest().seed = cfg.seed;
      StarRunOptions o;
      o.replicas = star_replicas;
      o.seed = cfg.seed;
      o.threads = star_c.threads;
      if (lambda_star) {
        if (star->count("--replicas") == 0) o.replicas = 100;
        const auto types = seed_types(cfg, seed_steps, star_c.threads, nullptr);
        const auto est = estimate_lambda_star(cfg, weight, star_steps, types, o);
        for (const auto& w : est.warnings) std::cerr << "warning: " << w << '\n';
        emit(star_c, "w,lambda_star,stderr\n" + format_real(weight) + ',' +
                         format_real(est.value) + ',' + format_real(est.std_error) + '\n');
      } else {
        std::optional<double> lambda = star_lambda;
        const auto types = seed_types(cfg, seed_steps, star_c.threads, &lambda);
        const auto prof = estimate_pk(cfg, *lambda, kmax, types, o);
        std::ostringstream csv;
        write_profile_csv(csv, prof);
        emit(star_c, csv.str());
      }
      if (!star_c.out.empty()) ms.manifest().outputs.push_back(star_c.out);
      ms.write(star_c);
      return 0;
    }

    if (urn->parsed()) {
      const auto cfg = load(urn_c);
      ManifestScope ms("urn", raw_args);
      ms.manifest().config_json = config_to_json(cfg);
      ms.manifest().seed = cfg.seed;
      emit(urn_c, urn_to_json(solve_urn(cfg, urn_tol)) + "\n");
      if (!urn_c.out.empty()) ms.manifest().outputs.push_back(urn_c.out);
      ms.write(urn_c);
      return 0;
    }

    if (cf->parsed()) {
      ManifestScope ms("closed-form", raw_args);
      DegreeProfile prof;
      if (wrt) {
        const auto cfg = load(cf_c);
        ms.manifest().config_json = config_to_json(cfg);
        prof = wrt_profile(cfg, cf_kmax);
      } else {
        prof = closed_form_profile(parse_variant(cf_model), cf_d, cf_kmax, printed);
      }
      std::ostringstream csv;
      write_profile_csv(csv, prof);
      emit(cf_c, csv.str());
      if (!cf_c.out.empty()) ms.manifest().outputs.push_back(cf_c.out);
      ms.write(cf_c);
      return 0;
    }

    if (ver->parsed()) {
      VerifyOptions o;
      try {
        o.suite = parse_suite(suite);
      } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
      }
      o.budget_seconds = budget;
      o.seed = ver_c.seed.value_or(0);
      o.threads = ver_c.threads;
      const auto rep = run_acceptance(o, [](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
      });
      if (rep.budget_exceeded) std::cout << "budget of " << budget << " s exceeded\n";
      std::cout << (rep.passed() ? "ALL PASSED" : "FAILED") << '\n';
      if (!ver_c.out.empty()) write_text_file(ver_c.out, report_to_json(rep));
      if (rep.budget_exceeded) {
        std::cerr << to_string(ErrorCode::BudgetExceeded) << ": partial report\n";
      }
      return rep.passed() ? 0 : kExitAcceptance;
    }
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (e.code() == ErrorCode::DimensionUnsupported || e.code() == ErrorCode::InvalidArgument ||
        e.code() == ErrorCode::HypothesisViolated) {
      return kExitUsage;
    }
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
