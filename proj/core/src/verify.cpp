#include "simplex/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "simplex/closed_form.hpp"
#include "simplex/complex.hpp"
#include "simplex/profile.hpp"
#include "simplex/runner.hpp"
#include "simplex/star.hpp"
#include "simplex/stats.hpp"
#include "simplex/urn.hpp"
#include "simplex/weighted_index.hpp"

namespace simplex {

std::string to_string(Suite s) { return s == Suite::Fast ? "fast" : "full"; }

Suite parse_suite(const std::string& s) {
  if (s == "fast") return Suite::Fast;
  if (s == "full") return Suite::Full;
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + s + "' (expected fast or full)");
}

bool VerifyReport::passed() const {
  if (budget_exceeded) return false;
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

ModelConfig constant_config(Variant v, int d) {
  ModelConfig cfg;
  cfg.d = d;
  cfg.variant = v;
  cfg.fitness = Fitness::constant(1.0);
  return validate_config(cfg);
}

// d-dimensional Model A with f = product of coordinates, mu uniform on {1/2, 1}.
ModelConfig weighted_instance(int d, Variant v = Variant::A) {
  ModelConfig cfg;
  cfg.d = d;
  cfg.variant = v;
  cfg.fitness = Fitness::product({ScalarMap::Kind::Identity, 0.0});
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  return validate_config(cfg);
}

DegreeProfile grow_once(const ModelConfig& cfg, std::uint64_t n, std::uint64_t seed) {
  GrowthRunOptions o;
  o.steps = n;
  o.seed = seed;
  return run_growth(cfg, o).profile;
}

// Tolerances and sizes below are the acceptance thresholds; do not loosen.

CriterionResult recursive_tree(const VerifyOptions& o) {
  CriterionResult r;
  r.time_limit = 5.0;
  const std::uint64_t n = 200'000;
  const auto prof = grow_once(constant_config(Variant::A, 1), n, mix_seed(o.seed, 1));
  // Degree m = 1 + k has limiting share 2^{-m}.
  double worst = 0.0;
  int worst_m = 0;
  for (int m = 1; m <= 9; ++m) {
    const double diff = std::abs(prof.fraction(m - 1) - std::ldexp(1.0, -m));
    if (diff > worst) {
      worst = diff;
      worst_m = m;
    }
  }
  r.passed = worst < 0.01;
  r.metrics = {{"max_abs_diff", worst}, {"worst_degree", worst_m}};
  r.detail = "max |N(deg m)/n - 2^-m| over m=1..9 = " + fmt("%.4g", worst) + " (tol 0.01)";
  return r;
}

CriterionResult apollonian(const VerifyOptions& o) {
  CriterionResult r;
  r.time_limit = 20.0;
  const std::uint64_t n = 200'000;
  const auto prof = grow_once(constant_config(Variant::B, 3), n, mix_seed(o.seed, 2));
  const auto cmp = compare_profiles(prof, closed_form_profile(Variant::B, 3, 10), 10, 0.01);
  r.passed = cmp.passed && cmp.z_scores.size() == 11;
  r.metrics = {{"max_abs_diff", cmp.max_abs_diff}, {"worst_k", cmp.worst_k}};
  r.detail = "max_{k<=10} |N_k/n - p_k| = " + fmt("%.4g", cmp.max_abs_diff) + " (tol 0.01)";
  return r;
}

CriterionResult tail_exponent(const VerifyOptions& o) {
  CriterionResult r;
  const auto exact = fit_tail_slope(closed_form_profile(Variant::B, 3, 10'000), 100, 10'000);
  const std::uint64_t n = 1'000'000;
  const auto prof = grow_once(constant_config(Variant::B, 3), n, mix_seed(o.seed, 3));
  const auto sim = fit_tail_slope(prof, 5, 40);
  const bool ok_exact = exact.slope >= -3.02 && exact.slope <= -2.98;
  const bool ok_sim = sim.slope >= -3.6 && sim.slope <= -2.4;
  r.passed = ok_exact && ok_sim;
  r.metrics = {{"closed_form_slope", exact.slope},
               {"simulated_slope", sim.slope},
               {"simulated_r2", sim.r2_loglog}};
  r.detail = "closed-form slope " + fmt("%.4f", exact.slope) + " in [-3.02,-2.98]; simulated " +
             fmt("%.3f", sim.slope) + " in [-3.6,-2.4]";
  return r;
}

CriterionResult lambda_triangulation(const VerifyOptions& o) {
  CriterionResult r;
  r.time_limit = 30.0;
  const auto cfg = weighted_instance(2);
  const auto urn = solve_urn(cfg);
  GrowthRunOptions g;
  g.steps = 100'000;
  g.seed = mix_seed(o.seed, 4);
  g.trace.z_stride = 1;
  const auto run = run_growth(cfg, g);
  const auto est = lambda_hat(run.z_trace);
  const double rel = std::abs(urn.lambda - est.lambda) / urn.lambda;
  const double lambda1 = solve_urn(weighted_instance(1)).lambda;
  const double d1_err = std::abs(lambda1 - 0.75);
  r.passed = rel < 0.02 && d1_err < 1e-10;
  r.metrics = {{"lambda_urn", urn.lambda},
               {"lambda_growth", est.lambda},
               {"relative_error", rel},
               {"lambda_urn_d1", lambda1}};
  r.detail = "urn " + fmt("%.6f", urn.lambda) + " vs growth " + fmt("%.6f", est.lambda) +
             " (rel " + fmt("%.3g", rel) + ", tol 0.02); d=1 urn " + fmt("%.12f", lambda1) +
             " vs 3/4";
  return r;
}

CriterionResult three_routes(const VerifyOptions& o) {
  CriterionResult r;
  const auto cfg = weighted_instance(2);
  const auto urn = solve_urn(cfg);
  StarRunOptions so;
  so.replicas = 100'000;
  so.seed = mix_seed(o.seed, 5);
  so.threads = o.threads;
  const auto star = estimate_pk(cfg, urn.lambda, 6, urn.type_law(), so);
  const auto growth = grow_once(cfg, 200'000, mix_seed(o.seed, 50));
  const auto cmp = compare_profiles(star, growth, 6, 0.02);
  r.passed = cmp.passed && cmp.z_scores.size() == 7;
  r.metrics = {{"max_abs_diff", cmp.max_abs_diff}, {"worst_k", cmp.worst_k}, {"lambda", urn.lambda}};
  r.detail = "max_{k<=6} |p_k(star) - N_k/n(growth)| = " + fmt("%.4g", cmp.max_abs_diff) +
             " (tol 0.02)";
  return r;
}

CriterionResult type_law_tv(const VerifyOptions& o) {
  CriterionResult r;
  const auto cfg = weighted_instance(2);
  const auto urn = solve_urn(cfg);
  GrowthRunOptions g;
  g.steps = 100'000;
  g.seed = mix_seed(o.seed, 55);
  g.trace.trace_y = true;
  const auto run = run_growth(cfg, g);
  const double tv = empirical_type_sampler(run.y_samples).total_variation(urn.type_law());
  r.passed = tv <= 0.02;
  r.metrics = {{"total_variation", tv}};
  r.detail = "TV(urn pi-hat, chosen types at n=1e5) = " + fmt("%.4g", tv) + " (tol 0.02)";
  return r;
}

CriterionResult edge_identity(const VerifyOptions& o) {
  CriterionResult r;
  const std::uint64_t n = 200'000;
  const std::pair<Variant, int> cases[] = {
      {Variant::A, 1}, {Variant::A, 2}, {Variant::A, 3}, {Variant::B, 2}, {Variant::B, 3}};
  r.passed = true;
  std::ostringstream detail;
  int i = 0;
  for (auto [v, d] : cases) {
    const auto prof = grow_once(constant_config(v, d), n, mix_seed(o.seed, 60 + i++));
    const double s = prof.mean_excess();
    const bool ok = s >= d - 0.05 && s <= d + 0.02;
    r.passed = r.passed && ok;
    const std::string name = to_string(v) + std::to_string(d);
    r.metrics.emplace_back("sum_k_kNk_over_n_" + name, s);
    detail << name << ':' << fmt("%.6f", s) << (ok ? "" : "(FAIL)") << ' ';
  }
  r.detail = "sum k N_k/n in [d-0.05, d+0.02]: " + detail.str();
  return r;
}

CriterionResult star_exactness(const VerifyOptions& o) {
  CriterionResult r;
  const std::pair<Variant, int> cases[] = {
      {Variant::A, 1}, {Variant::A, 2}, {Variant::A, 3}, {Variant::B, 2}, {Variant::B, 3}};
  const double f0 = 1.5;
  r.passed = true;
  std::uint64_t mismatches = 0;
  int i = 0;
  for (auto [v, d] : cases) {
    ModelConfig cfg;
    cfg.d = d;
    cfg.variant = v;
    cfg.fitness = Fitness::constant(f0);
    cfg = validate_config(cfg);
    Rng rng = make_rng(o.seed, 70 + static_cast<std::uint64_t>(i++));
    const auto seed_type = TypeDistribution::point_mass(
        FaceType(std::vector<double>(static_cast<std::size_t>(d), 0.5)));
    auto star = StarState::init(cfg, seed_type, std::nullopt, rng);
    for (std::uint64_t n = 0; n <= 10'000; ++n) {
      const double expected = static_cast<double>(expected_star_size(cfg, n)) * f0;
      if (star.fitness_total() != expected || star.size() != expected_star_size(cfg, n)) {
        ++mismatches;
      }
      if (n < 10'000) star.step(rng);
    }
  }
  r.passed = mismatches == 0;
  r.metrics = {{"mismatched_steps", static_cast<double>(mismatches)}};
  r.detail = "F(S*_n) == |S*_n| f0 exactly for n <= 1e4 in A1,A2,A3,B2,B3; mismatches " +
             std::to_string(mismatches);
  return r;
}

CriterionResult normalization(const VerifyOptions&) {
  CriterionResult r;
  double s3 = 0.0;
  for (int k = 0; k <= 200; ++k) s3 += pk_model_b_const(3, k);
  double s2 = 0.0;
  for (int k = 0; k <= 1000; ++k) s2 += pk_model_b_const(2, k);
  const bool ok3 = s3 >= 1.0 - 1e-3 && s3 <= 1.0;
  const bool ok2 = std::abs(s2 - 1.0) <= 1e-12;
  r.passed = ok3 && ok2;
  r.metrics = {{"sum_b3_k200", s3}, {"sum_b2_k1000", s2}};
  r.detail = "B3 sum_{k<=200} = " + fmt("%.8f", s3) + " in [0.999,1]; B2 sum_{k<=1000} - 1 = " +
             fmt("%.3g", s2 - 1.0);
  return r;
}

CriterionResult property_suites(const VerifyOptions& o) {
  CriterionResult r;
  std::ostringstream detail;

  // Sampler goodness of fit after a mix of inserts and removals.
  DynamicWeightedIndex index;
  std::vector<DynamicWeightedIndex::Handle> handles;
  for (int i = 1; i <= 64; ++i) handles.push_back(index.insert(0.25 * i + (i % 7)));
  for (int i = 0; i < 64; i += 3) index.remove(handles[static_cast<std::size_t>(i)]);
  for (int i = 0; i < 10; ++i) index.insert(3.0 + i);
  std::vector<double> probs(index.slot_count(), 0.0);
  for (std::size_t h = 0; h < probs.size(); ++h) {
    if (index.live(static_cast<DynamicWeightedIndex::Handle>(h))) {
      probs[h] = index.weight(static_cast<DynamicWeightedIndex::Handle>(h)) / index.total();
    }
  }
  std::vector<std::uint64_t> observed(probs.size(), 0);
  Rng rng = make_rng(o.seed, 90);
  for (int i = 0; i < 1'000'000; ++i) ++observed[index.sample(rng)];
  const auto chi = chi_square_test(observed, probs);
  const bool ok_chi = chi.p_value > 0.001;
  detail << "chi-square p=" << fmt("%.4g", chi.p_value) << (ok_chi ? "" : "(FAIL)") << "; ";

  // Audited growth.
  std::size_t audit_failures = 0;
  const std::pair<Variant, int> cases[] = {
      {Variant::A, 1}, {Variant::A, 2}, {Variant::A, 3}, {Variant::B, 2}, {Variant::B, 3}};
  for (auto [v, d] : cases) {
    ModelConfig cfg;
    cfg.d = d;
    cfg.variant = v;
    cfg.fitness = Fitness::product({ScalarMap::Kind::Shifted, 0.5});
    cfg = validate_config(cfg);
    Rng g = make_rng(o.seed, 91 + static_cast<std::uint64_t>(d));
    auto state = ComplexState::init(cfg, g, true);
    for (int step = 1; step <= 10'000; ++step) {
      state.advance(g);
      if (step % 1000 == 0) audit_failures += state.audit().failures.size();
    }
  }
  const bool ok_audit = audit_failures == 0;
  detail << "audit failures " << audit_failures << "; ";

  // Perron residuals.
  double worst_res = 0.0;
  for (const auto& cfg : {weighted_instance(1), weighted_instance(2), weighted_instance(3),
                          weighted_instance(3, Variant::B)}) {
    const auto p = perron(mean_matrix(cfg));
    worst_res = std::max(worst_res, p.residual / p.lambda);
  }
  const bool ok_perron = worst_res < 1e-10;
  detail << "max Perron residual/lambda " << fmt("%.3g", worst_res) << "; ";

  // Same seed, different thread counts: identical counts.
  GrowthRunOptions go;
  go.steps = 20'000;
  go.replicas = 4;
  go.seed = mix_seed(o.seed, 99);
  go.threads = 1;
  const auto a = run_growth(weighted_instance(2), go);
  go.threads = 4;
  const auto b = run_growth(weighted_instance(2), go);
  const bool ok_det = fingerprint(a.replica_counts) == fingerprint(b.replica_counts) &&
                      a.profile == b.profile;
  detail << "determinism " << (ok_det ? "ok" : "MISMATCH");

  r.passed = ok_chi && ok_audit && ok_perron && ok_det;
  r.metrics = {{"chi_square_p", chi.p_value},
               {"audit_failures", static_cast<double>(audit_failures)},
               {"perron_relative_residual", worst_res},
               {"deterministic", ok_det ? 1.0 : 0.0}};
  r.detail = detail.str();
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {"1", "recursive tree degree law (d=1, A)", true, recursive_tree},
      {"2", "random Apollonian network (d=3, B) vs closed form", true, apollonian},
      {"3", "tail exponent (d=3, B)", false, tail_exponent},
      {"4", "lambda: urn vs growth, d=1 urn = E f(W)", false, lambda_triangulation},
      {"5", "p_k: star process vs growth (weighted)", false, three_routes},
      {"5b", "type law: urn pi-hat vs empirical", false, type_law_tv},
      {"6", "edge-count identity (constant fitness)", true, edge_identity},
      {"7", "star process exactness (constant fitness)", true, star_exactness},
      {"8", "closed-form normalization (B, d=2,3)", true, normalization},
      {"9", "property suites", false, property_suites},
  };
  return all;
}

VerifyReport run_acceptance(const VerifyOptions& options,
                            const std::function<void(const CriterionResult&)>& on_result) {
  VerifyReport rep;
  rep.suite = options.suite;
  const auto t0 = Clock::now();
  for (const auto& c : acceptance_criteria()) {
    if (options.suite == Suite::Fast && !c.fast) continue;
    CriterionResult res;
    if (options.budget_seconds > 0.0 && seconds_since(t0) >= options.budget_seconds) {
      rep.budget_exceeded = true;
      res.skipped = true;
      res.detail = "skipped: budget of " + fmt("%.0f", options.budget_seconds) + " s exhausted";
    } else {
      const auto t1 = Clock::now();
      try {
        res = c.run(options);
      } catch (const std::exception& e) {
        res = CriterionResult{};
        res.passed = false;
        res.detail = std::string("error: ") + e.what();
      }
      res.seconds = seconds_since(t1);
      if (res.time_limit > 0.0 && res.seconds >= res.time_limit) {
        res.passed = false;
        res.detail += "; runtime " + fmt("%.2f", res.seconds) + " s exceeds " +
                      fmt("%.0f", res.time_limit) + " s";
      }
    }
    res.id = c.id;
    res.title = c.title;
    if (on_result) on_result(res);
    rep.results.push_back(std::move(res));
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

std::string format_result(const CriterionResult& r) {
  const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
  char head[160];
  std::snprintf(head, sizeof head, "%s  %-3s %-52s (%6.2f s)  ", tag, r.id.c_str(), r.title.c_str(),
                r.seconds);
  return head + r.detail;
}

std::string report_to_json(const VerifyReport& report, int indent) {
  nlohmann::json j;
  j["suite"] = to_string(report.suite);
  j["passed"] = report.passed();
  j["budget_exceeded"] = report.budget_exceeded;
  j["seconds"] = report.seconds;
  auto& arr = j["criteria"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["status"] = r.skipped ? "skipped" : (r.passed ? "pass" : "fail");
    c["seconds"] = r.seconds;
    if (r.time_limit > 0.0) c["time_limit"] = r.time_limit;
    c["detail"] = r.detail;
    for (const auto& [k, v] : r.metrics) c["metrics"][k] = v;
    arr.push_back(c);
  }
  return j.dump(indent);
}

}  // namespace simplex
