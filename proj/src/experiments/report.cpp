#include <chrono>
#include <cmath>
#include <limits>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"
#include "uncertainty/io.hpp"

namespace uncertainty {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename T>
T param(const nlohmann::json& config, const char* key, T fallback) {
  if (!config.is_object() || !config.contains(key)) return fallback;
  try {
    return config[key].get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("experiment parameter '") + key + "': " + e.what());
  }
}

ExperimentReport start_report(const char* name, std::uint64_t seed) {
  ExperimentReport r;
  r.name = name;
  r.config["seed"] = seed;
  return r;
}

}  // namespace

bool ExperimentReport::passed() const {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

nlohmann::json ExperimentReport::to_json(bool include_time) const {
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [name, ok] : checks) c[name] = ok ? "pass" : "fail";
  nlohmann::json j = {{"name", name}, {"config", config}, {"metrics", metrics}, {"checks", std::move(c)},
                      {"passed", passed()}};
  j["wall_time"] = include_time && wall_time ? nlohmann::json(*wall_time) : nlohmann::json(nullptr);
  return j;
}

ExperimentReport run_counterexample_experiment(const nlohmann::json& config, std::uint64_t seed) {
  const auto t0 = Clock::now();
  ExperimentReport rep = start_report("counterexample", seed);
  const auto m = param<std::size_t>(config, "m", 16);
  rep.config["m"] = m;

  const CounterexampleReport cx = counterexample(m);
  const SeparationProblem prob = counterexample_problem(cx);
  const std::size_t n = cx.z.size();
  const double half = static_cast<double>(n) / 2.0;

  SolverConfig cfg;
  cfg.seed = seed;
  const SeparationSolution p1 = separate_p1(prob, cfg);
  const ThresholdCheck th = separation_threshold(prob.a, *prob.b, n / 2, n);

  rep.metrics["w"] = vector_to_json(cx.w);
  rep.metrics["w_error"] = cx.w_error;
  rep.metrics["alternative_residual"] = cx.alternative_residual;
  rep.metrics["l0_pair"] = {cx.l0_pair.first, cx.l0_pair.second};
  rep.metrics["l1_pair"] = {cx.l1_pair.first, cx.l1_pair.second};
  rep.metrics["p1_objective"] = p1.objective;
  rep.metrics["p1_status"] = to_string(p1.status);
  rep.metrics["p1_near_degenerate_planted"] = near_degenerate(prob, p1, cx.y);
  rep.metrics["p1_near_degenerate_alternative"] = near_degenerate(prob, p1, cx.y_tilde);
  rep.metrics["threshold"] = to_json(th);

  rep.checks["w_closed_form"] = cx.w_error <= 1e-10;
  rep.checks["both_feasible"] = cx.both_feasible;
  rep.checks["l0_equal"] = cx.l0_pair.first == cx.l0_pair.second && cx.l0_pair.first == n / 2;
  rep.checks["l1_equal"] = std::abs(cx.l1_pair.first - half) <= 1e-9 && std::abs(cx.l1_pair.second - half) <= 1e-9;
  rep.checks["p1_objective"] = std::abs(p1.objective - half) <= 1e-6;
  rep.checks["threshold_violated"] = !th.holds;

  if (m <= 24) {
    const SeparationSolution p0 = separate_p0(prob, n / 2, cfg);
    rep.metrics["p0_support"] = p0.support ? nlohmann::json(*p0.support) : nlohmann::json(nullptr);
    rep.checks["p0_support_size"] = p0.status == SolverStatus::Converged && p0.support && p0.support->size() == n / 2;
  } else {
    rep.metrics["p0_support"] = nullptr;
  }
  rep.wall_time = seconds_since(t0);
  return rep;
}

ExperimentReport run_injectivity_experiment(const nlohmann::json& config, std::uint64_t seed) {
  const auto t0 = Clock::now();
  ExperimentReport rep = start_report("injectivity", seed);
  const auto m = param<std::size_t>(config, "m", 6);
  const auto p = param<std::size_t>(config, "p", 8);
  const auto q = param<std::size_t>(config, "q", 2);
  const auto s = param<std::size_t>(config, "s", 1);
  const auto t = param<std::size_t>(config, "t", 1);
  const auto draws = param<std::size_t>(config, "draws", 100);
  rep.config.update({{"m", m}, {"p", p}, {"q", q}, {"s", s}, {"t", t}, {"draws", draws}});

  const std::size_t budget = std::min(p, 2 * s) + std::min(q, 2 * t);
  const bool predicted = m > budget;
  std::size_t injective = 0;
  double min_sv = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < draws; ++i) {
    Rng rng = make_stream(seed, i);
    const Dictionary a = random_dictionary(rng, m, p);
    const Dictionary b = random_dictionary(rng, m, q);
    const InjectivityResult r = injectivity_check(a, b, s, t);
    if (r.injective) ++injective;
    min_sv = std::min(min_sv, r.min_sv);
  }
  rep.metrics["budget"] = budget;
  rep.metrics["predicted_injective"] = predicted;
  rep.metrics["injective_draws"] = injective;
  rep.metrics["min_singular_value"] = min_sv;
  rep.checks["matches_prediction"] = predicted ? injective == draws : injective == 0;

  // Budget above the dimension: A = I_2, B = e_1, s = 2, t = 1.
  const InjectivityResult converse = injectivity_check(Dictionary(ComplexMatrix::identity(2)),
                                                       Dictionary(ComplexMatrix(2, 1, {1.0, 0.0})), 2, 1);
  rep.metrics["converse_has_witness"] = converse.witness.has_value();
  rep.checks["converse_witness"] = !converse.injective && converse.witness.has_value();
  rep.wall_time = seconds_since(t0);
  return rep;
}

ExperimentReport run_com_mc_experiment(const nlohmann::json& config, std::uint64_t seed) {
  const auto t0 = Clock::now();
  ExperimentReport rep = start_report("com-mc", seed);
  const auto p = param<std::size_t>(config, "p", 1);
  const auto m = param<std::size_t>(config, "m", 1);
  const auto r = param<double>(config, "r", 1.0);
  const auto delta = param<double>(config, "delta", 0.3);
  const auto trials = param<std::size_t>(config, "trials", 100000);
  const auto random_v = param<bool>(config, "random_v", false);
  rep.config.update({{"p", p}, {"m", m}, {"r", r}, {"delta", delta}, {"trials", trials}, {"random_v", random_v}});

  Rng rng = make_named_stream(seed, "com-mc/inputs");
  ComplexVector u = p == 1 ? ComplexVector{1.0} : complex_gaussian_vector(rng, p);
  ComplexVector v = random_v ? complex_gaussian_vector(rng, m) : ComplexVector(m);
  if (random_v) {
    for (auto& x : v) x *= 0.1;
  }
  const MonteCarloEstimate est = com_bound_mc(p, m, r, u, v, delta, trials, seed);
  rep.metrics["u"] = vector_to_json(u);
  rep.metrics["v"] = vector_to_json(v);
  rep.metrics["empirical"] = est.empirical;
  rep.metrics["bound"] = est.bound;
  rep.metrics["sigma"] = est.sigma;
  rep.metrics["hits"] = est.hits;
  rep.checks["bound_respected"] = est.empirical <= est.bound + 3.0 * est.sigma;
  if (p == 1 && m == 1 && !random_v) {
    // |a| < delta with a uniform on the radius-r disk.
    const double exact = std::min(1.0, std::pow(delta / r, 2));
    const double sd = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
    rep.metrics["exact"] = exact;
    rep.checks["matches_disk_probability"] = std::abs(est.empirical - exact) <= 3.0 * sd;
  }
  rep.wall_time = seconds_since(t0);
  return rep;
}

ExperimentReport run_sieve_experiment(const nlohmann::json& config, std::uint64_t seed) {
  const auto t0 = Clock::now();
  ExperimentReport rep = start_report("sieve", seed);
  const auto cases = param<std::size_t>(config, "cases", 1000);
  const auto max_atoms = param<std::size_t>(config, "max_atoms", 32);
  const auto max_n = param<std::size_t>(config, "max_n", 16);
  rep.config.update({{"cases", cases}, {"max_atoms", max_atoms}, {"max_n", max_n}});

  std::size_t violations = 0;
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < cases; ++i) {
    Rng rng = make_stream(seed, i);
    const SieveCase c = random_sieve_case(rng, max_atoms, max_n);
    const SieveCheck chk = sieve_empirical(c.mu, c.psi, c.delta);
    if (!chk.holds) ++violations;
    if (chk.rhs > 0.0) worst_ratio = std::max(worst_ratio, chk.lhs / chk.rhs);
  }
  rep.metrics["violations"] = violations;
  rep.metrics["max_lhs_over_rhs"] = worst_ratio;
  rep.checks["no_violations"] = violations == 0;
  rep.wall_time = seconds_since(t0);
  return rep;
}

ExperimentReport run_boxdim_experiment(const nlohmann::json& config, std::uint64_t seed) {
  const auto t0 = Clock::now();
  ExperimentReport rep = start_report("boxdim", seed);
  const auto samples = param<std::size_t>(config, "samples", 10000);
  const auto rho_max = param<double>(config, "rho_max", 0.3);
  const auto rho_min = param<double>(config, "rho_min", 0.03);
  const auto steps = param<std::size_t>(config, "steps", 8);
  const auto tolerance = param<double>(config, "tolerance", 0.3);
  rep.config.update(
      {{"samples", samples}, {"rho_max", rho_max}, {"rho_min", rho_min}, {"steps", steps}, {"tolerance", tolerance}});

  const auto grid = geometric_grid(rho_max, rho_min, steps);
  Rng seg_rng = make_named_stream(seed, "boxdim/segment");
  Rng disk_rng = make_named_stream(seed, "boxdim/disk");
  const BoxCountResult seg = box_counting_dim(sample_segment(seg_rng, samples), grid);
  const BoxCountResult disk = box_counting_dim(sample_disk(disk_rng, samples), grid);
  rep.metrics["rho_grid"] = grid;
  rep.metrics["segment"] = {{"estimate", seg.estimate}, {"counts", seg.counts}};
  rep.metrics["disk"] = {{"estimate", disk.estimate}, {"counts", disk.counts}};
  rep.checks["segment_dimension"] = std::abs(seg.estimate - 1.0) <= tolerance;
  rep.checks["disk_dimension"] = std::abs(disk.estimate - 2.0) <= tolerance;
  rep.wall_time = seconds_since(t0);
  return rep;
}

}  // namespace uncertainty
