#pragma once

// Constructions and empirical checks: picket fences, comb vectors, the
// m = n^2 separation counterexample, support-enumeration injectivity,
// Monte Carlo for the concentration-of-measure bound, the large sieve
// inequality, box-counting dimension, and clipping/inpainting scenarios.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uncertainty/index_set.hpp"
#include "uncertainty/linalg.hpp"
#include "uncertainty/random.hpp"
#include "uncertainty/recovery.hpp"

namespace uncertainty {

// {m/n, 2m/n, ..., m}. DomainError unless n divides m.
IndexSet picket_fence(std::size_t m, std::size_t n);
// d^(a): ones at a, 2a, ..., m. DomainError unless a divides m.
ComplexVector comb_vector(std::size_t m, std::size_t a);
// m x sqrt(m) matrix with B_{k,l} = 1 iff k = sqrt(m) l (1-based).
ComplexMatrix picket_columns(std::size_t m);

struct CounterexampleReport {
  std::size_t m = 0;
  ComplexVector w;
  ComplexVector y, z;              // planted
  ComplexVector y_tilde, z_tilde;  // alternative
  std::pair<std::size_t, std::size_t> l0_pair;
  std::pair<double, double> l1_pair;
  double w_error = 0.0;               // ||w - 0.5 d^(sqrt(m)/2)||_2, w = F y + B z
  double alternative_residual = 0.0;  // ||F y_tilde + B z_tilde - w||_2
  bool both_feasible = false;
};

// Requires m = n^2 with n even (DomainError otherwise).
CounterexampleReport counterexample(std::size_t m);
// (A = F, B = picket columns, w) with the planted pair attached, s = sqrt(m)/2.
SeparationProblem counterexample_problem(const CounterexampleReport& r);

struct SupportPair {
  std::vector<std::size_t> a_columns;  // 1-based
  std::vector<std::size_t> b_columns;  // 1-based
};

struct InjectivityResult {
  bool injective = true;
  double min_sv = 0.0;
  std::optional<SupportPair> witness;
  std::size_t subsets_checked = 0;
};

// [A B] is one-to-one on {||p||_0 <= s, ||q||_0 <= t} iff every submatrix with
// min(p, 2s) columns of A and min(q, 2t) columns of B has full column rank
// (smallest singular value above 1e-8). Only these maximal subsets are
// enumerated: a column subset cannot have a smaller least singular value
// than a superset. Requires p, q <= 16.
InjectivityResult injectivity_check(const Dictionary& a, const Dictionary& b, std::size_t s, std::size_t t);

struct MonteCarloEstimate {
  double empirical = 0.0;
  double bound = 0.0;
  double sigma = 0.0;  // binomial standard deviation of `empirical`
  std::size_t hits = 0;
  std::size_t trials = 0;
};

// P[||A u + v||_2 < delta] for A in C^{m x p} with rows uniform on the complex
// ball of radius r, against C(p,m,r) delta^{2m} / ||u||^{2m},
// C = (p / r^2)^m. Trial i draws from stream (seed, i).
MonteCarloEstimate com_bound_mc(std::size_t p, std::size_t m, double r, std::span<const cd> u,
                                std::span<const cd> v, double delta, std::size_t trials, std::uint64_t seed);

struct DiscreteMeasure {
  std::vector<double> locations;  // in [0, 1)
  std::vector<double> weights;    // > 0

  void validate() const;
};

struct TrigPolynomial {
  ComplexVector a;  // a_1 .. a_n
  double phase = 0.0;

  // e^{2 pi j phase} sum_k a_k e^{-2 pi j k s}
  cd operator()(double s) const;
};

struct SieveCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;  // lhs <= rhs + 1e-9
};

// sup_r mu((r, r + delta)) over the 1-periodic extension.
double sup_window_mass(const DiscreteMeasure& mu, double delta);
// lhs = sum_i w_i |psi(t_i)|^2, rhs = (n - 1 + 1/delta) sup-window-mass ||a||^2.
SieveCheck sieve_empirical(const DiscreteMeasure& mu, const TrigPolynomial& psi, double delta);

struct PointCloud {
  std::vector<ComplexVector> points;
};

struct BoxCountResult {
  double estimate = 0.0;
  std::vector<std::size_t> counts;
};

// Centers of open rho-balls picked farthest-point first until everything is
// covered.
std::size_t greedy_cover_count(const PointCloud& cloud, double rho);
// Least-squares slope of log N(rho) against log(1/rho). rho_grid must be
// strictly decreasing, positive, at least two values.
BoxCountResult box_counting_dim(const PointCloud& cloud, const std::vector<double>& rho_grid);

// Modulus clipped to a, phase kept; real mode clips the value to [-a, a].
ComplexVector clip(std::span<const cd> s, double a, bool real_mode = false);
// Entries of w whose modulus reached the clip level.
IndexSet clipped_support(std::span<const cd> w, double a);

// w = g_a(A y), B = I, planted z = g_a(A y) - A y.
SeparationProblem make_clipping_scenario(std::span<const cd> y, const Dictionary& a, double clip_level,
                                         bool real_mode = false);
// The same problem with B cut down to the identity columns in `support`
// (the clipped positions are visible in w, so this is known side
// information). The planted z is restricted accordingly.
SeparationProblem restrict_to_known_support(const SeparationProblem& prob, const IndexSet& support);
// w = A y with the missing entries zeroed; B = identity columns at `missing`,
// planted z = -(A y) on the missing entries.
SeparationProblem make_inpainting_scenario(std::span<const cd> y, const Dictionary& a, const IndexSet& missing);

// Result container shared by the experiment runners and the verify suites.
struct ExperimentReport {
  std::string name;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json metrics = nlohmann::json::object();
  std::map<std::string, bool> checks;  // sorted by name
  std::optional<double> wall_time;     // seconds

  bool passed() const;
  nlohmann::json to_json(bool include_time = true) const;
};

// Experiment runners. Each reads optional parameters from `config` (missing
// keys take the defaults in the README) and records the effective values.
ExperimentReport run_counterexample_experiment(const nlohmann::json& config, std::uint64_t seed);
ExperimentReport run_injectivity_experiment(const nlohmann::json& config, std::uint64_t seed);
ExperimentReport run_com_mc_experiment(const nlohmann::json& config, std::uint64_t seed);
ExperimentReport run_sieve_experiment(const nlohmann::json& config, std::uint64_t seed);
ExperimentReport run_boxdim_experiment(const nlohmann::json& config, std::uint64_t seed);

// Random inputs for the sieve checker: 1..max_atoms atoms, 1..max_n
// coefficients, delta uniform in (0, 1].
struct SieveCase {
  DiscreteMeasure mu;
  TrigPolynomial psi;
  double delta;
};
SieveCase random_sieve_case(Rng& rng, std::size_t max_atoms, std::size_t max_n);

// Samples used by the box-counting experiment.
PointCloud sample_segment(Rng& rng, std::size_t n);
PointCloud sample_disk(Rng& rng, std::size_t n);
std::vector<double> geometric_grid(double start, double stop, std::size_t count);

}  // namespace uncertainty
