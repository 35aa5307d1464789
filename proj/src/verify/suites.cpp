#include "uncertainty/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/factorizations.hpp"
#include "uncertainty/kernels.hpp"
#include "uncertainty/random.hpp"
#include "uncertainty/recovery.hpp"

namespace uncertainty {

namespace {

using Suite = std::function<void(ExperimentReport&, Rng&)>;

double dist2(std::span<const cd> a, std::span<const cd> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random matrix up to 8x8; every third one is a product of thin factors so
// rank deficiency is exercised.
ComplexMatrix small_matrix(Rng& rng) {
  const std::size_t r = uniform(rng, 1, 8);
  const std::size_t c = uniform(rng, 1, 8);
  if (uniform(rng, 0, 2) == 0) {
    const std::size_t k = uniform(rng, 1, std::min(r, c));
    return complex_gaussian_matrix(rng, r, k) * complex_gaussian_matrix(rng, k, c);
  }
  return complex_gaussian_matrix(rng, r, c);
}

// Entries (a + bj) 2^e with a^2 + b^2 a perfect square, so every modulus and
// every column sum is exact in binary floating point.
ComplexMatrix dyadic_matrix(Rng& rng) {
  static constexpr int kTriples[][2] = {{3, 4}, {5, 12}, {8, 15}, {1, 0}, {0, 1}, {0, 0}};
  const std::size_t r = uniform(rng, 1, 8);
  const std::size_t c = uniform(rng, 1, 8);
  ComplexMatrix a(r, c);
  for (auto& z : a.entries()) {
    const auto& t = kTriples[uniform(rng, 0, 5)];
    const double scale = std::ldexp(1.0, static_cast<int>(uniform(rng, 0, 6)) - 3);
    const double sr = uniform(rng, 0, 1) ? 1.0 : -1.0;
    const double si = uniform(rng, 0, 1) ? 1.0 : -1.0;
    z = {sr * t[0] * scale, si * t[1] * scale};
  }
  return a;
}

// Any nonempty subset whose members are a superset of `base`.
IndexSet grow(Rng& rng, const IndexSet& base) {
  std::vector<std::size_t> members = base.members();
  for (std::size_t i = 1; i <= base.universe(); ++i) {
    if (!base.contains(i) && uniform(rng, 0, 1)) members.push_back(i);
  }
  return IndexSet(base.universe(), std::move(members));
}

std::vector<std::size_t> divisors(std::size_t m) {
  std::vector<std::size_t> d;
  for (std::size_t n = 1; n <= m; ++n) {
    if (m % n == 0) d.push_back(n);
  }
  return d;
}

void suite_dft_unitary(ExperimentReport& rep, Rng&) {
  double worst = 0.0;
  for (std::size_t m : {1, 2, 3, 4, 5, 7, 8, 16, 17, 31, 64, 100, 127, 256, 512, 1024}) {
    const ComplexMatrix f = dft_matrix(m);
    worst = std::max(worst, max_abs_difference(f * f.adjoint(), ComplexMatrix::identity(m)));
  }
  rep.metrics["max_entry_error"] = worst;
  rep.checks["unitary_to_1e-12"] = worst <= 1e-12;
}

void suite_projector_idempotence(ExperimentReport& rep, Rng& rng) {
  double idem = 0.0, herm = 0.0, trace = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = uniform(rng, 1, 12);
    const UnitaryMatrix u = random_unitary(rng, m);
    const IndexSet q = random_subset(rng, m, uniform(rng, 0, m));
    const ComplexMatrix p = projector(u, q);
    const ComplexMatrix d = p * p - p;
    idem = std::max(idem, std::sqrt(kernels::norm2_sq(d.entries())));
    herm = std::max(herm, max_abs_difference(p, p.adjoint()));
    cd tr{};
    for (std::size_t i = 0; i < m; ++i) tr += p(i, i);
    trace = std::max(trace, std::abs(tr - static_cast<double>(q.size())));
  }
  rep.metrics["max_idempotence_error"] = idem;
  rep.metrics["max_hermitian_error"] = herm;
  rep.metrics["max_trace_error"] = trace;
  rep.checks["idempotent"] = idem <= 1e-10;
  rep.checks["hermitian"] = herm <= 1e-10;
  rep.checks["trace_equals_size"] = trace <= 1e-10;
}

void suite_opnorm_sandwich(ExperimentReport& rep, Rng& rng) {
  std::size_t violations = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexMatrix a = small_matrix(rng);
    const double op = op_norm_2(a);
    const double fro = matrix_norms(a).frobenius;
    const auto rank = static_cast<double>(numerical_rank(a));
    const double slack = 1e-12 * fro;
    if (op > fro + slack || (rank > 0 && fro / std::sqrt(rank) > op + slack)) ++violations;
  }
  rep.metrics["violations"] = violations;
  rep.checks["sandwich"] = violations == 0;
}

void suite_opnorm1_column(ExperimentReport& rep, Rng& rng) {
  std::size_t mismatches = 0;
  std::size_t sandwich = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexMatrix a = dyadic_matrix(rng);
    // Probe oracle: the 1-norm of A e_j.
    double probe = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      ComplexVector e(a.cols());
      e[j] = 1.0;
      const ComplexVector col = a * std::span<const cd>(e);
      double s = 0.0;
      for (cd z : col) s += std::abs(z);
      probe = std::max(probe, s);
    }
    const double got = op_norm_1(a);
    if (got != probe) ++mismatches;
    const double l1 = matrix_norms(a).entrywise_l1;
    if (got > l1 || l1 / static_cast<double>(a.cols()) > got) ++sandwich;
  }
  rep.metrics["mismatches"] = mismatches;
  rep.metrics["sandwich_violations"] = sandwich;
  rep.checks["exact_column_formula"] = mismatches == 0;
  rep.checks["sandwich"] = sandwich == 0;
}

void suite_unitary_invariance(ExperimentReport& rep, Rng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = uniform(rng, 1, 8);
    const ComplexMatrix a = complex_gaussian_matrix(rng, m, uniform(rng, 1, 8));
    const UnitaryMatrix u = random_unitary(rng, m);
    const double base = op_norm_2(a);
    worst = std::max(worst, std::abs(op_norm_2(u.matrix() * a) - base) / std::max(1.0, base));
  }
  rep.metrics["max_relative_difference"] = worst;
  rep.checks["invariant_to_1e-10"] = worst <= 1e-10;
}

void suite_frobenius_sandwich(ExperimentReport& rep, Rng& rng) {
  std::size_t violations = 0;
  std::size_t dft_mismatch = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = uniform(rng, 1, 16);
    const bool use_dft = trial % 2 == 0;
    const UnitaryMatrix u = use_dft ? UnitaryMatrix::dft(m) : random_unitary(rng, m);
    const IndexSet p = random_subset(rng, m, uniform(rng, 0, m));
    const IndexSet q = random_subset(rng, m, uniform(rng, 0, m));
    const double d = delta(u, p, q);
    const Interval fb = frobenius_bounds(u, p, q);
    if (fb.lower > d + 1e-9 || d > fb.upper + 1e-9) ++violations;
    if (use_dft) {
      const Interval db = dft_bounds(m, p.size(), q.size());
      if (std::abs(db.lower - fb.lower) > 1e-9 || std::abs(db.upper - fb.upper) > 1e-9) ++dft_mismatch;
    }
  }
  rep.metrics["violations"] = violations;
  rep.metrics["dft_closed_form_mismatches"] = dft_mismatch;
  rep.checks["sandwich"] = violations == 0;
  rep.checks["dft_closed_form"] = dft_mismatch == 0;
}

void suite_sieve_dominance(ExperimentReport& rep, Rng& rng) {
  std::size_t violations = 0;
  std::size_t evaluations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = uniform(rng, 2, 32);
    const UnitaryMatrix f = UnitaryMatrix::dft(m);
    const IndexSet p = random_subset(rng, m, uniform(rng, 0, m));
    const std::size_t n = uniform(rng, 1, m);
    const IndexSet q = IndexSet::circular_interval(m, uniform(rng, 0, m - 1), n);
    const double d = delta(f, p, q);
    std::vector<double> lambdas = sieve_lambda_grid(p);
    for (int k = 0; k < 5; ++k) {
      lambdas.push_back(std::uniform_real_distribution<double>(0.0, static_cast<double>(m))(rng) + 1e-9);
    }
    for (double lam : lambdas) {
      lam = std::min(lam, static_cast<double>(m));
      ++evaluations;
      if (sieve_bound(m, p, n, lam).bound < d - 1e-9) ++violations;
    }
    if (sieve_bound(m, p, n).bound < d - 1e-9) ++violations;
  }
  rep.metrics["evaluations"] = evaluations;
  rep.metrics["violations"] = violations;
  rep.checks["bound_dominates"] = violations == 0;
}

void suite_coherence_dominance(ExperimentReport& rep, Rng& rng) {
  std::size_t v2 = 0, v1 = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = uniform(rng, 1, 12);
    const UnitaryMatrix u = trial % 3 == 0 ? UnitaryMatrix::dft(m) : random_unitary(rng, m);
    const IndexSet p = random_subset(rng, m, uniform(rng, 0, m));
    const IndexSet q = random_subset(rng, m, uniform(rng, 0, m));
    if (coherence_bound_2(u, p, q) < delta(u, p, q) - 1e-10) ++v2;
    if (coherence_bound_1(u, p, q) < sigma(u, p, q) - 1e-10) ++v1;
  }
  rep.metrics["violations_l2"] = v2;
  rep.metrics["violations_l1"] = v1;
  rep.checks["l2_bound_dominates"] = v2 == 0;
  rep.checks["l1_bound_dominates"] = v1 == 0;
}

void suite_monotonicity(ExperimentReport& rep, Rng& rng) {
  std::size_t violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = uniform(rng, 1, 12);
    const UnitaryMatrix u = trial % 2 ? UnitaryMatrix::dft(m) : random_unitary(rng, m);
    const IndexSet p = random_subset(rng, m, uniform(rng, 0, m));
    const IndexSet q = random_subset(rng, m, uniform(rng, 0, m));
    const IndexSet p2 = grow(rng, p);
    const IndexSet q2 = grow(rng, q);
    if (delta(u, p, q) > delta(u, p2, q2) + 1e-10) ++violations;
  }
  rep.metrics["violations"] = violations;
  rep.checks["monotone"] = violations == 0;
}

void suite_picket_exactness(ExperimentReport& rep, Rng&) {
  double worst = 0.0;
  std::size_t configs = 0;
  for (std::size_t m : {8, 16, 32, 64}) {
    const UnitaryMatrix f = UnitaryMatrix::dft(m);
    for (std::size_t n : divisors(m)) {
      const IndexSet p = picket_fence(m, n);
      const double expected = std::sqrt(static_cast<double>(n) / static_cast<double>(m));
      for (std::size_t l = 0; l < m; ++l) {
        worst = std::max(worst, std::abs(delta(f, p, IndexSet::circular_interval(m, l, n)) - expected));
        ++configs;
      }
    }
  }
  rep.metrics["configurations"] = configs;
  rep.metrics["max_error"] = worst;
  rep.checks["exact_to_1e-9"] = worst <= 1e-9;
}

void suite_sieve_tightness(ExperimentReport& rep, Rng&) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t m : {16, 64, 256}) {
    const UnitaryMatrix f = UnitaryMatrix::dft(m);
    for (std::size_t n : divisors(m)) {
      const IndexSet p = picket_fence(m, n);
      const double d = delta(f, p, IndexSet::circular_interval(m, 0, n));
      const double ratio = sieve_bound(m, p, n).bound / d;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  const double at16 = sieve_bound(16, picket_fence(16, 4), 4).bound;
  rep.metrics["min_ratio"] = lo;
  rep.metrics["max_ratio"] = hi;
  rep.metrics["bound_m16_n4"] = at16;
  rep.checks["ratio_in_range"] = lo >= 1.0 - 1e-12 && hi <= std::sqrt(2.0) + 1e-6;
  rep.checks["closed_form_m16_n4"] = std::abs(at16 - std::sqrt(7.0 / 16.0)) <= 1e-12;
}

void suite_frame3_consistency(ExperimentReport& rep, Rng& rng) {
  std::size_t frame3 = 0, budget = 0, frame12 = 0, pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = uniform(rng, 2, 6);
    const std::size_t p = uniform(rng, 1, 6);
    const std::size_t q = uniform(rng, std::max<std::size_t>(1, m + 1 - std::min(m + 1, p)), 6);
    const Dictionary a = random_dictionary(rng, m, p);
    const Dictionary b = random_dictionary(rng, m, q);
    // A p = B q  <=>  (p, q) in ker [A  -B].
    ComplexMatrix ab(m, p + q);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < p; ++j) ab(i, j) = a.matrix()(i, j);
      for (std::size_t j = 0; j < q; ++j) ab(i, p + j) = -b.matrix()(i, j);
    }
    const OrthonormalBasis ker = null_space(ab);
    if (!ker.basis) continue;
    const ComplexVector coeff = complex_gaussian_vector(rng, ker.basis->cols());
    const ComplexVector pq = *ker.basis * std::span<const cd>(coeff);
    const ComplexVector pv(pq.begin(), pq.begin() + static_cast<std::ptrdiff_t>(p));
    const ComplexVector qv(pq.begin() + static_cast<std::ptrdiff_t>(p), pq.end());
    const PairCoherence c = pair_coherence(a, b);
    if (c.mu_bar == 0.0) continue;
    ++pairs;
    // Concentration sets: random subsets, eps measured in the l1 sense.
    const IndexSet ps = random_subset(rng, p, uniform(rng, 0, p));
    const IndexSet qs = random_subset(rng, q, uniform(rng, 0, q));
    const double p1 = norm1(pv), q1 = norm1(qv);
    const double pp1 = norm1(restrict_to(pv, ps)), qq1 = norm1(restrict_to(qv, qs));
    const double eps_p = p1 > 0 ? std::clamp(1.0 - pp1 / p1, 0.0, 1.0) : 0.0;
    const double eps_q = q1 > 0 ? std::clamp(1.0 - qq1 / q1, 0.0, 1.0) : 0.0;
    const PairBoundReport r = pair_bounds(c, ps.size(), qs.size(), eps_p, eps_q);
    if (static_cast<double>(ps.size() * qs.size()) < r.frame3_lower - 1e-9) ++frame3;
    if (r.frame1_bound && pp1 > *r.frame1_bound * p1 + 1e-9) ++frame12;
    if (r.frame2_bound && qq1 > *r.frame2_bound * q1 + 1e-9) ++frame12;
    const L1BudgetBound lb = l1_budget_bound(c, ps.size(), qs.size(), p1, q1);
    if (pp1 > lb.bound_pP + 1e-9 || qq1 > lb.bound_qQ + 1e-9) ++budget;
  }
  rep.metrics["pairs"] = pairs;
  rep.metrics["frame3_violations"] = frame3;
  rep.metrics["frame12_violations"] = frame12;
  rep.metrics["budget_violations"] = budget;
  rep.checks["frame3"] = frame3 == 0;
  rep.checks["frame1_frame2"] = frame12 == 0;
  rep.checks["l1_budget"] = budget == 0;
}

void suite_stable_recovery(ExperimentReport& rep, Rng& rng) {
  std::size_t violations = 0, trials = 0;
  double worst_noiseless = 0.0;
  while (trials < 200) {
    const std::size_t m = uniform(rng, 2, 16);
    const UnitaryMatrix u = trials % 2 ? UnitaryMatrix::dft(m) : random_unitary(rng, m);
    const IndexSet q = random_subset(rng, m, uniform(rng, 1, m));
    const IndexSet p = random_subset(rng, m, uniform(rng, 0, m - 1));
    if (delta(u, p, q) >= 0.95) continue;
    ++trials;
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const ComplexVector c = complex_gaussian_vector(rng, q.size());
    const ComplexVector x = submatrix(u.matrix(), all, q.zero_based()) * std::span<const cd>(c);
    ComplexVector noise = complex_gaussian_vector(rng, m);
    for (auto& z : noise) z *= 0.1;
    ComplexVector obs(m);
    for (std::size_t i = 0; i < m; ++i) obs[i] = (p.contains(i + 1) ? cd{} : x[i]) + noise[i];
    const StableRecovery r = stable_linear_recovery(u, q, p, obs);
    const double err = dist2(r.p_hat, x);
    if (err > r.constant_c * norm2(restrict_to(noise, p.complement())) + 1e-8) ++violations;
    const StableRecovery clean = stable_linear_recovery(u, q, p, restrict_to(x, p.complement()));
    worst_noiseless = std::max(worst_noiseless, dist2(clean.p_hat, x) / std::max(1.0, norm2(x)));
  }
  rep.metrics["violations"] = violations;
  rep.metrics["max_noiseless_error"] = worst_noiseless;
  rep.checks["error_bound"] = violations == 0;
  rep.checks["noiseless_exact"] = worst_noiseless <= 1e-8;
}

void suite_logan(ExperimentReport& rep, Rng& rng) {
  const std::size_t m = 32;
  const UnitaryMatrix f = UnitaryMatrix::dft(m);
  std::size_t failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t qlen = uniform(rng, 1, 3);
    const IndexSet q = IndexSet::circular_interval(m, uniform(rng, 0, m - 1), qlen);
    // |P||Q| < m/2 keeps Sigma below 1/2 via the coherence bound.
    const std::size_t pmax = (m / 2 - 1) / qlen;
    const IndexSet p = random_subset(rng, m, uniform(rng, 1, pmax));
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const ComplexVector c = complex_gaussian_vector(rng, qlen);
    const ComplexVector x = submatrix(f.matrix(), all, q.zero_based()) * std::span<const cd>(c);
    ComplexVector obs = x;
    for (std::size_t i : p.members()) obs[i - 1] += 3.0 * complex_gaussian(rng);
    const DenoiseResult r = l1_subspace_denoise(f, q, obs);
    const double err = dist2(r.estimate, x);
    worst = std::max(worst, err);
    if (err > 1e-6) ++failures;
  }
  rep.metrics["failures"] = failures;
  rep.metrics["max_error"] = worst;
  rep.checks["exact_recovery"] = failures == 0;
}

void suite_separation(ExperimentReport& rep, Rng& rng) {
  const std::size_t m = 16;
  const Dictionary f(dft_matrix(m));
  const Dictionary b(picket_columns(m));
  std::size_t p0_fail = 0, p1_fail = 0, objective = 0;
  for (int trial = 0; trial < 10; ++trial) {
    ComplexVector y(m);
    y[uniform(rng, 0, m - 1)] = complex_gaussian(rng);
    const ComplexVector z = complex_gaussian_vector(rng, b.cols());
    ComplexVector w = f.matrix() * std::span<const cd>(y);
    const ComplexVector bz = b.matrix() * std::span<const cd>(z);
    for (std::size_t i = 0; i < m; ++i) w[i] += bz[i];
    const SeparationProblem prob{f, b, w, 1, y, z};
    const SeparationSolution s0 = separate_p0(prob, 1);
    const SeparationSolution s1 = separate_p1(prob);
    if (dist2(s0.y, y) > 1e-6) ++p0_fail;
    if (dist2(s1.y, y) > 1e-5) ++p1_fail;
    if (s1.objective > norm1(y) + 1e-8) ++objective;
  }
  const ThresholdCheck th = separation_threshold(f, b, 1, b.cols());
  rep.metrics["p0_failures"] = p0_fail;
  rep.metrics["p1_failures"] = p1_fail;
  rep.metrics["threshold"] = to_json(th);
  rep.checks["p0_recovers"] = p0_fail == 0;
  rep.checks["p1_recovers"] = p1_fail == 0;
  rep.checks["objective_sanity"] = objective == 0;
  rep.checks["below_threshold"] = th.holds;
}

void suite_bp_feasibility(ExperimentReport& rep, Rng& rng) {
  std::size_t infeasible = 0, objective = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = uniform(rng, 1, 6);
    const std::size_t cols = uniform(rng, rows, 10);
    const ComplexMatrix mm = complex_gaussian_matrix(rng, rows, cols);
    ComplexVector x0(cols);
    for (std::size_t k = 0; k < uniform(rng, 1, cols); ++k) x0[uniform(rng, 0, cols - 1)] = complex_gaussian(rng);
    const ComplexVector b = mm * std::span<const cd>(x0);
    SolverConfig cfg;
    // Stop early on purpose: feasibility must not depend on convergence.
    cfg.max_iterations = trial % 2 ? 5 : 50000;
    const BasisPursuitResult r = basis_pursuit(mm, b, cfg);
    if (r.residual > cfg.abs_tolerance * std::max(1.0, norm2(b))) ++infeasible;
    if (r.status == SolverStatus::Converged && r.objective > norm1(x0) + cfg.abs_tolerance) ++objective;
  }
  rep.metrics["infeasible"] = infeasible;
  rep.metrics["objective_violations"] = objective;
  rep.checks["always_feasible"] = infeasible == 0;
  rep.checks["objective_sanity"] = objective == 0;
}

void suite_comb_identity(ExperimentReport& rep, Rng&) {
  double worst = 0.0;
  std::size_t pairs = 0;
  for (std::size_t m = 1; m <= 256; ++m) {
    const ComplexMatrix f = dft_matrix(m);
    for (std::size_t a : divisors(m)) {
      const ComplexVector lhs = f * std::span<const cd>(comb_vector(m, a));
      ComplexVector rhs = comb_vector(m, m / a);
      const double scale = std::sqrt(static_cast<double>(m)) / static_cast<double>(a);
      for (auto& z : rhs) z *= scale;
      worst = std::max(worst, dist2(lhs, rhs));
      ++pairs;
    }
  }
  rep.metrics["pairs"] = pairs;
  rep.metrics["max_error"] = worst;
  rep.checks["identity_to_1e-9"] = worst <= 1e-9;
}

void suite_counterexample(ExperimentReport& rep, Rng&) {
  for (std::size_t m : {16, 36}) {
    const CounterexampleReport r = counterexample(m);
    const std::string key = "m" + std::to_string(m);
    rep.metrics[key] = {{"w_error", r.w_error}, {"alternative_residual", r.alternative_residual}};
    rep.checks[key + "_feasible"] = r.both_feasible;
    rep.checks[key + "_equal_norms"] =
        r.l0_pair.first == r.l0_pair.second && std::abs(r.l1_pair.first - r.l1_pair.second) <= 1e-9;
  }
}

void suite_injectivity_monotonicity(ExperimentReport& rep, Rng& rng) {
  std::size_t violations = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = uniform(rng, 2, 6);
    const Dictionary a = random_dictionary(rng, m, uniform(rng, 1, 6));
    const Dictionary b = random_dictionary(rng, m, uniform(rng, 1, 4));
    const std::size_t s = uniform(rng, 0, 3);
    const std::size_t t = uniform(rng, 0, 2);
    if (!injectivity_check(a, b, s, t).injective) continue;
    for (std::size_t s2 = 0; s2 <= s; ++s2) {
      for (std::size_t t2 = 0; t2 <= t; ++t2) {
        if (!injectivity_check(a, b, s2, t2).injective) ++violations;
      }
    }
  }
  rep.metrics["violations"] = violations;
  rep.checks["nested"] = violations == 0;
}

void suite_com_mc(ExperimentReport& rep, Rng& rng) {
  struct Case {
    std::size_t p, m;
    double r, delta;
  };
  const Case cases[] = {{1, 1, 1.0, 0.3}, {2, 2, 1.0, 0.1}, {3, 1, 1.0, 0.2}, {2, 1, 0.5, 0.2}};
  std::size_t violations = 0;
  nlohmann::json per_case = nlohmann::json::array();
  const std::uint64_t sub_seed = rng();
  for (std::size_t i = 0; i < std::size(cases); ++i) {
    const Case& c = cases[i];
    const ComplexVector u = c.p == 1 ? ComplexVector{1.0} : complex_gaussian_vector(rng, c.p);
    const ComplexVector v(c.m);
    const MonteCarloEstimate est = com_bound_mc(c.p, c.m, c.r, u, v, c.delta, 20000, sub_seed + i);
    if (est.empirical > est.bound + 3.0 * est.sigma) ++violations;
    per_case.push_back({{"p", c.p}, {"m", c.m}, {"empirical", est.empirical}, {"bound", est.bound}});
  }
  rep.metrics["cases"] = per_case;
  rep.metrics["violations"] = violations;
  rep.checks["bound_respected"] = violations == 0;
}

void suite_large_sieve(ExperimentReport& rep, Rng& rng) {
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const SieveCase c = random_sieve_case(rng, 32, 16);
    if (!sieve_empirical(c.mu, c.psi, c.delta).holds) ++violations;
  }
  // The uncertainty-relation path: atoms at p/m for p in P, psi carrying the
  // DFT coefficients on an interval, delta = lambda/m.
  double path_gap = 0.0;
  for (std::size_t m : {16, 64}) {
    const std::size_t n = 4;
    const IndexSet p = picket_fence(m, n);
    DiscreteMeasure mu;
    for (std::size_t i : p.members()) {
      mu.locations.push_back(static_cast<double>(i % m) / static_cast<double>(m));
      mu.weights.push_back(1.0);
    }
    TrigPolynomial psi;
    psi.a = complex_gaussian_vector(rng, n);
    const double lam = static_cast<double>(m / n);
    const SieveCheck chk = sieve_empirical(mu, psi, lam / static_cast<double>(m));
    // ||x_P||^2 for x = F_Q a with Q = {1..n}: (1/m) sum_{p in P} |psi(p/m)|^2.
    const ComplexMatrix f = dft_matrix(m);
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const ComplexVector x = submatrix(f, all, IndexSet::circular_interval(m, 0, n).zero_based()) *
                            std::span<const cd>(psi.a);
    const double direct = std::pow(norm2(restrict_to(x, p)), 2);
    path_gap = std::max(path_gap, std::abs(direct - chk.lhs / static_cast<double>(m)));
    if (!chk.holds) ++violations;
  }
  rep.metrics["violations"] = violations;
  rep.metrics["uncertainty_path_gap"] = path_gap;
  rep.checks["no_violations"] = violations == 0;
  rep.checks["matches_direct_energy"] = path_gap <= 1e-10;
}

const std::map<std::string, Suite, std::less<>>& registry() {
  static const std::map<std::string, Suite, std::less<>> suites = {
      {"dft-unitary", suite_dft_unitary},
      {"projector-idempotence", suite_projector_idempotence},
      {"opnorm-sandwich", suite_opnorm_sandwich},
      {"opnorm1-column", suite_opnorm1_column},
      {"unitary-invariance", suite_unitary_invariance},
      {"frobenius-sandwich", suite_frobenius_sandwich},
      {"sieve-dominance", suite_sieve_dominance},
      {"coherence-dominance", suite_coherence_dominance},
      {"monotonicity", suite_monotonicity},
      {"picket-exactness", suite_picket_exactness},
      {"sieve-tightness", suite_sieve_tightness},
      {"frame3-consistency", suite_frame3_consistency},
      {"stable-recovery", suite_stable_recovery},
      {"logan", suite_logan},
      {"separation", suite_separation},
      {"bp-feasibility", suite_bp_feasibility},
      {"comb-identity", suite_comb_identity},
      {"counterexample", suite_counterexample},
      {"injectivity-monotonicity", suite_injectivity_monotonicity},
      {"com-mc", suite_com_mc},
      {"large-sieve", suite_large_sieve},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, suite] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

ExperimentReport run_verify_suite(std::string_view name, std::uint64_t seed) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown verify suite '" + std::string(name) + "'");
  ExperimentReport rep;
  rep.name = it->first;
  rep.config["seed"] = seed;
  Rng rng = make_named_stream(seed, it->first);
  const auto t0 = std::chrono::steady_clock::now();
  it->second(rep, rng);
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<ExperimentReport> run_verify(std::string_view filter, std::uint64_t seed) {
  std::vector<std::string> selected;
  if (filter == "all") {
    selected = verify_suite_names();
  } else {
    std::size_t pos = 0;
    while (pos <= filter.size()) {
      const auto next = filter.find(',', pos);
      const auto part = filter.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (!part.empty()) selected.emplace_back(part);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  }
  if (selected.empty()) throw DomainError("no verify suite selected");
  std::vector<ExperimentReport> out;
  out.reserve(selected.size());
  for (const auto& name : selected) out.push_back(run_verify_suite(name, seed));
  return out;
}

}  // namespace uncertainty
