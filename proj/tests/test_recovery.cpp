#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "helpers.hpp"
#include "uncertainty/io.hpp"
#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"
#include "uncertainty/factorizations.hpp"
#include "uncertainty/random.hpp"
#include "uncertainty/recovery.hpp"

using namespace uncertainty;

namespace {

// Real basis pursuit is a linear program; its optimum sits on a basic
// solution, so the smallest l1 norm over all rank-sized supports is exact.
double bp_oracle(const ComplexMatrix& m, std::span<const cd> b) {
  const std::size_t r = m.rows(), c = m.cols();
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> pick(c, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < c; ++j)
      if (pick[j]) cols.push_back(j);
    const ComplexMatrix sub = select_columns(m, cols);
    if (numerical_rank(sub) < r) continue;
    const ComplexVector x = solve_square(sub, b);
    best = std::min(best, norm1(x));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace

TEST_CASE("solver config validation") {
  SolverConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.penalty = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.max_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  CHECK(to_string(SolverStatus::Converged) == "converged");
  CHECK(to_string(SolverStatus::MaxIter) == "max_iter");
  CHECK(to_string(SolverStatus::Infeasible) == "infeasible");
  const SolverConfig back = solver_config_from_json(to_json(SolverConfig{}));
  CHECK(back.max_iterations == 50000);
  CHECK_THROWS_AS(solver_config_from_json(json{{"penalty", "x"}}), ParseError);
}

TEST_CASE("basis pursuit hand case") {
  const ComplexMatrix m(1, 2, {1.0, 2.0});
  const ComplexVector b{2.0};
  const BasisPursuitResult r = basis_pursuit(m, b);
  CHECK(r.status == SolverStatus::Converged);
  CHECK(std::abs(r.x[0]) < 1e-8);
  CHECK(std::abs(r.x[1] - cd(1.0)) < 1e-8);
  CHECK(r.objective == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("basis pursuit matches the vertex-enumeration oracle") {
  Rng rng = make_stream(31, 0);
  std::normal_distribution<double> g;
  for (int t = 0; t < 25; ++t) {
    const std::size_t r = 2 + t % 3, c = r + 2 + t % 4;
    ComplexMatrix m(r, c);
    for (auto& e : m.entries()) e = g(rng);
    ComplexVector b(r);
    for (auto& e : b) e = g(rng);
    const BasisPursuitResult res = basis_pursuit(m, b);
    CHECK(res.status == SolverStatus::Converged);
    CHECK(res.residual <= 1e-8 * std::max(1.0, norm2(b)));
    CHECK(res.objective == doctest::Approx(bp_oracle(m, b)).epsilon(1e-5));
  }
}

TEST_CASE("basis pursuit stays feasible when stopped early") {
  Rng rng = make_stream(32, 0);
  const ComplexMatrix m = complex_gaussian_matrix(rng, 4, 9);
  const ComplexVector b = complex_gaussian_vector(rng, 4);
  SolverConfig cfg;
  cfg.max_iterations = 3;
  SolverTrace trace;
  const BasisPursuitResult r = basis_pursuit(m, b, cfg, &trace);
  CHECK(r.status == SolverStatus::MaxIter);
  CHECK(r.residual <= 1e-8 * std::max(1.0, norm2(b)));
  CHECK(trace.primal_residual.size() == 3);
  CHECK(trace.dual_residual.size() == 3);
}

TEST_CASE("basis pursuit reports infeasible systems") {
  const ComplexMatrix m(2, 2, {1.0, 1.0, 1.0, 1.0});
  const ComplexVector b{1.0, 0.0};
  CHECK(basis_pursuit(m, b).status == SolverStatus::Infeasible);
  CHECK_THROWS_AS(basis_pursuit(m, ComplexVector{1.0}), DimensionError);
}

TEST_CASE("stable linear recovery") {
  const std::size_t m = 16;
  const UnitaryMatrix f = UnitaryMatrix::dft(m);
  const IndexSet p = picket_fence(m, 4);
  const IndexSet q = IndexSet::circular_interval(m, 0, 4);
  Rng rng = make_stream(33, 0);
  const ComplexVector c = complex_gaussian_vector(rng, 4);
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const ComplexVector x = submatrix(f.matrix(), all, q.zero_based()) * std::span<const cd>(c);
  const StableRecovery r = stable_linear_recovery(f, q, p, restrict_to(x, p.complement()));
  CHECK(r.delta == doctest::Approx(0.5));
  CHECK(r.constant_c == doctest::Approx(2.0));
  CHECK(testutil::dist(r.p_hat, x) < 1e-10);

  // Q = all of {1..m} and P nonempty: delta = 1.
  try {
    stable_linear_recovery(f, IndexSet::full(m), IndexSet(m, {3}), x);
    FAIL("expected NotRecoverableError");
  } catch (const NotRecoverableError& e) {
    CHECK(e.delta() == doctest::Approx(1.0));
  }
}

TEST_CASE("l1 denoising removes sparse noise") {
  const std::size_t m = 32;
  const UnitaryMatrix f = UnitaryMatrix::dft(m);
  const IndexSet q = IndexSet::circular_interval(m, 3, 2);
  Rng rng = make_stream(34, 0);
  const ComplexVector c = complex_gaussian_vector(rng, 2);
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const ComplexVector x = submatrix(f.matrix(), all, q.zero_based()) * std::span<const cd>(c);
  ComplexVector y = x;
  y[4] += 5.0;
  y[17] += cd(0, -3);
  y[30] += 2.0;
  SolverTrace trace;
  const DenoiseResult r = l1_subspace_denoise(f, q, y, {}, &trace);
  CHECK(r.status == SolverStatus::Converged);
  CHECK(testutil::dist(r.estimate, x) < 1e-6);
  CHECK(testutil::dist(r.coefficients, c) < 1e-6);
  CHECK(r.objective == doctest::Approx(10.0).epsilon(1e-6));
  CHECK_FALSE(trace.primal_residual.empty());
}

TEST_CASE("separation below threshold") {
  const std::size_t m = 16;
  const Dictionary f(dft_matrix(m));
  const Dictionary b(picket_columns(m));
  const ThresholdCheck th = separation_threshold(f, b, 1, 4);
  CHECK(th.holds);
  CHECK(th.lhs == 8.0);
  // mu(F) = 0, mu(B) = 0, mu_bar = 1/4 (columns of B are unit vectors).
  CHECK(th.rhs == doctest::Approx(16.0));

  ComplexVector y(m);
  y[5] = cd(0.3, -1.1);
  const ComplexVector z{1.0, cd(0, 2), -0.5, 0.25};
  ComplexVector w = f.matrix() * std::span<const cd>(y);
  const ComplexVector bz = b.matrix() * std::span<const cd>(z);
  for (std::size_t i = 0; i < m; ++i) w[i] += bz[i];
  const SeparationProblem prob{f, b, w, 1, y, z};

  const SeparationSolution s0 = separate_p0(prob, 1);
  CHECK(s0.status == SolverStatus::Converged);
  REQUIRE(s0.support.has_value());
  CHECK(*s0.support == std::vector<std::size_t>{6});
  CHECK(testutil::dist(s0.y, y) < 1e-10);
  CHECK(testutil::dist(s0.z, z) < 1e-10);

  const SeparationSolution s1 = separate_p1(prob);
  CHECK(s1.status == SolverStatus::Converged);
  CHECK(testutil::dist(s1.y, y) < 1e-6);
  CHECK(testutil::dist(s1.z, z) < 1e-6);
  CHECK(s1.feasibility_residual < 1e-8);
}

TEST_CASE("separation without interference") {
  const Dictionary id(ComplexMatrix::identity(3));
  const ComplexVector w{0.0, 2.0, 0.0};
  const SeparationProblem prob{id, std::nullopt, w, 1, std::nullopt, std::nullopt};
  const SeparationSolution s0 = separate_p0(prob, 1);
  CHECK(s0.status == SolverStatus::Converged);
  CHECK(testutil::dist(s0.y, w) < 1e-12);
  CHECK(s0.z.empty());
  const SeparationSolution s1 = separate_p1(prob);
  CHECK(testutil::dist(s1.y, w) < 1e-8);
}

TEST_CASE("problem validation and json round trip") {
  const Dictionary f(dft_matrix(4));
  const Dictionary b(ComplexMatrix::identity(3));
  const SeparationProblem bad{f, b, ComplexVector(4), 1, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(bad.validate(), DimensionError);

  const CounterexampleReport cx = counterexample(16);
  const SeparationProblem prob = counterexample_problem(cx);
  const SeparationProblem back = separation_problem_from_json(json::parse(to_json(prob).dump()));
  CHECK(max_abs_difference(back.a.matrix(), prob.a.matrix()) == 0.0);
  CHECK(back.w == prob.w);
  CHECK(back.sparsity_s == 2);
  REQUIRE(back.planted_y.has_value());
  CHECK(*back.planted_y == *prob.planted_y);

  CHECK_THROWS_AS(separation_problem_from_json(json::object()), ParseError);
  CHECK_THROWS_AS(separation_problem_from_json(json::array()), ParseError);
}

TEST_CASE("counterexample problem is ambiguous for P1") {
  const CounterexampleReport cx = counterexample(16);
  const SeparationProblem prob = counterexample_problem(cx);
  const SeparationSolution s1 = separate_p1(prob);
  CHECK(s1.objective == doctest::Approx(2.0).epsilon(1e-6));
  const ThresholdCheck th = separation_threshold(prob.a, *prob.b, 2, 4);
  CHECK_FALSE(th.holds);
  const SeparationSolution s0 = separate_p0(prob, 2);
  REQUIRE(s0.support.has_value());
  CHECK(s0.support->size() == 2);
}
