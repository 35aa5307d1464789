#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "uncertainty/io.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"
#include "uncertainty/verify.hpp"

using namespace uncertainty;

TEST_CASE("picket fence and comb vector") {
  CHECK(picket_fence(12, 3).members() == std::vector<std::size_t>{4, 8, 12});
  CHECK_THROWS_AS(picket_fence(12, 5), DomainError);
  const ComplexVector d = comb_vector(8, 4);
  CHECK(d == ComplexVector{0, 0, 0, 1, 0, 0, 0, 1});
  const ComplexMatrix b = picket_columns(9);
  CHECK(b.rows() == 9);
  CHECK(b.cols() == 3);
  CHECK(b(2, 0) == cd(1.0));
  CHECK(b(8, 2) == cd(1.0));
  CHECK_THROWS_AS(picket_columns(10), DomainError);
}

TEST_CASE("comb identity, one hand case") {
  // F d^(2) for m = 4: sqrt(4)/2 d^(2) = d^(2).
  const ComplexVector fd = dft_matrix(4) * std::span<const cd>(comb_vector(4, 2));
  CHECK(testutil::dist(fd, comb_vector(4, 2)) < 1e-15);
}

TEST_CASE("counterexample construction") {
  const CounterexampleReport r = counterexample(16);
  CHECK(r.w_error <= 1e-12);
  const ComplexVector half = [] {
    ComplexVector d = comb_vector(16, 2);
    for (auto& x : d) x *= 0.5;
    return d;
  }();
  CHECK(testutil::dist(r.w, half) < 1e-12);
  CHECK(r.both_feasible);
  CHECK(r.l0_pair == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(r.l1_pair.first == doctest::Approx(2.0));
  CHECK(r.l1_pair.second == doctest::Approx(2.0));
  CHECK_THROWS_AS(counterexample(9), DomainError);
  CHECK_THROWS_AS(counterexample(15), DomainError);
  CHECK(counterexample(64).w_error <= 1e-10);
}

TEST_CASE("injectivity check") {
  Rng rng = make_stream(41, 0);
  const Dictionary a = random_dictionary(rng, 6, 8);
  const Dictionary b = random_dictionary(rng, 6, 2);
  const InjectivityResult r = injectivity_check(a, b, 1, 1);
  CHECK(r.injective);
  CHECK(r.min_sv > 1e-8);
  // C(8, 2) * C(2, 2) maximal subsets.
  CHECK(r.subsets_checked == 28);

  const InjectivityResult c =
      injectivity_check(Dictionary(ComplexMatrix::identity(2)), Dictionary(ComplexMatrix(2, 1, {1.0, 0.0})), 2, 1);
  CHECK_FALSE(c.injective);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->a_columns.size() + c.witness->b_columns.size() == 3);

  // Two equal columns: not injective for s = 1 (needs pairs of A columns).
  ComplexMatrix dup(3, 2, {1.0, 1.0, 0.0, 0.0, 0.0, 0.0});
  const InjectivityResult d = injectivity_check(Dictionary(dup), Dictionary(ComplexMatrix(3, 1, {0.0, 1.0, 0.0})), 1, 0);
  CHECK_FALSE(d.injective);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->a_columns == std::vector<std::size_t>{1, 2});
}

TEST_CASE("concentration Monte Carlo") {
  const ComplexVector u{1.0};
  const ComplexVector v{0.0};
  const MonteCarloEstimate e = com_bound_mc(1, 1, 1.0, u, v, 0.3, 40000, 5);
  CHECK(e.bound == doctest::Approx(0.09));
  CHECK(std::abs(e.empirical - 0.09) <= 4.0 * std::sqrt(0.09 * 0.91 / 40000));
  CHECK(e.trials == 40000);
  const MonteCarloEstimate again = com_bound_mc(1, 1, 1.0, u, v, 0.3, 40000, 5);
  CHECK(again.hits == e.hits);
  CHECK_THROWS_AS(com_bound_mc(1, 1, 1.0, ComplexVector{0.0}, v, 0.3, 10, 5), DomainError);
}

TEST_CASE("large sieve") {
  DiscreteMeasure mu{{0.1, 0.35, 0.9}, {1.0, 2.0, 0.5}};
  // Windows of length 0.3 over the circle: {0.9, 0.1} has mass 1.5 (wraps),
  // {0.1, 0.35} has 3.0.
  CHECK(sup_window_mass(mu, 0.3) == doctest::Approx(3.0));
  CHECK(sup_window_mass(mu, 0.2) == doctest::Approx(2.0));
  CHECK(sup_window_mass(mu, 1.0) == doctest::Approx(3.5));

  TrigPolynomial psi{{1.0, cd(0, 1)}, 0.25};
  const double s = 0.2;
  const cd expect = std::polar(1.0, 2 * std::numbers::pi * 0.25) *
                    (std::polar(1.0, -2 * std::numbers::pi * s) + cd(0, 1) * std::polar(1.0, -4 * std::numbers::pi * s));
  CHECK(std::abs(psi(s) - expect) < 1e-14);

  const SieveCheck chk = sieve_empirical(mu, psi, 0.3);
  CHECK(chk.holds);
  CHECK(chk.rhs == doctest::Approx((2 - 1 + 1 / 0.3) * 3.0 * 2.0));

  DiscreteMeasure bad{{1.2}, {1.0}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("box counting") {
  PointCloud line;
  for (int i = 0; i <= 100; ++i) line.points.push_back({cd(i / 100.0, 0)});
  // Open balls of radius 0.3 around farthest points: 0, 1, 0.5 cover [0, 1] except gaps.
  CHECK(greedy_cover_count(line, 2.0) == 1);
  CHECK(greedy_cover_count(line, 0.3) >= 2);
  Rng rng = make_stream(42, 0);
  const BoxCountResult seg = box_counting_dim(sample_segment(rng, 3000), geometric_grid(0.3, 0.03, 6));
  CHECK(seg.estimate == doctest::Approx(1.0).epsilon(0.3));
  CHECK_THROWS_AS(box_counting_dim(line, {0.1, 0.2}), DomainError);
  const auto g = geometric_grid(1.0, 0.01, 3);
  CHECK(g[1] == doctest::Approx(0.1));
}

TEST_CASE("clipping and inpainting scenarios") {
  const ComplexVector s{cd(3, 4), 1.0, cd(0, -0.5)};
  const ComplexVector c = clip(s, 2.0);
  CHECK(std::abs(c[0] - cd(1.2, 1.6)) < 1e-15);
  CHECK(c[1] == cd(1.0));
  CHECK(clip(ComplexVector{-3.0, 0.5}, 1.0, true) == ComplexVector{-1.0, 0.5});
  CHECK_THROWS_AS(clip(s, 0.0), DomainError);
  CHECK(clipped_support(c, 2.0).members() == std::vector<std::size_t>{1});

  const Dictionary f(dft_matrix(16));
  ComplexVector y(16);
  y[2] = 4.0;
  y[7] = 1.0;
  // |(F y)_k|^2 = (17 + 8 cos phi_k) / 16 over all multiples phi_k of pi/8,
  // so level 1.2 clips exactly the three entries with cos phi_k > 0.755.
  const SeparationProblem full = make_clipping_scenario(y, f, 1.2);
  REQUIRE(full.planted_z.has_value());
  const IndexSet clipped = clipped_support(full.w, 1.2);
  CHECK(clipped.size() == 3);
  const SeparationProblem r = restrict_to_known_support(full, clipped);
  CHECK(separation_threshold(r.a, *r.b, 2, 3).holds);
  r.validate();
  // w = A y + B z with the restricted B.
  ComplexVector lhs = f.matrix() * std::span<const cd>(y);
  const ComplexVector bz = r.b->matrix() * std::span<const cd>(*r.planted_z);
  for (std::size_t i = 0; i < 16; ++i) lhs[i] += bz[i];
  CHECK(testutil::dist(lhs, r.w) < 1e-12);
  const SeparationSolution sol = separate_p1(r);
  CHECK(testutil::dist(sol.y, y) < 1e-5);

  const SeparationProblem in = make_inpainting_scenario(y, f, IndexSet(16, {1, 5, 9}));
  CHECK(in.b->cols() == 3);
  CHECK(in.w[0] == cd(0.0));
  const SeparationProblem none = make_inpainting_scenario(y, f, IndexSet::empty(16));
  CHECK_FALSE(none.b.has_value());
}

TEST_CASE("experiment report json") {
  ExperimentReport r;
  r.name = "x";
  r.checks["a"] = true;
  r.checks["b"] = false;
  r.wall_time = 1.5;
  CHECK_FALSE(r.passed());
  const json j = r.to_json();
  CHECK(j["checks"]["b"] == "fail");
  CHECK(j["wall_time"] == 1.5);
  CHECK(r.to_json(false)["wall_time"].is_null());
}

TEST_CASE("experiment runners with small configs") {
  CHECK(run_counterexample_experiment({{"m", 16}}, 0).passed());
  CHECK(run_injectivity_experiment({{"draws", 5}}, 1).passed());
  CHECK(run_com_mc_experiment({{"trials", 20000}}, 2).passed());
  CHECK(run_sieve_experiment({{"cases", 100}}, 3).passed());
  CHECK_THROWS_AS(run_sieve_experiment({{"cases", "many"}}, 3), ParseError);
}

TEST_CASE("verify registry") {
  const auto& names = verify_suite_names();
  CHECK(names.size() == 21);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK_THROWS_AS(run_verify_suite("nope", 0), DomainError);
  const auto reports = run_verify("picket-exactness,comb-identity", 0);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name == "comb-identity");
  for (const auto& r : reports) CHECK(r.passed());
}

TEST_CASE("every verify suite passes") {
  for (const auto& name : verify_suite_names()) {
    CAPTURE(name);
    const ExperimentReport r = run_verify_suite(name, 0);
    if (!r.passed()) MESSAGE(r.to_json(false).dump());
    CHECK(r.passed());
  }
}
