#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "uncertainty/io.hpp"
#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"
#include "uncertainty/random.hpp"

using namespace uncertainty;

namespace {

// D_P P_Q as a full m x m matrix.
ComplexMatrix limited_projector(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  const ComplexMatrix proj = projector(u, q);
  ComplexMatrix out(u.dim(), u.dim());
  for (std::size_t i : p.members())
    for (std::size_t j = 0; j < u.dim(); ++j) out(i - 1, j) = proj(i - 1, j);
  return out;
}

double max_column_sum(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

TEST_CASE("delta and sigma against full-matrix oracles") {
  Rng rng = make_stream(21, 0);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 2 + t % 9;
    const UnitaryMatrix u = t % 2 ? UnitaryMatrix::dft(m) : random_unitary(rng, m);
    const IndexSet p = random_nonempty_subset(rng, m);
    const IndexSet q = random_nonempty_subset(rng, m);
    const ComplexMatrix dp = limited_projector(u, p, q);
    CHECK(delta(u, p, q) == doctest::Approx(testutil::svd_norm(dp)).epsilon(1e-10));
    CHECK(sigma(u, p, q) == doctest::Approx(max_column_sum(dp)).epsilon(1e-10));
  }
}

TEST_CASE("empty sets give zero") {
  const UnitaryMatrix f = UnitaryMatrix::dft(8);
  const IndexSet e = IndexSet::empty(8);
  const IndexSet q = IndexSet::full(8);
  CHECK(delta(f, e, q) == 0.0);
  CHECK(sigma(f, q, e) == 0.0);
  const UncertaintyReport r = bound_report(f, e, IndexSet::circular_interval(8, 0, 2));
  CHECK(r.exact_delta == 0.0);
  CHECK(r.frobenius_upper == 0.0);
  CHECK(r.coherence_bound_2 == 0.0);
  REQUIRE(r.sieve_bound.has_value());
  CHECK(*r.sieve_bound == 0.0);
}

TEST_CASE("full sets give one") {
  const UnitaryMatrix f = UnitaryMatrix::dft(8);
  CHECK(delta(f, IndexSet::full(8), IndexSet::full(8)) == doctest::Approx(1.0));
  CHECK(delta(f, IndexSet::full(8), IndexSet(8, {3})) == doctest::Approx(1.0));
}

TEST_CASE("picket fence delta") {
  // Delta = sqrt(n / m) for P a picket fence with n points and Q any interval of length n.
  const UnitaryMatrix f = UnitaryMatrix::dft(16);
  CHECK(delta(f, picket_fence(16, 4), IndexSet::circular_interval(16, 5, 4)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(delta(f, picket_fence(16, 2), IndexSet::circular_interval(16, 0, 2)) ==
        doctest::Approx(std::sqrt(2.0 / 16.0)).epsilon(1e-12));
}

TEST_CASE("dft bounds closed form") {
  const Interval i = dft_bounds(16, 4, 4);
  CHECK(i.lower == doctest::Approx(0.5));
  CHECK(i.upper == doctest::Approx(1.0));
  CHECK(dft_bounds(16, 0, 3).upper == 0.0);
  CHECK(dft_bounds(16, 0, 3).lower == 0.0);
  CHECK(dft_bounds(4, 4, 4).upper == 2.0);  // not clipped at 1
}

TEST_CASE("coherence bounds") {
  for (std::size_t m : {2u, 9u, 64u}) {
    const UnitaryMatrix f = UnitaryMatrix::dft(m);
    CHECK(identity_coherence(f) == doctest::Approx(1.0 / std::sqrt(double(m))).epsilon(1e-13));
  }
  const std::size_t m = 16;
  const UnitaryMatrix f = UnitaryMatrix::dft(m);
  const IndexSet p(m, {m});
  const IndexSet q = IndexSet::circular_interval(m, 0, m / 2);
  CHECK(coherence_bound_1(f, p, q) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(sigma(f, p, q) <= 0.5 + 1e-12);
  CHECK(coherence_bound_2(f, p, q) == doctest::Approx(std::sqrt(8.0 / 16.0)).epsilon(1e-13));
}

TEST_CASE("frobenius bounds bracket delta") {
  Rng rng = make_stream(22, 0);
  const UnitaryMatrix u = random_unitary(rng, 10);
  const IndexSet p(10, {1, 2, 5});
  const IndexSet q(10, {3, 4});
  const Interval i = frobenius_bounds(u, p, q);
  const double d = delta(u, p, q);
  CHECK(i.lower <= d + 1e-12);
  CHECK(d <= i.upper + 1e-12);
}

TEST_CASE("nyquist density") {
  const IndexSet p(8, {1, 2});
  CHECK(nyquist_density(p, 8.0) == doctest::Approx(2.0 / 8.0));
  CHECK(nyquist_density(p, 1.0) == doctest::Approx(1.0));
  CHECK(nyquist_density(p, 1.5) == doctest::Approx(2.0 / 1.5));
  // wrap-around: {8, 1} counted together via 8 and 9
  CHECK(nyquist_density(IndexSet(8, {1, 8}), 2.0) == doctest::Approx(1.0));
  CHECK(nyquist_density(IndexSet::empty(8), 3.0) == 0.0);
  CHECK_THROWS_AS(nyquist_density(p, 0.0), DomainError);
  CHECK_THROWS_AS(nyquist_density(p, 9.0), DomainError);
}

TEST_CASE("sieve bound") {
  const SieveBound b = sieve_bound(16, picket_fence(16, 4), 4);
  CHECK(b.bound == doctest::Approx(std::sqrt(7.0 / 16.0)).epsilon(1e-14));
  CHECK(b.lambda == doctest::Approx(4.0));
  CHECK(sieve_bound(16, picket_fence(16, 4), 4, 16.0).bound == doctest::Approx(std::sqrt((16.0 * 3 / 16 + 1) * 0.25)));
  // The grid minimum is the true minimum over (0, m]: a dense scan never beats it.
  Rng rng = make_stream(23, 0);
  for (int t = 0; t < 20; ++t) {
    const IndexSet p = random_nonempty_subset(rng, 12);
    const SieveBound best = sieve_bound(12, p, 3);
    for (int k = 1; k <= 1200; ++k) CHECK(sieve_bound(12, p, 3, k / 100.0).bound >= best.bound - 1e-12);
  }
  CHECK_THROWS_AS(sieve_bound(16, picket_fence(16, 4), 0), DomainError);
}

TEST_CASE("bound report fields") {
  const UnitaryMatrix f = UnitaryMatrix::dft(16);
  const UncertaintyReport r = bound_report(f, picket_fence(16, 4), IndexSet::circular_interval(16, 0, 4));
  CHECK(r.exact_delta == doctest::Approx(0.5));
  REQUIRE(r.dft_lower.has_value());
  CHECK(*r.dft_lower == doctest::Approx(0.5));
  REQUIRE(r.sieve_bound.has_value());
  const json j = to_json(r);
  CHECK(j["exact_delta"].get<double>() == doctest::Approx(0.5));

  Rng rng = make_stream(24, 0);
  const UncertaintyReport g = bound_report(random_unitary(rng, 6), IndexSet(6, {1}), IndexSet(6, {2, 3}));
  CHECK_FALSE(g.dft_lower.has_value());
  CHECK(to_json(g)["dft_lower"].is_null());
  CHECK(to_json(g)["sieve_bound"].is_null());
  CHECK(to_json(bound_report(f, IndexSet(16, {1}), IndexSet(16, {2, 5})))["sieve_bound"].is_null());
}

TEST_CASE("pair coherence quantities") {
  const Dictionary id(ComplexMatrix::identity(16));
  const Dictionary f(dft_matrix(16));
  const PairCoherence c = pair_coherence(id, f);
  CHECK(c.mu_a == 0.0);
  CHECK(c.mu_b == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.mu_bar == doctest::Approx(0.25));
  // mu_a = mu_b = 0: f = 1 / mu_bar^2 = m.
  CHECK(f_ab(c, 5.0, 7.0) == doctest::Approx(16.0));
  const PairCoherence h{0.5, 0.25, 0.5};
  // [1 + 0.5(1 - 3)]_+ = 0, so f = 0.
  CHECK(f_ab(h, 3.0, 1.0) == 0.0);
  CHECK(f_ab(h, 2.0, 2.0) == doctest::Approx(0.5 * 0.75 / 0.25));
  CHECK_THROWS_AS(f_ab(PairCoherence{0.1, 0.1, 0.0}, 1, 1), DomainError);

  const PairBoundReport r = pair_bounds(h, 1, 2, 0.0, 0.0);
  // fac_p = 1.5 - 0.5 = 1, fac_q = 1.25 - 0.5 = 0.75
  CHECK(r.frame3_lower == doctest::Approx(1.0 * 0.75 / 0.25));
  REQUIRE(r.frame1_bound.has_value());
  CHECK(*r.frame1_bound == doctest::Approx(1.0 / 1.5 * (0.5 + 0.25 * 2 / 0.75)));
  REQUIRE(r.frame2_bound.has_value());
  CHECK(*r.frame2_bound == doctest::Approx(2.0 / 1.25 * (0.25 + 0.25 * 1 / 1.0)));
  CHECK_FALSE(r.admissible);
  CHECK_FALSE(pair_bounds(h, 1, 5, 0.0, 0.0).frame1_bound.has_value());
  CHECK_THROWS_AS(pair_bounds(h, 1, 1, 1.5, 0.0), DomainError);

  const L1BudgetBound lb = l1_budget_bound(h, 2, 3, 1.0, 2.0);
  CHECK(lb.bound_pP == doctest::Approx(2 * (0.5 + 1.0) / 1.5));
  CHECK(lb.bound_qQ == doctest::Approx(3 * (0.5 + 0.5) / 1.25));
}
