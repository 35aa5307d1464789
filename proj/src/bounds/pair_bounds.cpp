#include <algorithm>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"

namespace uncertainty {

namespace {

double positive_part(double x) { return std::max(x, 0.0); }

void require_incoherence(const PairCoherence& c) {
  if (c.mu_bar == 0.0) {
    throw DomainError("mutual coherence is zero: the bound is infinite (vacuous)");
  }
}

void require_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("concentration level must lie in [0, 1]");
}

// [(1 + mu)(1 - eps) - mu k]_+
double concentration_factor(double mu, double eps, double k) {
  return positive_part((1.0 + mu) * (1.0 - eps) - mu * k);
}

}  // namespace

PairCoherence pair_coherence(const Dictionary& a, const Dictionary& b) {
  const double mu_bar = mutual_coherence(a, b);
  return {coherence(a), coherence(b), mu_bar};
}

double f_ab(const PairCoherence& c, double u, double v) {
  require_incoherence(c);
  return positive_part(1.0 + c.mu_a * (1.0 - u)) * positive_part(1.0 + c.mu_b * (1.0 - v)) / (c.mu_bar * c.mu_bar);
}

double f_ab(const Dictionary& a, const Dictionary& b, double u, double v) {
  return f_ab(pair_coherence(a, b), u, v);
}

L1BudgetBound l1_budget_bound(const PairCoherence& c, std::size_t p_size, std::size_t q_size, double p_l1,
                              double q_l1) {
  if (p_l1 < 0.0 || q_l1 < 0.0) throw DomainError("norms must be nonnegative");
  const auto ps = static_cast<double>(p_size);
  const auto qs = static_cast<double>(q_size);
  return {ps * (c.mu_a * p_l1 + c.mu_bar * q_l1) / (1.0 + c.mu_a),
          qs * (c.mu_b * q_l1 + c.mu_bar * p_l1) / (1.0 + c.mu_b)};
}

L1BudgetBound l1_budget_bound(const Dictionary& a, const Dictionary& b, std::size_t p_size, std::size_t q_size,
                              double p_l1, double q_l1) {
  return l1_budget_bound(pair_coherence(a, b), p_size, q_size, p_l1, q_l1);
}

PairBoundReport pair_bounds(const PairCoherence& c, std::size_t p_size, std::size_t q_size, double eps_p,
                            double eps_q) {
  require_eps(eps_p);
  require_eps(eps_q);
  require_incoherence(c);
  const auto ps = static_cast<double>(p_size);
  const auto qs = static_cast<double>(q_size);
  const double mubar2 = c.mu_bar * c.mu_bar;
  const double fac_p = concentration_factor(c.mu_a, eps_p, ps);
  const double fac_q = concentration_factor(c.mu_b, eps_q, qs);

  PairBoundReport r;
  r.f_value = f_ab(c, ps, qs);
  if (fac_q > 0.0) r.frame1_bound = ps / (1.0 + c.mu_a) * (c.mu_a + mubar2 * qs / fac_q);
  if (fac_p > 0.0) r.frame2_bound = qs / (1.0 + c.mu_b) * (c.mu_b + mubar2 * ps / fac_p);
  r.frame3_lower = fac_p * fac_q / mubar2;
  r.admissible = ps * qs >= r.frame3_lower;
  return r;
}

PairBoundReport pair_bounds(const Dictionary& a, const Dictionary& b, const IndexSet& p, const IndexSet& q,
                            double eps_p, double eps_q) {
  if (p.universe() != a.cols() || q.universe() != b.cols()) {
    throw DimensionError("P must index columns of A and Q columns of B");
  }
  return pair_bounds(pair_coherence(a, b), p.size(), q.size(), eps_p, eps_q);
}

}  // namespace uncertainty
