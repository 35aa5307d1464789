#pragma once

// Delta_{P,Q}(U) = |||D_P P_Q(U)|||_2 and Sigma_{P,Q}(U) = |||D_P P_Q(U)|||_1,
// computed exactly, together with the upper and lower bounds on them.

#include <optional>
#include <vector>

#include <json.hpp>

#include "uncertainty/index_set.hpp"
#include "uncertainty/linalg.hpp"

namespace uncertainty {

// Largest singular value of U restricted to rows P and columns Q; this equals
// |||D_P U D_Q U^H|||_2 because U^H is unitary.
double delta(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q);
// Maximum column abs-sum of D_P U D_Q U^H.
double sigma(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q);

struct Interval {
  double lower;
  double upper;
};

// sqrt(tr(D_P P_Q(U)) / min(|P|,|Q|)) <= Delta <= sqrt(tr(D_P P_Q(U))).
// (0, 0) when P or Q is empty.
Interval frobenius_bounds(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q);
// The same bounds for U = F in closed form: sqrt(max(|P|,|Q|)/m) and
// sqrt(|P||Q|/m).
Interval dft_bounds(std::size_t m, std::size_t p_size, std::size_t q_size);

// mu([I U]), i.e. the largest |U_ij|, via the generic coherence scan.
double identity_coherence(const UnitaryMatrix& u);
double coherence_bound_2(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q);
double coherence_bound_1(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q);

// rho(P, lambda): largest number of points of P u (P + m) in a half-open
// window [p, p + lambda) anchored at a member p, divided by lambda.
// 0 for empty P. lambda must lie in (0, m].
double nyquist_density(const IndexSet& p, double lambda);

// Candidate window lengths: every positive distance (at most m) from a member
// of P to a point of P u (P + m), plus m/|P| and m. On each stretch where the
// window count is constant the bound decreases in lambda, so its minimum over
// (0, m] sits at one of these points.
std::vector<double> sieve_lambda_grid(const IndexSet& p);

struct SieveBound {
  double bound;
  double lambda;
};

// sqrt((lambda (n - 1)/m + 1) rho(P, lambda)) for Q a circular interval of
// length n. With lambda omitted the grid above is searched.
SieveBound sieve_bound(std::size_t m, const IndexSet& p, std::size_t n, std::optional<double> lambda = std::nullopt);

struct PairCoherence {
  double mu_a;
  double mu_b;
  double mu_bar;
};
PairCoherence pair_coherence(const Dictionary& a, const Dictionary& b);

// [1 + mu(A)(1 - u)]_+ [1 + mu(B)(1 - v)]_+ / mubar^2. DomainError when
// mubar = 0 (the bound is then vacuous).
double f_ab(const PairCoherence& c, double u, double v);
double f_ab(const Dictionary& a, const Dictionary& b, double u, double v);

struct L1BudgetBound {
  double bound_pP;  // bound on ||p_P||_1
  double bound_qQ;  // bound on ||q_Q||_1
};
// For A p = B q: ||p_P||_1 <= |P| (mu(A)||p||_1 + mubar ||q||_1)/(1 + mu(A)) and
// the symmetric statement for q.
L1BudgetBound l1_budget_bound(const PairCoherence& c, std::size_t p_size, std::size_t q_size, double p_l1,
                              double q_l1);
L1BudgetBound l1_budget_bound(const Dictionary& a, const Dictionary& b, std::size_t p_size, std::size_t q_size,
                              double p_l1, double q_l1);

struct PairBoundReport {
  double f_value;                      // f_ab(|P|, |Q|)
  std::optional<double> frame1_bound;  // ||p_P||_1 <= frame1 ||p||_1
  std::optional<double> frame2_bound;  // ||q_Q||_1 <= frame2 ||q||_1
  double frame3_lower;                 // |P||Q| >= frame3_lower
  bool admissible;                     // |P||Q| >= frame3_lower
};

PairBoundReport pair_bounds(const PairCoherence& c, std::size_t p_size, std::size_t q_size, double eps_p,
                            double eps_q);
PairBoundReport pair_bounds(const Dictionary& a, const Dictionary& b, const IndexSet& p, const IndexSet& q,
                            double eps_p, double eps_q);

struct UncertaintyReport {
  std::size_t m = 0;
  std::size_t p_size = 0;
  std::size_t q_size = 0;
  double exact_delta = 0.0;
  double exact_sigma = 0.0;
  double frobenius_lower = 0.0;
  double frobenius_upper = 0.0;
  std::optional<double> dft_lower;
  std::optional<double> dft_upper;
  double coherence_bound_2 = 0.0;
  double coherence_bound_1 = 0.0;
  std::optional<double> sieve_bound;
  std::optional<double> sieve_lambda;
};

// DFT and sieve fields are filled only when U matches dft_matrix(m) to 1e-10;
// the sieve fields additionally need Q to be a circular interval.
UncertaintyReport bound_report(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q);

nlohmann::json to_json(const UncertaintyReport& r);
nlohmann::json to_json(const PairBoundReport& r);

}  // namespace uncertainty
