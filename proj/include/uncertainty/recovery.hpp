#pragma once

// Recovery procedures: linear recovery of erased-plus-noisy observations,
// l1 denoising onto the span of U_Q, basis pursuit, and the (P0)/(P1)
// separation programs for w = A y + B z.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uncertainty/index_set.hpp"
#include "uncertainty/linalg.hpp"

namespace uncertainty {

struct SolverConfig {
  std::size_t max_iterations = 50000;
  double abs_tolerance = 1e-8;
  double rel_tolerance = 1e-6;
  double penalty = 1.0;
  std::uint64_t seed = 0;

  // DomainError unless tolerances and penalty are positive.
  void validate() const;
};

enum class SolverStatus { Converged, MaxIter, Infeasible };
std::string to_string(SolverStatus s);

// Per-iteration residuals, filled when a trace is passed to a solver.
struct SolverTrace {
  std::vector<double> primal_residual;
  std::vector<double> dual_residual;
};

struct StableRecovery {
  ComplexVector p_hat;
  double constant_c;  // 1 / (1 - Delta)
  double delta;
};

// Solves (I - D_P P_Q(U)) x = D_{P^c} y_obs by LU. Throws
// NotRecoverableError when Delta_{P,Q}(U) >= 1 - 1e-9.
StableRecovery stable_linear_recovery(const UnitaryMatrix& u, const IndexSet& q, const IndexSet& p,
                                      std::span<const cd> y_obs);

struct DenoiseResult {
  ComplexVector estimate;      // U_Q c
  ComplexVector coefficients;  // c
  double objective = 0.0;      // ||y_obs - U_Q c||_1
  SolverStatus status = SolverStatus::MaxIter;
  std::size_t iterations = 0;
};

// argmin over w in span(U_Q) of ||y_obs - w||_1.
DenoiseResult l1_subspace_denoise(const UnitaryMatrix& u, const IndexSet& q, std::span<const cd> y_obs,
                                  const SolverConfig& cfg = {}, SolverTrace* trace = nullptr);

struct BasisPursuitResult {
  ComplexVector x;
  double objective = 0.0;  // ||x||_1
  double residual = 0.0;   // ||M x - b||_2
  SolverStatus status = SolverStatus::MaxIter;
  std::size_t iterations = 0;
};

// minimize ||x||_1 subject to M x = b. The returned x is projected onto the
// affine set whatever the status; status is Infeasible when b is not in the
// range of M.
BasisPursuitResult basis_pursuit(const ComplexMatrix& m, std::span<const cd> b, const SolverConfig& cfg = {},
                                 SolverTrace* trace = nullptr);

struct SeparationProblem {
  Dictionary a;                 // m x p
  std::optional<Dictionary> b;  // m x q; absent when there is no interference (q = 0)
  ComplexVector w;
  std::size_t sparsity_s = 0;
  std::optional<ComplexVector> planted_y;
  std::optional<ComplexVector> planted_z;

  // DimensionError on inconsistent shapes.
  void validate() const;
};

struct SeparationSolution {
  ComplexVector y;
  ComplexVector z;
  double objective = 0.0;             // ||y||_1 for (P1), ||y||_0 for (P0)
  double feasibility_residual = 0.0;  // ||A y + B z - w||_2
  SolverStatus status = SolverStatus::MaxIter;
  std::size_t iterations = 0;         // ADMM iterations or supports tried
  std::optional<std::vector<std::size_t>> support;  // (P0) only, 1-based
};

// (P1): minimize ||y||_1 subject to A y in w + range(B). The nuisance z is
// eliminated with an orthonormal basis N of range(B)^perp; basis pursuit runs
// on N^H A y = N^H w and z is then the least-squares fit of w - A y.
// ValidationError when B is rank deficient.
SeparationSolution separate_p1(const SeparationProblem& prob, const SolverConfig& cfg = {},
                               SolverTrace* trace = nullptr);

// (P0) by exhaustive search over supports of size 0..max_support, smallest
// size first and lexicographic within a size. Requires p <= 24.
SeparationSolution separate_p0(const SeparationProblem& prob, std::size_t max_support,
                               const SolverConfig& cfg = {});

// True when alt_y is feasible, differs from solution.y and has the same l1
// norm to within tol: the (P1) minimizer is then not unique.
bool near_degenerate(const SeparationProblem& prob, const SeparationSolution& solution, std::span<const cd> alt_y,
                     double tol = 1e-6);

struct ThresholdCheck {
  bool holds;
  double lhs;  // 2 s q
  double rhs;  // f_ab(2s, q)
};
ThresholdCheck separation_threshold(const Dictionary& a, const Dictionary& b, std::size_t s, std::size_t q);

nlohmann::json to_json(const SolverConfig& cfg);
SolverConfig solver_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SeparationProblem& prob);
SeparationProblem separation_problem_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SeparationSolution& sol);
nlohmann::json to_json(const SolverTrace& trace);
nlohmann::json to_json(const ThresholdCheck& t);

}  // namespace uncertainty
