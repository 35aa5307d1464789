#include <algorithm>
#include <cmath>
#include <numeric>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/factorizations.hpp"
#include "uncertainty/recovery.hpp"

namespace uncertainty {

namespace {

constexpr std::size_t kMaxExhaustiveColumns = 24;

// Constraint A y in w + range(B) rewritten as N^H A y = N^H w. `reduced` is
// empty when range(B) is everything, i.e. there is no constraint on y.
struct Reduction {
  std::optional<ComplexMatrix> reduced;
  ComplexVector rhs;
};

Reduction reduce(const SeparationProblem& prob) {
  prob.validate();
  Reduction r;
  if (!prob.b) {
    r.reduced = prob.a.matrix();
    r.rhs = prob.w;
    return r;
  }
  const OrthonormalBasis nb = range_complement(prob.b->matrix());
  if (nb.rank < prob.b->cols()) {
    throw ValidationError("B is rank deficient (rank " + std::to_string(nb.rank) + " < " +
                          std::to_string(prob.b->cols()) + " columns)");
  }
  if (!nb.basis) return r;
  const ComplexMatrix nh = nb.basis->adjoint();
  r.reduced = nh * prob.a.matrix();
  r.rhs = nh * std::span<const cd>(prob.w);
  return r;
}

// Fill z = B^+ (w - A y) and the residual ||A y + B z - w||.
void complete(const SeparationProblem& prob, SeparationSolution& sol) {
  const ComplexVector ay = prob.a.matrix() * std::span<const cd>(sol.y);
  ComplexVector gap(prob.w.size());
  for (std::size_t i = 0; i < gap.size(); ++i) gap[i] = prob.w[i] - ay[i];
  if (prob.b) {
    sol.z = least_squares(prob.b->matrix(), gap);
    const ComplexVector bz = prob.b->matrix() * std::span<const cd>(sol.z);
    for (std::size_t i = 0; i < gap.size(); ++i) gap[i] -= bz[i];
  } else {
    sol.z.clear();
  }
  sol.feasibility_residual = norm2(gap);
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void SeparationProblem::validate() const {
  if (b && a.rows() != b->rows()) throw DimensionError("A and B must have the same number of rows");
  if (w.size() != a.rows()) throw DimensionError("w must have one entry per row of A");
  if (planted_y && planted_y->size() != a.cols()) throw DimensionError("planted y must have one entry per column of A");
  if (planted_z && planted_z->size() != (b ? b->cols() : 0)) throw DimensionError("planted z must have one entry per column of B");
}

SeparationSolution separate_p1(const SeparationProblem& prob, const SolverConfig& cfg, SolverTrace* trace) {
  cfg.validate();
  const Reduction red = reduce(prob);
  SeparationSolution sol;
  if (!red.reduced) {
    sol.y.assign(prob.a.cols(), cd{});
    sol.status = SolverStatus::Converged;
  } else {
    BasisPursuitResult bp = basis_pursuit(*red.reduced, red.rhs, cfg, trace);
    sol.y = std::move(bp.x);
    sol.status = bp.status;
    sol.iterations = bp.iterations;
  }
  sol.objective = norm1(sol.y);
  complete(prob, sol);
  return sol;
}

SeparationSolution separate_p0(const SeparationProblem& prob, std::size_t max_support, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t p = prob.a.cols();
  if (p > kMaxExhaustiveColumns) {
    throw DomainError("exhaustive (P0) search is limited to " + std::to_string(kMaxExhaustiveColumns) + " columns of A");
  }
  const Reduction red = reduce(prob);
  SeparationSolution sol;
  sol.y.assign(p, cd{});
  sol.status = SolverStatus::Infeasible;

  if (!red.reduced) {
    sol.status = SolverStatus::Converged;
    sol.support = std::vector<std::size_t>{};
    complete(prob, sol);
    return sol;
  }
  const double tol = cfg.abs_tolerance * std::max(1.0, norm2(red.rhs));
  std::size_t tried = 0;
  for (std::size_t k = 0; k <= std::min(max_support, p); ++k) {
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    do {
      ++tried;
      ComplexVector y(p);
      double res = 0.0;
      if (k == 0) {
        res = norm2(red.rhs);
      } else {
        const ComplexMatrix sub = select_columns(*red.reduced, cols);
        const ComplexVector ys = least_squares(sub, red.rhs);
        ComplexVector fit = sub * std::span<const cd>(ys);
        for (std::size_t i = 0; i < fit.size(); ++i) fit[i] -= red.rhs[i];
        res = norm2(fit);
        for (std::size_t j = 0; j < k; ++j) y[cols[j]] = ys[j];
      }
      if (res <= tol) {
        sol.y = std::move(y);
        sol.status = SolverStatus::Converged;
        std::vector<std::size_t> one_based(k);
        for (std::size_t j = 0; j < k; ++j) one_based[j] = cols[j] + 1;
        sol.support = std::move(one_based);
        sol.objective = static_cast<double>(k);
        sol.iterations = tried;
        complete(prob, sol);
        return sol;
      }
    } while (k > 0 && next_combination(cols, p));
  }
  sol.iterations = tried;
  complete(prob, sol);
  return sol;
}

bool near_degenerate(const SeparationProblem& prob, const SeparationSolution& solution, std::span<const cd> alt_y,
                     double tol) {
  if (alt_y.size() != prob.a.cols()) throw DimensionError("alternative y has the wrong length");
  SeparationSolution alt;
  alt.y.assign(alt_y.begin(), alt_y.end());
  complete(prob, alt);
  if (alt.feasibility_residual > tol * std::max(1.0, norm2(prob.w))) return false;
  double diff = 0.0;
  for (std::size_t i = 0; i < alt_y.size(); ++i) diff = std::max(diff, std::abs(alt_y[i] - solution.y[i]));
  return diff > tol && std::abs(norm1(alt_y) - norm1(solution.y)) <= tol;
}

ThresholdCheck separation_threshold(const Dictionary& a, const Dictionary& b, std::size_t s, std::size_t q) {
  const double lhs = 2.0 * static_cast<double>(s) * static_cast<double>(q);
  const double rhs = f_ab(a, b, 2.0 * static_cast<double>(s), static_cast<double>(q));
  // Strict inequality; values equal up to rounding count as a violation.
  return {lhs < rhs - 1e-9 * std::max(1.0, rhs), lhs, rhs};
}

}  // namespace uncertainty
