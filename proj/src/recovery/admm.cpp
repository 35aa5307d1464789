// Both l1 programs are solved by ADMM (scaled form). The complex soft
// threshold shrinks the modulus and keeps the phase. After the iterations a
// least-squares polish on the detected support removes the O(tolerance)
// bias ADMM leaves behind; it is kept only if it does not worsen the
// objective.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uncertainty/errors.hpp"
#include "uncertainty/factorizations.hpp"
#include "uncertainty/kernels.hpp"
#include "uncertainty/recovery.hpp"

namespace uncertainty {

namespace {

double distance(std::span<const cd> a, std::span<const cd> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<std::size_t> nonzero_indices(std::span<const cd> x) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != cd{}) idx.push_back(i);
  }
  return idx;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(abs_tolerance > 0.0) || !(rel_tolerance > 0.0)) throw DomainError("solver tolerances must be positive");
  if (!(penalty > 0.0)) throw DomainError("solver penalty must be positive");
  if (max_iterations == 0) throw DomainError("solver needs at least one iteration");
}

std::string to_string(SolverStatus s) {
  switch (s) {
    case SolverStatus::Converged:
      return "converged";
    case SolverStatus::MaxIter:
      return "max_iter";
    case SolverStatus::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

BasisPursuitResult basis_pursuit(const ComplexMatrix& m, std::span<const cd> b, const SolverConfig& cfg,
                                 SolverTrace* trace) {
  cfg.validate();
  if (m.rows() != b.size()) throw DimensionError("basis pursuit: rhs length differs from row count");
  const std::size_t n = m.cols();
  const AffineProjector proj(m, b);
  const double b_norm = norm2(b);

  BasisPursuitResult out;
  if (proj.residual() > 1e-6 * std::max(1.0, b_norm)) {
    out.x = proj.particular_solution();
    out.objective = norm1(out.x);
    out.residual = proj.residual();
    out.status = SolverStatus::Infeasible;
    return out;
  }

  const double rho = cfg.penalty;
  const double kappa = 1.0 / rho;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  ComplexVector x(n), z(n), u(n), z_old(n), tmp(n);
  z = proj.particular_solution();

  out.status = SolverStatus::MaxIter;
  std::size_t it = 0;
  while (it < cfg.max_iterations) {
    ++it;
    for (std::size_t i = 0; i < n; ++i) tmp[i] = z[i] - u[i];
    proj.project_into(tmp, x);
    z_old = z;
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + u[i];
    kernels::shrink(tmp, kappa, z);
    for (std::size_t i = 0; i < n; ++i) u[i] += x[i] - z[i];

    const double r_pri = distance(x, z);
    const double r_dual = rho * distance(z, z_old);
    if (trace) {
      trace->primal_residual.push_back(r_pri);
      trace->dual_residual.push_back(r_dual);
    }
    const double eps_pri = sqrt_n * cfg.abs_tolerance + cfg.rel_tolerance * std::max(norm2(x), norm2(z));
    const double eps_dual = sqrt_n * cfg.abs_tolerance + cfg.rel_tolerance * rho * norm2(u);
    if (r_pri <= eps_pri && r_dual <= eps_dual) {
      out.status = SolverStatus::Converged;
      break;
    }
  }
  out.iterations = it;
  out.x = proj.project(z);
  out.objective = norm1(out.x);

  // Polish on supp(z).
  const auto support = nonzero_indices(z);
  if (!support.empty() && support.size() < n) {
    const ComplexVector xs = least_squares(select_columns(m, support), b);
    ComplexVector cand(n);
    for (std::size_t k = 0; k < support.size(); ++k) cand[support[k]] = xs[k];
    const ComplexVector mc = m * std::span<const cd>(cand);
    const double res = distance(mc, b);
    const double obj = norm1(cand);
    if (res <= cfg.abs_tolerance * std::max(1.0, b_norm) && obj <= out.objective * (1.0 + 1e-9) + cfg.abs_tolerance) {
      out.x = std::move(cand);
      out.objective = obj;
    }
  }
  const ComplexVector mx = m * std::span<const cd>(out.x);
  out.residual = distance(mx, b);
  return out;
}

DenoiseResult l1_subspace_denoise(const UnitaryMatrix& u, const IndexSet& q, std::span<const cd> y_obs,
                                  const SolverConfig& cfg, SolverTrace* trace) {
  cfg.validate();
  const std::size_t m = u.dim();
  if (q.universe() != m || y_obs.size() != m) throw DimensionError("denoise: sizes differ from U");
  DenoiseResult out;
  if (q.is_empty()) {
    out.estimate.assign(m, cd{});
    out.objective = norm1(y_obs);
    out.status = SolverStatus::Converged;
    return out;
  }
  std::vector<std::size_t> rows(m);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  const ComplexMatrix uq = submatrix(u.matrix(), rows, q.zero_based());
  const ComplexMatrix uqh = uq.adjoint();
  const std::size_t k = q.size();

  // Constraint U_Q c + r = y, objective ||r||_1; U_Q has orthonormal columns
  // so the c-update is a single multiplication by U_Q^H.
  const double rho = cfg.penalty;
  const double sqrt_m = std::sqrt(static_cast<double>(m));
  ComplexVector c(k), r(m), dual(m), r_old(m), tmp(m), uqc(m);
  out.status = SolverStatus::MaxIter;
  std::size_t it = 0;
  while (it < cfg.max_iterations) {
    ++it;
    for (std::size_t i = 0; i < m; ++i) tmp[i] = y_obs[i] - r[i] - dual[i];
    c = uqh * std::span<const cd>(tmp);
    uqc = uq * std::span<const cd>(c);
    r_old = r;
    for (std::size_t i = 0; i < m; ++i) tmp[i] = y_obs[i] - uqc[i] - dual[i];
    kernels::shrink(tmp, 1.0 / rho, r);
    double r_pri_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const cd gap = uqc[i] + r[i] - y_obs[i];
      dual[i] += gap;
      r_pri_sq += std::norm(gap);
    }
    for (std::size_t i = 0; i < m; ++i) tmp[i] = r[i] - r_old[i];
    const double r_pri = std::sqrt(r_pri_sq);
    const double r_dual = rho * norm2(uqh * std::span<const cd>(tmp));
    if (trace) {
      trace->primal_residual.push_back(r_pri);
      trace->dual_residual.push_back(r_dual);
    }
    const double eps_pri =
        sqrt_m * cfg.abs_tolerance + cfg.rel_tolerance * std::max({norm2(uqc), norm2(r), norm2(y_obs)});
    const double eps_dual = std::sqrt(static_cast<double>(k)) * cfg.abs_tolerance +
                            cfg.rel_tolerance * rho * norm2(uqh * std::span<const cd>(dual));
    if (r_pri <= eps_pri && r_dual <= eps_dual) {
      out.status = SolverStatus::Converged;
      break;
    }
  }
  out.iterations = it;
  out.coefficients = c;
  out.estimate = uq * std::span<const cd>(c);
  auto objective_of = [&](const ComplexVector& est) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::abs(y_obs[i] - est[i]);
    return s;
  };
  out.objective = objective_of(out.estimate);

  // Polish: exact fit on the rows where the residual vanished.
  std::vector<std::size_t> clean;
  for (std::size_t i = 0; i < m; ++i) {
    if (r[i] == cd{}) clean.push_back(i);
  }
  if (clean.size() >= k && clean.size() < m) {
    ComplexVector y_clean(clean.size());
    for (std::size_t i = 0; i < clean.size(); ++i) y_clean[i] = y_obs[clean[i]];
    const ComplexVector c_ls = least_squares(submatrix(u.matrix(), clean, q.zero_based()), y_clean);
    ComplexVector est = uq * std::span<const cd>(c_ls);
    const double obj = objective_of(est);
    if (obj <= out.objective * (1.0 + 1e-9) + cfg.abs_tolerance) {
      out.coefficients = c_ls;
      out.estimate = std::move(est);
      out.objective = obj;
    }
  }
  return out;
}

}  // namespace uncertainty
