#include <algorithm>
#include <cmath>
#include <numeric>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/kernels.hpp"

namespace uncertainty {

namespace {

void check_universe(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  if (p.universe() != u.dim() || q.universe() != u.dim()) {
    throw DimensionError("index sets must live in {1, ..., m} with m the size of U");
  }
}

std::vector<std::size_t> all_indices(std::size_t m) {
  std::vector<std::size_t> v(m);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

double delta(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  check_universe(u, p, q);
  if (p.is_empty() || q.is_empty()) return 0.0;
  return op_norm_2(submatrix(u.matrix(), p.zero_based(), q.zero_based()));
}

double sigma(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  check_universe(u, p, q);
  if (p.is_empty() || q.is_empty()) return 0.0;
  // Rows P of U D_Q U^H: U[P, Q] times (U[:, Q])^H.
  const auto cols = q.zero_based();
  const ComplexMatrix upq = submatrix(u.matrix(), p.zero_based(), cols);
  const ComplexMatrix uq = submatrix(u.matrix(), all_indices(u.dim()), cols);
  return op_norm_1(upq * uq.adjoint());
}

Interval frobenius_bounds(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  check_universe(u, p, q);
  if (p.is_empty() || q.is_empty()) return {0.0, 0.0};
  // tr(D_P U D_Q U^H) = sum_{i in P, j in Q} |U_ij|^2
  const ComplexMatrix upq = submatrix(u.matrix(), p.zero_based(), q.zero_based());
  const double tr = kernels::norm2_sq(upq.entries());
  const auto k = static_cast<double>(std::min(p.size(), q.size()));
  return {std::sqrt(tr / k), std::sqrt(tr)};
}

Interval dft_bounds(std::size_t m, std::size_t p_size, std::size_t q_size) {
  if (m == 0) throw DimensionError("DFT size must be at least 1");
  if (p_size == 0 || q_size == 0) return {0.0, 0.0};
  const auto md = static_cast<double>(m);
  return {std::sqrt(static_cast<double>(std::max(p_size, q_size)) / md),
          std::sqrt(static_cast<double>(p_size * q_size) / md)};
}

double identity_coherence(const UnitaryMatrix& u) {
  return coherence(Dictionary(hconcat(ComplexMatrix::identity(u.dim()), u.matrix())));
}

double coherence_bound_2(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  check_universe(u, p, q);
  if (p.is_empty() || q.is_empty()) return 0.0;
  return std::sqrt(static_cast<double>(p.size() * q.size())) * identity_coherence(u);
}

double coherence_bound_1(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  check_universe(u, p, q);
  if (p.is_empty() || q.is_empty()) return 0.0;
  const double mu = identity_coherence(u);
  return static_cast<double>(p.size() * q.size()) * mu * mu;
}

}  // namespace uncertainty
