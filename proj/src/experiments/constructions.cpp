#include <cmath>

#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"

namespace uncertainty {

namespace {

std::size_t exact_sqrt(std::size_t m) {
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  return n * n == m ? n : 0;
}

double distance(std::span<const cd> a, std::span<const cd> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

IndexSet picket_fence(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || m % n != 0) throw DomainError("picket fence needs n dividing m");
  std::vector<std::size_t> members(n);
  for (std::size_t k = 0; k < n; ++k) members[k] = (k + 1) * (m / n);
  return IndexSet(m, std::move(members));
}

ComplexVector comb_vector(std::size_t m, std::size_t a) {
  if (m == 0 || a == 0 || m % a != 0) throw DomainError("comb vector needs a dividing m");
  ComplexVector d(m);
  for (std::size_t l = a; l <= m; l += a) d[l - 1] = 1.0;
  return d;
}

ComplexMatrix picket_columns(std::size_t m) {
  const std::size_t n = exact_sqrt(m);
  if (n == 0) throw DomainError("picket columns need m to be a perfect square");
  ComplexMatrix b(m, n);
  for (std::size_t l = 1; l <= n; ++l) b(n * l - 1, l - 1) = 1.0;
  return b;
}

CounterexampleReport counterexample(std::size_t m) {
  const std::size_t n = exact_sqrt(m);
  if (n == 0 || n % 2 != 0) throw DomainError("counterexample needs m = n^2 with n even");
  const ComplexMatrix f = dft_matrix(m);
  const ComplexMatrix b = picket_columns(m);

  CounterexampleReport r;
  r.m = m;
  const ComplexVector d2n = comb_vector(m, 2 * n);
  const ComplexVector dn = comb_vector(m, n);
  r.y.resize(m);
  for (std::size_t i = 0; i < m; ++i) r.y[i] = d2n[i] - dn[i];
  r.z.assign(n, 1.0);
  r.y_tilde = d2n;
  r.z_tilde.assign(n, 0.0);

  auto synth = [&](const ComplexVector& y, const ComplexVector& z) {
    ComplexVector out = f * std::span<const cd>(y);
    const ComplexVector bz = b * std::span<const cd>(z);
    for (std::size_t i = 0; i < m; ++i) out[i] += bz[i];
    return out;
  };
  r.w = synth(r.y, r.z);
  ComplexVector closed = comb_vector(m, n / 2);
  for (auto& v : closed) v *= 0.5;
  r.w_error = distance(r.w, closed);
  r.alternative_residual = distance(synth(r.y_tilde, r.z_tilde), r.w);
  r.l0_pair = {count_nonzero(r.y), count_nonzero(r.y_tilde)};
  r.l1_pair = {norm1(r.y), norm1(r.y_tilde)};
  r.both_feasible = r.w_error <= 1e-10 && r.alternative_residual <= 1e-10;
  return r;
}

SeparationProblem counterexample_problem(const CounterexampleReport& r) {
  const std::size_t n = r.z.size();
  return SeparationProblem{Dictionary(dft_matrix(r.m)), Dictionary(picket_columns(r.m)), r.w, n / 2, r.y, r.z};
}

}  // namespace uncertainty
