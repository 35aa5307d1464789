#include <cmath>

#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"
#include "uncertainty/kernels.hpp"

namespace uncertainty {

namespace {

// Uniform point of the complex ball {x in C^p : ||x|| <= r}: Gaussian
// direction in R^{2p}, radius r U^{1/(2p)}.
void sample_ball(Rng& rng, double r, std::span<cd> out) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double sq = 0.0;
  for (auto& z : out) {
    const double re = g(rng);
    const double im = g(rng);
    z = {re, im};
    sq += re * re + im * im;
  }
  const double radius = r * std::pow(unif(rng), 1.0 / (2.0 * static_cast<double>(out.size())));
  const double scale = radius / std::sqrt(sq);
  for (auto& z : out) z *= scale;
}

}  // namespace

MonteCarloEstimate com_bound_mc(std::size_t p, std::size_t m, double r, std::span<const cd> u,
                                std::span<const cd> v, double delta, std::size_t trials, std::uint64_t seed) {
  if (p == 0 || m == 0) throw DimensionError("p and m must be positive");
  if (u.size() != p || v.size() != m) throw DimensionError("u must lie in C^p and v in C^m");
  if (!(r > 0.0) || !(delta > 0.0)) throw DomainError("radius and delta must be positive");
  if (trials == 0) throw DomainError("need at least one trial");
  const double u_norm = norm2(u);
  if (u_norm == 0.0) throw DomainError("u must be nonzero");

  const auto& k = kernels::active();
  const double delta_sq = delta * delta;
  ComplexVector row(p);
  MonteCarloEstimate est;
  est.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = make_stream(seed, trial);
    double sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      sample_ball(rng, r, row);
      sq += std::norm(k.dotc(row.data(), u.data(), p) + v[i]);
    }
    if (sq < delta_sq) ++est.hits;
  }
  const auto n = static_cast<double>(trials);
  est.empirical = static_cast<double>(est.hits) / n;
  est.sigma = std::sqrt(est.empirical * (1.0 - est.empirical) / n);
  const auto md = static_cast<double>(m);
  const double c = std::pow(static_cast<double>(p) / (r * r), md);
  est.bound = c * std::pow(delta / u_norm, 2.0 * md);
  return est;
}

}  // namespace uncertainty
