#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"

namespace uncertainty {

void DiscreteMeasure::validate() const {
  if (locations.size() != weights.size()) throw DimensionError("one weight per atom");
  for (double t : locations) {
    if (!(t >= 0.0 && t < 1.0)) throw DomainError("atom locations must lie in [0, 1)");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("atom weights must be positive and finite");
  }
}

cd TrigPolynomial::operator()(double s) const {
  cd acc{};
  for (std::size_t k = 1; k <= a.size(); ++k) {
    // Reduce k s mod 1 before forming the angle.
    const double ks = static_cast<double>(k) * s;
    const double frac = ks - std::floor(ks);
    acc += a[k - 1] * std::polar(1.0, -2.0 * std::numbers::pi * frac);
  }
  return acc * std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

double sup_window_mass(const DiscreteMeasure& mu, double delta) {
  mu.validate();
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta must lie in (0, 1]");
  const std::size_t n = mu.locations.size();
  if (n == 0) return 0.0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return mu.locations[i] < mu.locations[j]; });

  // Atoms over [0, 2): the originals followed by their shifts by one.
  std::vector<double> t(2 * n);
  std::vector<double> w(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = mu.locations[order[i]];
    w[i] = mu.weights[order[i]];
    t[n + i] = t[i] + 1.0;
    w[n + i] = w[i];
  }
  // Window [t_i, t_i + delta) anchored at each original atom; two pointers.
  double best = 0.0;
  double mass = 0.0;
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < n; ++lo) {
    if (hi < lo) {
      hi = lo;
      mass = 0.0;
    }
    while (hi < 2 * n && t[hi] < t[lo] + delta) mass += w[hi++];
    best = std::max(best, mass);
    mass -= w[lo];
  }
  return best;
}

SieveCheck sieve_empirical(const DiscreteMeasure& mu, const TrigPolynomial& psi, double delta) {
  if (psi.a.empty()) throw DimensionError("trigonometric polynomial needs at least one coefficient");
  const double window = sup_window_mass(mu, delta);
  SieveCheck c;
  for (std::size_t i = 0; i < mu.locations.size(); ++i) c.lhs += mu.weights[i] * std::norm(psi(mu.locations[i]));
  const double a_sq = std::pow(norm2(psi.a), 2);
  c.rhs = (static_cast<double>(psi.a.size()) - 1.0 + 1.0 / delta) * window * a_sq;
  c.holds = c.lhs <= c.rhs + 1e-9;
  return c;
}

SieveCase random_sieve_case(Rng& rng, std::size_t max_atoms, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> atoms(1, max_atoms);
  std::uniform_int_distribution<std::size_t> order(1, max_n);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  SieveCase c;
  const std::size_t k = atoms(rng);
  // Half of the cases put atoms on a lattice j/L, the shape the uncertainty
  // relation feeds in; the rest are continuous.
  const bool lattice = unif(rng) < 0.5;
  std::uniform_int_distribution<std::size_t> lattice_size(k, 4 * k);
  const std::size_t l = lattice_size(rng);
  std::vector<std::size_t> taken;
  for (std::size_t i = 0; i < k; ++i) {
    double t = 0.0;
    if (lattice) {
      std::uniform_int_distribution<std::size_t> slot(0, l - 1);
      std::size_t j = slot(rng);
      if (std::find(taken.begin(), taken.end(), j) != taken.end()) continue;
      taken.push_back(j);
      t = static_cast<double>(j) / static_cast<double>(l);
    } else {
      t = unif(rng);
    }
    c.mu.locations.push_back(t);
    c.mu.weights.push_back(1.0 - unif(rng));
  }
  c.psi.a = complex_gaussian_vector(rng, order(rng));
  c.psi.phase = unif(rng);
  c.delta = 1.0 - unif(rng);
  return c;
}

}  // namespace uncertainty
