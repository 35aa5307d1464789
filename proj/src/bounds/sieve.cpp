#include <algorithm>
#include <cmath>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"

namespace uncertainty {

namespace {

// Members of P followed by the same members shifted by m.
std::vector<double> extended_points(const IndexSet& p) {
  std::vector<double> pts;
  pts.reserve(2 * p.size());
  for (std::size_t i : p.members()) pts.push_back(static_cast<double>(i));
  for (std::size_t i : p.members()) pts.push_back(static_cast<double>(i + p.universe()));
  return pts;
}

}  // namespace

double nyquist_density(const IndexSet& p, double lambda) {
  const auto m = static_cast<double>(p.universe());
  if (!(lambda > 0.0) || lambda > m) throw DomainError("window length must lie in (0, m]");
  if (p.is_empty()) return 0.0;
  const auto pts = extended_points(p);
  std::size_t best = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    // pts is increasing, so count the run starting at the anchor.
    const double end = pts[a] + lambda;
    const auto stop = std::lower_bound(pts.begin() + static_cast<std::ptrdiff_t>(a), pts.end(), end);
    best = std::max(best, static_cast<std::size_t>(stop - (pts.begin() + static_cast<std::ptrdiff_t>(a))));
  }
  return static_cast<double>(best) / lambda;
}

std::vector<double> sieve_lambda_grid(const IndexSet& p) {
  const auto m = static_cast<double>(p.universe());
  std::vector<double> grid{m};
  if (!p.is_empty()) {
    grid.push_back(m / static_cast<double>(p.size()));
    const auto pts = extended_points(p);
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        const double d = pts[b] - pts[a];
        if (d > m) break;
        grid.push_back(d);
      }
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

SieveBound sieve_bound(std::size_t m, const IndexSet& p, std::size_t n, std::optional<double> lambda) {
  if (p.universe() != m) throw DimensionError("P must live in {1, ..., m}");
  if (n < 1 || n > m) throw DomainError("interval length n must lie in [1, m]");
  const auto md = static_cast<double>(m);
  const auto nd = static_cast<double>(n);
  auto eval = [&](double lam) { return std::sqrt((lam * (nd - 1.0) / md + 1.0) * nyquist_density(p, lam)); };
  if (lambda) return {eval(*lambda), *lambda};

  SieveBound best{eval(md), md};
  for (double lam : sieve_lambda_grid(p)) {
    const double b = eval(lam);
    if (b < best.bound) best = {b, lam};
  }
  return best;
}

}  // namespace uncertainty
