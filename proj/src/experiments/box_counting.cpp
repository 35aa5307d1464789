#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"

namespace uncertainty {

std::size_t greedy_cover_count(const PointCloud& cloud, double rho) {
  if (cloud.points.empty()) throw DomainError("point cloud is empty");
  if (!(rho > 0.0)) throw DomainError("covering radius must be positive");
  const std::size_t n = cloud.points.size();
  const std::size_t dim = cloud.points.front().size();
  std::vector<cd> flat;
  flat.reserve(n * dim);
  for (const auto& p : cloud.points) {
    if (p.size() != dim) throw DimensionError("points must share one dimension");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  auto dist_sq = [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) s += std::norm(flat[i * dim + k] - flat[j * dim + k]);
    return s;
  };

  // nearest[i]: squared distance from point i to its closest center so far.
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  const double rho_sq = rho * rho;
  std::size_t center = 0;
  std::size_t count = 0;
  while (true) {
    ++count;
    double far = -1.0;
    std::size_t far_idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], dist_sq(i, center));
      if (nearest[i] > far) {
        far = nearest[i];
        far_idx = i;
      }
    }
    if (far < rho_sq) break;  // open balls
    center = far_idx;
  }
  return count;
}

BoxCountResult box_counting_dim(const PointCloud& cloud, const std::vector<double>& rho_grid) {
  if (rho_grid.size() < 2) throw DomainError("need at least two radii");
  for (std::size_t i = 0; i < rho_grid.size(); ++i) {
    if (!(rho_grid[i] > 0.0)) throw DomainError("radii must be positive");
    if (i > 0 && !(rho_grid[i] < rho_grid[i - 1])) throw DomainError("radii must be strictly decreasing");
  }
  BoxCountResult out;
  std::vector<double> x, y;
  for (double rho : rho_grid) {
    const std::size_t c = greedy_cover_count(cloud, rho);
    out.counts.push_back(c);
    x.push_back(std::log(1.0 / rho));
    y.push_back(std::log(static_cast<double>(c)));
  }
  const auto k = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  out.estimate = sxy / sxx;
  return out;
}

PointCloud sample_segment(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  PointCloud c;
  c.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.points.push_back({cd{unif(rng), 0.0}});
  return c;
}

PointCloud sample_disk(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  PointCloud c;
  c.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::sqrt(unif(rng));
    const double theta = 2.0 * std::numbers::pi * unif(rng);
    c.points.push_back({std::polar(r, theta)});
  }
  return c;
}

std::vector<double> geometric_grid(double start, double stop, std::size_t count) {
  if (count < 2 || !(start > stop) || !(stop > 0.0)) throw DomainError("geometric grid needs start > stop > 0");
  std::vector<double> g(count);
  const double ratio = std::pow(stop / start, 1.0 / static_cast<double>(count - 1));
  for (std::size_t i = 0; i < count; ++i) g[i] = start * std::pow(ratio, static_cast<double>(i));
  return g;
}

}  // namespace uncertainty
