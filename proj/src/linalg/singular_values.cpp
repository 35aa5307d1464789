// One-sided (Hestenes) Jacobi: pairs of rows are rotated until every pair is
// numerically orthogonal; the row norms are then the singular values. Works
// on whichever of A, A^H has fewer rows. Converges quadratically and keeps
// small singular values to high relative accuracy, which the rank threshold
// relies on.

#include <algorithm>
#include <cmath>
#include <limits>

#include "uncertainty/kernels.hpp"
#include "uncertainty/linalg.hpp"

namespace uncertainty {

namespace {

constexpr int kMaxSweeps = 80;

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& a) {
  ComplexMatrix w = a.rows() <= a.cols() ? a : a.adjoint();
  const std::size_t n_rows = w.rows();
  const std::size_t len = w.cols();
  const auto& k = kernels::active();
  const double eps = std::numeric_limits<double>::epsilon();

  std::vector<double> sq(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) sq[i] = k.norm2_sq(w.row(i).data(), len);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n_rows; ++i) {
      for (std::size_t j = i + 1; j < n_rows; ++j) {
        const double alpha = sq[i];
        const double beta = sq[j];
        if (alpha == 0.0 || beta == 0.0) continue;
        const cd gamma = k.dotc(w.row(i).data(), w.row(j).data(), len);
        const double g = std::abs(gamma);
        if (g <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;

        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // Phase-align row j with row i, apply the real rotation, then undo
        // the phase on the new row j (a unit scaling, harmless).
        const cd phase = gamma / g;
        k.rotate(w.row(i).data(), w.row(j).data(), c, -s * std::conj(phase), len);
        sq[i] = k.norm2_sq(w.row(i).data(), len);
        sq[j] = k.norm2_sq(w.row(j).data(), len);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) sv[i] = std::sqrt(sq[i]);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace uncertainty
