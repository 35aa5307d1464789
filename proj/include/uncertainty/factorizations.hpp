#pragma once

// Dense factorizations needed by the recovery programs. Backed by Eigen; the
// toolkit's own spectral routines live in linalg.hpp.

#include <cstddef>
#include <optional>

#include "uncertainty/linalg.hpp"

namespace uncertainty {

// Solve a x = b for square nonsingular a (LU with partial pivoting).
ComplexVector solve_square(const ComplexMatrix& a, std::span<const cd> b);

// Minimum-norm least-squares solution of a x ~= b.
ComplexVector least_squares(const ComplexMatrix& a, std::span<const cd> b);

struct OrthonormalBasis {
  std::optional<ComplexMatrix> basis;  // columns orthonormal; nullopt when the space is {0}
  std::size_t rank = 0;                // rank of the factored matrix
};

// Orthonormal basis of range(a)^perp (m x (m - rank)). Rank cut at
// relative_threshold * sigma_max.
OrthonormalBasis range_complement(const ComplexMatrix& a, double relative_threshold = 1e-10);

// Orthonormal basis of ker(a) (cols x (cols - rank)).
OrthonormalBasis null_space(const ComplexMatrix& a, double relative_threshold = 1e-10);

// Orthogonal projection onto the affine set {x : a x = b}:
//   project(v) = x0 + (v - V V^H v)
// with V an orthonormal basis of the row space of a and x0 the minimum-norm
// solution. `residual` is ||a x0 - b||_2 (nonzero when b is outside range(a)).
class AffineProjector {
 public:
  AffineProjector(const ComplexMatrix& a, std::span<const cd> b, double relative_threshold = 1e-10);

  ComplexVector project(std::span<const cd> v) const;
  void project_into(std::span<const cd> v, std::span<cd> out) const;

  const ComplexVector& particular_solution() const noexcept { return x0_; }
  double residual() const noexcept { return residual_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return x0_.size(); }

 private:
  ComplexVector x0_;
  // Rows are the conjugated basis vectors (V^H, rank x n), row-major.
  std::vector<cd> basis_h_;
  std::size_t rank_ = 0;
  double residual_ = 0.0;
};

}  // namespace uncertainty
