#include "uncertainty/factorizations.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "uncertainty/errors.hpp"
#include "uncertainty/kernels.hpp"

namespace uncertainty {

namespace {

using EMatrix = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EVector = Eigen::Matrix<cd, Eigen::Dynamic, 1>;

Eigen::Map<const EMatrix> view(const ComplexMatrix& a) {
  return {a.entries().data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols())};
}

Eigen::Map<const EVector> view(std::span<const cd> x) {
  return {x.data(), static_cast<Eigen::Index>(x.size())};
}

ComplexVector to_vector(const EVector& v) { return ComplexVector(v.data(), v.data() + v.size()); }

ComplexMatrix to_matrix(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::size_t rank_from(const Eigen::VectorXd& sv, double relative_threshold) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = relative_threshold * sv(0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++r;
  }
  return r;
}

}  // namespace

ComplexVector solve_square(const ComplexMatrix& a, std::span<const cd> b) {
  if (!a.is_square() || a.rows() != b.size()) throw DimensionError("solve_square: shape mismatch");
  const Eigen::MatrixXcd dense = view(a);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(dense);
  return to_vector(lu.solve(view(b)));
}

ComplexVector least_squares(const ComplexMatrix& a, std::span<const cd> b) {
  if (a.rows() != b.size()) throw DimensionError("least_squares: shape mismatch");
  const Eigen::MatrixXcd dense = view(a);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(dense);
  return to_vector(cod.solve(view(b)));
}

OrthonormalBasis range_complement(const ComplexMatrix& a, double relative_threshold) {
  const Eigen::MatrixXcd dense = view(a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense, Eigen::ComputeFullU);
  const std::size_t r = rank_from(svd.singularValues(), relative_threshold);
  OrthonormalBasis out;
  out.rank = r;
  const auto m = static_cast<Eigen::Index>(a.rows());
  if (static_cast<Eigen::Index>(r) < m) {
    out.basis = to_matrix(svd.matrixU().rightCols(m - static_cast<Eigen::Index>(r)));
  }
  return out;
}

OrthonormalBasis null_space(const ComplexMatrix& a, double relative_threshold) {
  const Eigen::MatrixXcd dense = view(a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense, Eigen::ComputeFullV);
  const std::size_t r = rank_from(svd.singularValues(), relative_threshold);
  OrthonormalBasis out;
  out.rank = r;
  const auto n = static_cast<Eigen::Index>(a.cols());
  if (static_cast<Eigen::Index>(r) < n) {
    out.basis = to_matrix(svd.matrixV().rightCols(n - static_cast<Eigen::Index>(r)));
  }
  return out;
}

AffineProjector::AffineProjector(const ComplexMatrix& a, std::span<const cd> b, double relative_threshold) {
  if (a.rows() != b.size()) throw DimensionError("affine projector: rhs length differs from row count");
  const Eigen::MatrixXcd dense = view(a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
  rank_ = rank_from(svd.singularValues(), relative_threshold);
  const auto n = static_cast<Eigen::Index>(a.cols());
  const auto r = static_cast<Eigen::Index>(rank_);

  EVector x0 = EVector::Zero(n);
  if (r > 0) {
    const Eigen::MatrixXcd ur = svd.matrixU().leftCols(r);
    const Eigen::MatrixXcd vr = svd.matrixV().leftCols(r);
    const Eigen::VectorXcd coeff =
        (ur.adjoint() * view(b)).cwiseQuotient(svd.singularValues().head(r).cast<cd>());
    x0 = vr * coeff;
    const Eigen::MatrixXcd vh = vr.adjoint();
    basis_h_.resize(static_cast<std::size_t>(r * n));
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) basis_h_[static_cast<std::size_t>(i * n + j)] = vh(i, j);
    }
  }
  x0_ = to_vector(x0);
  residual_ = (dense * x0 - view(b)).norm();
}

void AffineProjector::project_into(std::span<const cd> v, std::span<cd> out) const {
  const std::size_t n = x0_.size();
  if (v.size() != n || out.size() != n) throw DimensionError("affine projector: vector length mismatch");
  const auto& k = kernels::active();
  if (out.data() != v.data()) std::copy(v.begin(), v.end(), out.begin());
  // out = v - V (V^H v) + x0
  std::vector<cd> coeff(rank_);
  for (std::size_t i = 0; i < rank_; ++i) coeff[i] = k.dotu(basis_h_.data() + i * n, v.data(), n);
  for (std::size_t i = 0; i < rank_; ++i) {
    // row i of V^H conjugated is column i of V
    const cd* vh_row = basis_h_.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) out[j] -= std::conj(vh_row[j]) * coeff[i];
  }
  for (std::size_t j = 0; j < n; ++j) out[j] += x0_[j];
}

ComplexVector AffineProjector::project(std::span<const cd> v) const {
  ComplexVector out(v.size());
  project_into(v, out);
  return out;
}

}  // namespace uncertainty
