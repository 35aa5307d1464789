#pragma once

#include <Eigen/Dense>

#include "uncertainty/linalg.hpp"

namespace testutil {

using uncertainty::ComplexMatrix;
using uncertainty::cd;

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

// Largest singular value from a dense Eigen SVD.
inline double svd_norm(const ComplexMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

inline double dist(std::span<const cd> a, std::span<const cd> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace testutil
