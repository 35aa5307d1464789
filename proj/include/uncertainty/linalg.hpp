#pragma once

// Dense complex linear algebra used throughout the toolkit: matrices, the
// unitary DFT, selector and projector matrices, the operator and entrywise
// norms, and (mutual) coherence of dictionaries.
//
// Indices are 0-based in this API; IndexSet carries the 1-based convention
// for anything user-facing.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uncertainty/index_set.hpp"

namespace uncertainty {

using cd = std::complex<double>;
using ComplexVector = std::vector<cd>;

// Row-major dense matrix with at least one row and one column.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  // Throws DimensionError on a size mismatch, ValidationError on NaN/Inf.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries);

  static ComplexMatrix identity(std::size_t m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cd operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  cd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const cd> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<cd> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const cd> entries() const noexcept { return data_; }
  std::span<cd> entries() noexcept { return data_; }

  ComplexVector column(std::size_t j) const;
  ComplexMatrix adjoint() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cd> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, std::span<const cd> x);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

// Columns of `a` followed by columns of `b`.
ComplexMatrix hconcat(const ComplexMatrix& a, const ComplexMatrix& b);
// Rows `rows` and columns `cols` (0-based) of `a`; both lists nonempty.
ComplexMatrix submatrix(const ComplexMatrix& a, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols);
ComplexMatrix select_columns(const ComplexMatrix& a, std::span<const std::size_t> cols);

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

// Square matrix U with U^H U = I to a stated tolerance, checked once at
// construction.
class UnitaryMatrix {
 public:
  static constexpr double kDefaultTolerance = 1e-10;

  explicit UnitaryMatrix(ComplexMatrix u, double tolerance = kDefaultTolerance);
  static UnitaryMatrix dft(std::size_t m);

  const ComplexMatrix& matrix() const noexcept { return u_; }
  std::size_t dim() const noexcept { return u_.rows(); }

  // Entrywise comparison against dft_matrix(dim()).
  bool is_dft(double tolerance = 1e-10) const;

 private:
  ComplexMatrix u_;
};

enum class ColumnPolicy { Validate, Renormalize };

// Matrix whose columns have unit 2-norm.
class Dictionary {
 public:
  static constexpr double kDefaultColumnTolerance = 1e-8;

  explicit Dictionary(ComplexMatrix a, ColumnPolicy policy = ColumnPolicy::Validate,
                      double column_norm_tolerance = kDefaultColumnTolerance);

  const ComplexMatrix& matrix() const noexcept { return a_; }
  std::size_t rows() const noexcept { return a_.rows(); }
  std::size_t cols() const noexcept { return a_.cols(); }
  double column_norm_tolerance() const noexcept { return tolerance_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  ComplexMatrix a_;
  double tolerance_;
  std::vector<std::string> warnings_;
};

// F_{k,l} = exp(-2 pi j k l / m) / sqrt(m), k, l = 1..m.
ComplexMatrix dft_matrix(std::size_t m);

// Diagonal 0/1 matrix D_A.
ComplexMatrix selector(const IndexSet& a);
// D_A x without forming D_A.
ComplexVector restrict_to(std::span<const cd> x, const IndexSet& a);

// U D_Q U^H.
ComplexMatrix projector(const UnitaryMatrix& u, const IndexSet& q);

// Largest singular value.
double op_norm_2(const ComplexMatrix& a);
// Maximum column absolute sum.
double op_norm_1(const ComplexMatrix& a);

struct MatrixNorms {
  double frobenius;
  double entrywise_l1;
};
MatrixNorms matrix_norms(const ComplexMatrix& a);

// All singular values, descending, via one-sided Jacobi rotations.
std::vector<double> singular_values(const ComplexMatrix& a);
// Number of singular values above relative_threshold * sigma_max.
std::size_t numerical_rank(const ComplexMatrix& a, double relative_threshold = 1e-10);

double coherence(const Dictionary& a);
double mutual_coherence(const Dictionary& a, const Dictionary& b);

double norm2(std::span<const cd> x);
double norm1(std::span<const cd> x);
std::size_t count_nonzero(std::span<const cd> x, double threshold = 0.0);

}  // namespace uncertainty
