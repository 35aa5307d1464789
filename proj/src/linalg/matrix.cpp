#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "uncertainty/errors.hpp"
#include "uncertainty/kernels.hpp"
#include "uncertainty/linalg.hpp"

namespace uncertainty {

namespace {

void require_nonempty_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    std::ostringstream msg;
    msg << "matrix must have at least one row and one column, got " << rows << "x" << cols;
    throw DimensionError(msg.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_nonempty_shape(rows, cols);
  data_.assign(rows * cols, cd{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require_nonempty_shape(rows, cols);
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const cd& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t m) {
  ComplexMatrix id(m, m);
  for (std::size_t i = 0; i < m; ++i) id(i, i) = 1.0;
  return id;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  ComplexVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix h(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) h(j, i) = std::conj((*this)(i, j));
  }
  return h;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  const auto& k = kernels::active();
  // Row i of C accumulates a(i, l) * row l of B.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cd* out = c.row(i).data();
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const cd s = a(i, l);
      if (s != cd{}) k.axpy(s, b.row(l).data(), out, b.cols());
    }
  }
  return c;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const cd> x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: dimensions differ");
  ComplexVector y(a.rows());
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = k.dotu(a.row(i).data(), x.data(), x.size());
  return y;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shapes differ");
  ComplexMatrix c = a;
  auto ce = c.entries();
  auto be = b.entries();
  for (std::size_t i = 0; i < ce.size(); ++i) ce[i] -= be[i];
  return c;
}

ComplexMatrix hconcat(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
  ComplexMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), c.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), c.row(i).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return c;
}

ComplexMatrix submatrix(const ComplexMatrix& a, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) {
  ComplexMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  }
  return s;
}

ComplexMatrix select_columns(const ComplexMatrix& a, std::span<const std::size_t> cols) {
  ComplexMatrix s(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(i, cols[j]);
  }
  return s;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shapes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix u, double tolerance) : u_(std::move(u)) {
  if (!u_.is_square()) throw ValidationError("unitary matrix must be square");
  for (const cd& z : u_.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("matrix entries must be finite");
  }
  const ComplexMatrix gram = u_.adjoint() * u_;
  const double err = max_abs_difference(gram, ComplexMatrix::identity(u_.rows()));
  if (err > tolerance) {
    std::ostringstream msg;
    msg << "matrix is not unitary: max |U^H U - I| = " << err << " exceeds " << tolerance;
    throw ValidationError(msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::dft(std::size_t m) { return UnitaryMatrix(dft_matrix(m)); }

bool UnitaryMatrix::is_dft(double tolerance) const {
  return max_abs_difference(u_, dft_matrix(u_.rows())) <= tolerance;
}

Dictionary::Dictionary(ComplexMatrix a, ColumnPolicy policy, double column_norm_tolerance)
    : a_(std::move(a)), tolerance_(column_norm_tolerance) {
  for (std::size_t j = 0; j < a_.cols(); ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < a_.rows(); ++i) sq += std::norm(a_(i, j));
    const double nrm = std::sqrt(sq);
    if (std::abs(nrm - 1.0) <= tolerance_) continue;
    if (policy == ColumnPolicy::Validate || nrm == 0.0 || !std::isfinite(nrm)) {
      std::ostringstream msg;
      msg << "dictionary column " << j + 1 << " has 2-norm " << nrm << ", expected 1 within " << tolerance_;
      throw ValidationError(msg.str());
    }
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, j) /= nrm;
    std::ostringstream msg;
    msg << "column " << j + 1 << " renormalized (norm was " << nrm << ")";
    warnings_.push_back(msg.str());
  }
}

ComplexMatrix dft_matrix(std::size_t m) {
  if (m == 0) throw DimensionError("DFT size must be at least 1");
  ComplexMatrix f(m, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t l = 1; l <= m; ++l) {
      // Reduce k*l mod m before forming the angle.
      const std::size_t r = (k * l) % m;
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
      f(k - 1, l - 1) = std::polar(scale, angle);
    }
  }
  return f;
}

ComplexMatrix selector(const IndexSet& a) {
  ComplexMatrix d(a.universe(), a.universe());
  for (std::size_t i : a.members()) d(i - 1, i - 1) = 1.0;
  return d;
}

ComplexVector restrict_to(std::span<const cd> x, const IndexSet& a) {
  if (x.size() != a.universe()) throw DimensionError("restrict_to: vector length differs from universe");
  ComplexVector r(x.size());
  for (std::size_t i : a.members()) r[i - 1] = x[i - 1];
  return r;
}

ComplexMatrix projector(const UnitaryMatrix& u, const IndexSet& q) {
  const std::size_t m = u.dim();
  if (q.universe() != m) throw DimensionError("projector: index set universe differs from matrix size");
  ComplexMatrix p(m, m);
  if (q.is_empty()) return p;
  const auto cols = q.zero_based();
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  // U_Q (m x |Q|) times its adjoint.
  const ComplexMatrix uq = submatrix(u.matrix(), all, cols);
  return uq * uq.adjoint();
}

double op_norm_1(const ComplexMatrix& a) {
  std::vector<double> sums(a.cols(), 0.0);
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) k.abs_accumulate(a.row(i).data(), sums.data(), a.cols());
  return *std::max_element(sums.begin(), sums.end());
}

MatrixNorms matrix_norms(const ComplexMatrix& a) {
  const auto& k = kernels::active();
  const auto e = a.entries();
  return {std::sqrt(k.norm2_sq(e.data(), e.size())), k.abs_sum(e.data(), e.size())};
}

double op_norm_2(const ComplexMatrix& a) {
  const auto sv = singular_values(a);
  return sv.empty() ? 0.0 : sv.front();
}

std::size_t numerical_rank(const ComplexMatrix& a, double relative_threshold) {
  const auto sv = singular_values(a);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = relative_threshold * sv.front();
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

double coherence(const Dictionary& a) {
  if (a.cols() < 2) return 0.0;
  const ComplexMatrix ah = a.matrix().adjoint();
  const auto& k = kernels::active();
  double mu = 0.0;
  for (std::size_t i = 0; i < ah.rows(); ++i) {
    for (std::size_t j = i + 1; j < ah.rows(); ++j) {
      // rows of A^H are conjugated columns: conj(conj(a_i)) . conj(a_j) = conj(a_i^H a_j)
      mu = std::max(mu, std::abs(k.dotc(ah.row(i).data(), ah.row(j).data(), ah.cols())));
    }
  }
  return mu;
}

double mutual_coherence(const Dictionary& a, const Dictionary& b) {
  if (a.rows() != b.rows()) throw DimensionError("mutual coherence: row counts differ");
  const ComplexMatrix ah = a.matrix().adjoint();
  const ComplexMatrix bh = b.matrix().adjoint();
  const auto& k = kernels::active();
  double mu = 0.0;
  for (std::size_t i = 0; i < ah.rows(); ++i) {
    for (std::size_t j = 0; j < bh.rows(); ++j) {
      mu = std::max(mu, std::abs(k.dotc(ah.row(i).data(), bh.row(j).data(), ah.cols())));
    }
  }
  return mu;
}

double norm2(std::span<const cd> x) { return std::sqrt(kernels::norm2_sq(x)); }
double norm1(std::span<const cd> x) { return kernels::abs_sum(x); }

std::size_t count_nonzero(std::span<const cd> x, double threshold) {
  return static_cast<std::size_t>(
      std::count_if(x.begin(), x.end(), [threshold](cd z) { return std::abs(z) > threshold; }));
}

}  // namespace uncertainty
