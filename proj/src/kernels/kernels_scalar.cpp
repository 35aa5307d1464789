#include "uncertainty/kernels.hpp"

#include <cmath>

namespace uncertainty::kernels {
namespace {

cd dotc_scalar(const cd* x, const cd* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cd dotu_scalar(const cd* x, const cd* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy_scalar(cd alpha, const cd* x, cd* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double norm2_sq_scalar(const cd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
  return s;
}

double abs_sum_scalar(const cd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::abs(x[i]);
  return s;
}

void abs_accumulate_scalar(const cd* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += std::abs(x[i]);
}

void shrink_scalar(const cd* x, double kappa, cd* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::abs(x[i]);
    out[i] = mag <= kappa ? cd{} : x[i] * (1.0 - kappa / mag);
  }
}

void rotate_scalar(cd* x, cd* y, double c, cd s, std::size_t n) {
  const cd ms = -std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cd xi = x[i];
    const cd yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = ms * xi + c * yi;
  }
}

const KernelTable kScalar{
    "scalar",      dotc_scalar,   dotu_scalar,           axpy_scalar, norm2_sq_scalar,
    abs_sum_scalar, abs_accumulate_scalar, shrink_scalar, rotate_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace uncertainty::kernels
