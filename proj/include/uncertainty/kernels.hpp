#pragma once

// Complex double-precision inner-loop kernels.
//
// Every kernel has a scalar reference implementation and, on x86-64 builds
// with UNCERTAINTY_HAVE_AVX2, an AVX2/FMA variant. The variant is chosen once
// at first use based on CPUID; setting UNCERTAINTY_KERNELS=scalar in the
// environment forces the reference path. Operands are interleaved
// (re, im) pairs, i.e. the std::complex<double> array layout.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace uncertainty::kernels {

using cd = std::complex<double>;

struct KernelTable {
  std::string_view name;
  // sum_i conj(x_i) * y_i
  cd (*dotc)(const cd* x, const cd* y, std::size_t n);
  // sum_i x_i * y_i
  cd (*dotu)(const cd* x, const cd* y, std::size_t n);
  // y += alpha * x
  void (*axpy)(cd alpha, const cd* x, cd* y, std::size_t n);
  // sum_i |x_i|^2
  double (*norm2_sq)(const cd* x, std::size_t n);
  // sum_i |x_i|
  double (*abs_sum)(const cd* x, std::size_t n);
  // acc_i += |x_i|
  void (*abs_accumulate)(const cd* x, double* acc, std::size_t n);
  // out_i = x_i * max(0, 1 - kappa / |x_i|)   (modulus shrink, phase kept)
  void (*shrink)(const cd* x, double kappa, cd* out, std::size_t n);
  // [x; y] <- [[c, s], [-conj(s), c]] [x; y]   with c real, c^2 + |s|^2 = 1
  void (*rotate)(cd* x, cd* y, double c, cd s, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

// Table used by the rest of the library.
const KernelTable& active();

// Span conveniences over active(). Lengths must agree; the caller checks.
inline cd dotc(std::span<const cd> x, std::span<const cd> y) {
  return active().dotc(x.data(), y.data(), x.size());
}
inline cd dotu(std::span<const cd> x, std::span<const cd> y) {
  return active().dotu(x.data(), y.data(), x.size());
}
inline void axpy(cd alpha, std::span<const cd> x, std::span<cd> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline double norm2_sq(std::span<const cd> x) { return active().norm2_sq(x.data(), x.size()); }
inline double abs_sum(std::span<const cd> x) { return active().abs_sum(x.data(), x.size()); }
inline void shrink(std::span<const cd> x, double kappa, std::span<cd> out) {
  active().shrink(x.data(), kappa, out.data(), x.size());
}

}  // namespace uncertainty::kernels
