// AVX2/FMA variants. Compiled with -mavx2 -mfma; only reached after the
// dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <cmath>

#include "kernels_avx2.hpp"

namespace uncertainty::kernels::avx2 {
namespace {

// One __m256d holds two complex numbers: [re0, im0, re1, im1].
inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cd* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of even lanes (real slots) and odd lanes (imaginary slots).
inline void hsum_even_odd(__m256d v, double& even, double& odd) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  even = _mm_cvtsd_f64(s);
  odd = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

// alpha * v for a broadcast complex alpha.
inline __m256d cmul_scalar(__m256d v, double ar, double ai) {
  const __m256d re = _mm256_set1_pd(ar);
  const __m256d im = _mm256_setr_pd(-ai, ai, -ai, ai);
  return _mm256_fmadd_pd(re, v, _mm256_mul_pd(im, swap_re_im(v)));
}

}  // namespace

cd dotc(const cd* x, const cd* y, std::size_t n) {
  __m256d acc_re0 = _mm256_setzero_pd(), acc_re1 = _mm256_setzero_pd();
  __m256d acc_im0 = _mm256_setzero_pd(), acc_im1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = load2(x + i), y0 = load2(y + i);
    const __m256d x1 = load2(x + i + 2), y1 = load2(y + i + 2);
    acc_re0 = _mm256_fmadd_pd(x0, y0, acc_re0);
    acc_re1 = _mm256_fmadd_pd(x1, y1, acc_re1);
    acc_im0 = _mm256_fmadd_pd(swap_re_im(x0), y0, acc_im0);
    acc_im1 = _mm256_fmadd_pd(swap_re_im(x1), y1, acc_im1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = load2(x + i), y0 = load2(y + i);
    acc_re0 = _mm256_fmadd_pd(x0, y0, acc_re0);
    acc_im0 = _mm256_fmadd_pd(swap_re_im(x0), y0, acc_im0);
  }
  double re = hsum(_mm256_add_pd(acc_re0, acc_re1));
  double im_even = 0.0, im_odd = 0.0;
  // acc_im lanes: [xi*yr, xr*yi]; imaginary part is odd - even.
  hsum_even_odd(_mm256_add_pd(acc_im0, acc_im1), im_even, im_odd);
  double im = im_odd - im_even;
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cd dotu(const cd* x, const cd* y, std::size_t n) {
  __m256d acc_a = _mm256_setzero_pd(), acc_b = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = load2(x + i), y0 = load2(y + i);
    acc_a = _mm256_fmadd_pd(x0, y0, acc_a);
    acc_b = _mm256_fmadd_pd(swap_re_im(x0), y0, acc_b);
  }
  double re_even = 0.0, re_odd = 0.0;
  hsum_even_odd(acc_a, re_even, re_odd);
  double re = re_even - re_odd;
  double im = hsum(acc_b);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy(cd alpha, const cd* x, cd* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul_scalar(load2(x + i), ar, ai)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double norm2_sq(const cd* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = load2(x + i), b = load2(x + i + 2);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d a = load2(x + i);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += std::norm(x[i]);
  return s;
}

double abs_sum(const cd* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = load2(x + i), b = load2(x + i + 2);
    // hadd -> [|x0|^2, |x2|^2, |x1|^2, |x3|^2]
    const __m256d sq = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::abs(x[i]);
  return s;
}

void abs_accumulate(const cd* x, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = load2(x + i), b = load2(x + i + 2);
    const __m256d mag = _mm256_sqrt_pd(_mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b)));
    // mag order is [x0, x2, x1, x3]; restore [x0, x1, x2, x3].
    const __m256d ordered = _mm256_permute4x64_pd(mag, 0b11011000);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), ordered));
  }
  for (; i < n; ++i) acc[i] += std::abs(x[i]);
}

void shrink(const cd* x, double kappa, cd* out, std::size_t n) {
  const __m256d k = _mm256_set1_pd(kappa);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d a = load2(x + i);
    const __m256d sq = _mm256_mul_pd(a, a);
    // [|x0|^2, |x0|^2, |x1|^2, |x1|^2]
    const __m256d mag = _mm256_sqrt_pd(_mm256_hadd_pd(sq, sq));
    // mag <= kappa -> 0; the comparison also covers mag == 0.
    const __m256d keep = _mm256_cmp_pd(mag, k, _CMP_GT_OQ);
    const __m256d factor = _mm256_sub_pd(one, _mm256_div_pd(k, mag));
    store2(out + i, _mm256_blendv_pd(zero, _mm256_mul_pd(a, factor), keep));
  }
  for (; i < n; ++i) {
    const double mag = std::abs(x[i]);
    out[i] = mag <= kappa ? cd{} : x[i] * (1.0 - kappa / mag);
  }
}

void rotate(cd* x, cd* y, double c, cd s, std::size_t n) {
  const __m256d cv = _mm256_set1_pd(c);
  const double sr = s.real(), si = s.imag();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i), yv = load2(y + i);
    const __m256d nx = _mm256_fmadd_pd(cv, xv, cmul_scalar(yv, sr, si));
    // -conj(s) = (-sr, si)
    const __m256d ny = _mm256_fmadd_pd(cv, yv, cmul_scalar(xv, -sr, si));
    store2(x + i, nx);
    store2(y + i, ny);
  }
  const cd ms = -std::conj(s);
  for (; i < n; ++i) {
    const cd xi = x[i];
    const cd yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = ms * xi + c * yi;
  }
}

}  // namespace uncertainty::kernels::avx2
