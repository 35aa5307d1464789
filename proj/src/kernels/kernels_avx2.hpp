#pragma once

#include "uncertainty/kernels.hpp"

namespace uncertainty::kernels::avx2 {

cd dotc(const cd* x, const cd* y, std::size_t n);
cd dotu(const cd* x, const cd* y, std::size_t n);
void axpy(cd alpha, const cd* x, cd* y, std::size_t n);
double norm2_sq(const cd* x, std::size_t n);
double abs_sum(const cd* x, std::size_t n);
void abs_accumulate(const cd* x, double* acc, std::size_t n);
void shrink(const cd* x, double kappa, cd* out, std::size_t n);
void rotate(cd* x, cd* y, double c, cd s, std::size_t n);

}  // namespace uncertainty::kernels::avx2
