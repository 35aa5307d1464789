#include <cstdlib>
#include <string_view>

#include "uncertainty/kernels.hpp"

#if defined(UNCERTAINTY_HAVE_AVX2)
#include "kernels_avx2.hpp"
#endif

namespace uncertainty::kernels {
namespace {

#if defined(UNCERTAINTY_HAVE_AVX2)
const KernelTable kAvx2{
    "avx2",       avx2::dotc,           avx2::dotu,   avx2::axpy,   avx2::norm2_sq,
    avx2::abs_sum, avx2::abs_accumulate, avx2::shrink, avx2::rotate,
};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& select() {
  if (const char* env = std::getenv("UNCERTAINTY_KERNELS"); env && std::string_view(env) == "scalar") {
    return scalar_table();
  }
  if (const KernelTable* t = avx2_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable* avx2_table() {
#if defined(UNCERTAINTY_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace uncertainty::kernels
