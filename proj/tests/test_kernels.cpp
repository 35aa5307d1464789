#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "uncertainty/kernels.hpp"
#include "uncertainty/random.hpp"

using namespace uncertainty;

namespace {

double rel(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("scalar kernels on small hand cases") {
  const auto& k = kernels::scalar_table();
  std::vector<cd> x{{1, 2}, {3, -1}};
  std::vector<cd> y{{0, 1}, {2, 2}};
  // conj(1+2j)(j) + conj(3-j)(2+2j) = (2+j) + (4+8j)
  CHECK(k.dotc(x.data(), y.data(), 2) == cd(6, 9));
  CHECK(k.dotu(x.data(), y.data(), 2) == cd(-2, 1) + cd(8, 4));
  CHECK(k.norm2_sq(x.data(), 2) == doctest::Approx(15.0));
  std::vector<cd> z{{3, 4}};
  CHECK(k.abs_sum(z.data(), 1) == 5.0);
  std::vector<cd> out(1);
  k.shrink(z.data(), 2.0, out.data(), 1);
  CHECK(std::abs(out[0] - cd(1.8, 2.4)) < 1e-15);
  k.shrink(z.data(), 7.0, out.data(), 1);
  CHECK(out[0] == cd(0, 0));
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const kernels::KernelTable* fast = kernels::avx2_table();
  if (fast == nullptr) {
    MESSAGE("AVX2 variant unavailable on this build or CPU");
    return;
  }
  const auto& ref = kernels::scalar_table();
  Rng rng = make_stream(11, 0);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 33u, 100u, 1001u}) {
    ComplexVector x = complex_gaussian_vector(rng, n);
    ComplexVector y = complex_gaussian_vector(rng, n);
    if (n > 2) x[1] = 0.0;  // exercise the zero branch of shrink
    CHECK(rel(fast->dotc(x.data(), y.data(), n), ref.dotc(x.data(), y.data(), n)) < 1e-13);
    CHECK(rel(fast->dotu(x.data(), y.data(), n), ref.dotu(x.data(), y.data(), n)) < 1e-13);
    CHECK(rel(fast->norm2_sq(x.data(), n), ref.norm2_sq(x.data(), n)) < 1e-13);
    CHECK(rel(fast->abs_sum(x.data(), n), ref.abs_sum(x.data(), n)) < 1e-13);

    const cd alpha{0.3, -1.7};
    ComplexVector y1 = y, y2 = y;
    fast->axpy(alpha, x.data(), y1.data(), n);
    ref.axpy(alpha, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(rel(y1[i], y2[i]) < 1e-14);

    std::vector<double> a1(n, 0.5), a2(n, 0.5);
    fast->abs_accumulate(x.data(), a1.data(), n);
    ref.abs_accumulate(x.data(), a2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(rel(a1[i], a2[i]) < 1e-14);

    ComplexVector s1(n), s2(n);
    fast->shrink(x.data(), 0.6, s1.data(), n);
    ref.shrink(x.data(), 0.6, s2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(rel(s1[i], s2[i]) < 1e-14);

    const double c = 0.8;
    const cd s = std::polar(0.6, 0.4);
    ComplexVector rx1 = x, ry1 = y, rx2 = x, ry2 = y;
    fast->rotate(rx1.data(), ry1.data(), c, s, n);
    ref.rotate(rx2.data(), ry2.data(), c, s, n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(rel(rx1[i], rx2[i]) < 1e-14);
      CHECK(rel(ry1[i], ry2[i]) < 1e-14);
    }
  }
}

TEST_CASE("active table is one of the variants") {
  const auto& a = kernels::active();
  CHECK((a.name == kernels::scalar_table().name ||
         (kernels::avx2_table() != nullptr && a.name == kernels::avx2_table()->name)));
}
