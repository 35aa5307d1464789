#include "uncertainty/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uncertainty/errors.hpp"
#include "uncertainty/kernels.hpp"

namespace uncertainty {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Rng make_named_stream(std::uint64_t seed, std::string_view name) { return make_stream(seed, fnv1a(name)); }

cd complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

ComplexVector complex_gaussian_vector(Rng& rng, std::size_t n) {
  ComplexVector x(n);
  for (auto& z : x) z = complex_gaussian(rng);
  return x;
}

ComplexMatrix complex_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix a(rows, cols);
  for (auto& z : a.entries()) z = complex_gaussian(rng);
  return a;
}

UnitaryMatrix random_unitary(Rng& rng, std::size_t m) {
  // Orthonormalize the rows of a Gaussian matrix (modified Gram-Schmidt,
  // two passes for stability); the result's rows, hence columns, are
  // orthonormal.
  ComplexMatrix g = complex_gaussian_matrix(rng, m, m);
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < m; ++i) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < i; ++j) {
        const cd c = k.dotc(g.row(j).data(), g.row(i).data(), m);
        k.axpy(-c, g.row(j).data(), g.row(i).data(), m);
      }
    }
    const double nrm = std::sqrt(k.norm2_sq(g.row(i).data(), m));
    for (auto& z : g.row(i)) z /= nrm;
  }
  return UnitaryMatrix(std::move(g));
}

Dictionary random_dictionary(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix a = complex_gaussian_matrix(rng, rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sq += std::norm(a(i, j));
    const double nrm = std::sqrt(sq);
    for (std::size_t i = 0; i < rows; ++i) a(i, j) /= nrm;
  }
  return Dictionary(std::move(a));
}

IndexSet random_subset(Rng& rng, std::size_t m, std::size_t k) {
  if (k > m) throw DomainError("subset size exceeds universe");
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{1});
  // Partial Fisher-Yates with an explicit uniform draw (std::shuffle's
  // algorithm is implementation-defined).
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, m - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(k);
  return IndexSet(m, std::move(all));
}

IndexSet random_nonempty_subset(Rng& rng, std::size_t m) {
  std::uniform_int_distribution<std::size_t> size(1, m);
  return random_subset(rng, m, size(rng));
}

}  // namespace uncertainty
