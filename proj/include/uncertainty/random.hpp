#pragma once

// Seeded random streams. Every random object in the toolkit is drawn from a
// stream derived from (root seed, index) or (root seed, name), so results do
// not depend on the order in which independent items are evaluated.

#include <cstdint>
#include <random>
#include <string_view>

#include "uncertainty/index_set.hpp"
#include "uncertainty/linalg.hpp"

namespace uncertainty {

using Rng = std::mt19937_64;

Rng make_stream(std::uint64_t seed, std::uint64_t index);
Rng make_named_stream(std::uint64_t seed, std::string_view name);
std::uint64_t fnv1a(std::string_view text);

// E|z|^2 = 1.
cd complex_gaussian(Rng& rng);
ComplexVector complex_gaussian_vector(Rng& rng, std::size_t n);
ComplexMatrix complex_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// Haar-distributed unitary (Gram-Schmidt on a Gaussian matrix).
UnitaryMatrix random_unitary(Rng& rng, std::size_t m);
// Gaussian columns scaled to unit norm.
Dictionary random_dictionary(Rng& rng, std::size_t rows, std::size_t cols);

// Uniform k-subset of {1, ..., m}.
IndexSet random_subset(Rng& rng, std::size_t m, std::size_t k);
// Size uniform on {1, ..., m}, then a uniform subset of that size.
IndexSet random_nonempty_subset(Rng& rng, std::size_t m);

}  // namespace uncertainty
