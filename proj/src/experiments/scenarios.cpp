#include <cmath>

#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"

namespace uncertainty {

namespace {

ComplexMatrix identity_columns(std::size_t m, const IndexSet& cols) {
  ComplexMatrix b(m, cols.size());
  const auto idx = cols.zero_based();
  for (std::size_t l = 0; l < idx.size(); ++l) b(idx[l], l) = 1.0;
  return b;
}

}  // namespace

ComplexVector clip(std::span<const cd> s, double a, bool real_mode) {
  if (!(a > 0.0)) throw DomainError("clip level must be positive");
  ComplexVector out(s.begin(), s.end());
  for (auto& z : out) {
    if (real_mode) {
      if (z.imag() != 0.0) throw DomainError("real clipping mode needs a real signal");
      z = std::clamp(z.real(), -a, a);
    } else if (std::abs(z) > a) {
      z *= a / std::abs(z);
    }
  }
  return out;
}

IndexSet clipped_support(std::span<const cd> w, double a) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::abs(w[i]) >= a * (1.0 - 1e-12)) members.push_back(i + 1);
  }
  return IndexSet(w.size(), std::move(members));
}

SeparationProblem make_clipping_scenario(std::span<const cd> y, const Dictionary& a, double clip_level,
                                         bool real_mode) {
  if (y.size() != a.cols()) throw DimensionError("y must have one entry per column of A");
  const ComplexVector s = a.matrix() * y;
  ComplexVector w = clip(s, clip_level, real_mode);
  ComplexVector z(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) z[i] = w[i] - s[i];
  const std::size_t m = s.size();
  return SeparationProblem{a, Dictionary(ComplexMatrix::identity(m)), std::move(w), count_nonzero(y),
                           ComplexVector(y.begin(), y.end()), std::move(z)};
}

SeparationProblem restrict_to_known_support(const SeparationProblem& prob, const IndexSet& support) {
  const std::size_t m = prob.w.size();
  if (support.universe() != m) throw DimensionError("support must live in {1, ..., m}");
  SeparationProblem out = prob;
  if (support.is_empty()) {
    out.b.reset();
  } else {
    out.b = Dictionary(identity_columns(m, support));
  }
  if (prob.planted_z) {
    if (prob.planted_z->size() != m) throw DimensionError("planted z must be indexed by rows of B = I");
    ComplexVector z;
    for (std::size_t i : support.members()) z.push_back((*prob.planted_z)[i - 1]);
    out.planted_z = std::move(z);
  }
  out.validate();
  return out;
}

SeparationProblem make_inpainting_scenario(std::span<const cd> y, const Dictionary& a, const IndexSet& missing) {
  if (y.size() != a.cols()) throw DimensionError("y must have one entry per column of A");
  const ComplexVector s = a.matrix() * y;
  const std::size_t m = s.size();
  if (missing.universe() != m) throw DimensionError("missing set must live in {1, ..., m}");
  ComplexVector w = s;
  ComplexVector z;
  for (std::size_t i : missing.members()) {
    w[i - 1] = 0.0;
    z.push_back(-s[i - 1]);
  }
  std::optional<Dictionary> b;
  if (!missing.is_empty()) b = Dictionary(identity_columns(m, missing));
  return SeparationProblem{a, std::move(b), std::move(w), count_nonzero(y), ComplexVector(y.begin(), y.end()),
                           std::move(z)};
}

}  // namespace uncertainty
