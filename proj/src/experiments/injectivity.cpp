#include <algorithm>
#include <limits>
#include <numeric>

#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"

namespace uncertainty {

namespace {

constexpr std::size_t kMaxColumns = 16;
constexpr double kRankThreshold = 1e-8;

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& c) {
  std::vector<std::size_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] + 1;
  return out;
}

}  // namespace

InjectivityResult injectivity_check(const Dictionary& a, const Dictionary& b, std::size_t s, std::size_t t) {
  if (a.rows() != b.rows()) throw DimensionError("A and B must have the same number of rows");
  if (a.cols() > kMaxColumns || b.cols() > kMaxColumns) {
    throw DomainError("injectivity enumeration is limited to 16 columns per dictionary");
  }
  const std::size_t m = a.rows();
  const std::size_t ka = std::min(a.cols(), 2 * s);
  const std::size_t kb = std::min(b.cols(), 2 * t);

  InjectivityResult out;
  if (ka + kb == 0) {
    out.min_sv = std::numeric_limits<double>::infinity();
    return out;
  }
  if (ka + kb > m) {
    out.injective = false;
    out.min_sv = 0.0;
    out.witness = SupportPair{one_based(first_combination(ka)), one_based(first_combination(kb))};
    return out;
  }

  out.min_sv = std::numeric_limits<double>::infinity();
  auto ca = first_combination(ka);
  do {
    auto cb = first_combination(kb);
    do {
      ComplexMatrix sub(m, ka + kb);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < ka; ++j) sub(i, j) = a.matrix()(i, ca[j]);
        for (std::size_t j = 0; j < kb; ++j) sub(i, ka + j) = b.matrix()(i, cb[j]);
      }
      const double smin = singular_values(sub).back();
      ++out.subsets_checked;
      out.min_sv = std::min(out.min_sv, smin);
      if (smin <= kRankThreshold && !out.witness) {
        out.injective = false;
        out.witness = SupportPair{one_based(ca), one_based(cb)};
      }
    } while (kb > 0 && next_combination(cb, b.cols()));
  } while (ka > 0 && next_combination(ca, a.cols()));
  return out;
}

}  // namespace uncertainty
