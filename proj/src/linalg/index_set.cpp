#include <algorithm>
#include <string>

#include "uncertainty/errors.hpp"
#include "uncertainty/index_set.hpp"

namespace uncertainty {

IndexSet::IndexSet(std::size_t universe, std::vector<std::size_t> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > universe_) {
      throw DomainError("index " + std::to_string(members_[i]) + " outside {1, ..., " +
                        std::to_string(universe_) + "}");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw DomainError("duplicate index " + std::to_string(members_[i]));
    }
  }
}

IndexSet IndexSet::empty(std::size_t universe) { return IndexSet(universe, {}); }

IndexSet IndexSet::full(std::size_t universe) {
  std::vector<std::size_t> all(universe);
  for (std::size_t i = 0; i < universe; ++i) all[i] = i + 1;
  return IndexSet(universe, std::move(all));
}

IndexSet IndexSet::circular_interval(std::size_t universe, std::size_t start, std::size_t length) {
  if (universe == 0 || length == 0 || length > universe) {
    throw DomainError("circular interval length must lie in [1, m]");
  }
  std::vector<std::size_t> members(length);
  for (std::size_t k = 0; k < length; ++k) members[k] = (start + k) % universe + 1;
  return IndexSet(universe, std::move(members));
}

std::vector<std::size_t> IndexSet::zero_based() const {
  std::vector<std::size_t> z(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) z[i] = members_[i] - 1;
  return z;
}

bool IndexSet::contains(std::size_t one_based) const {
  return std::binary_search(members_.begin(), members_.end(), one_based);
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> rest;
  rest.reserve(universe_ - members_.size());
  for (std::size_t i = 1; i <= universe_; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return IndexSet(universe_, std::move(rest));
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return universe_ == other.universe_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::optional<CircularInterval> IndexSet::as_circular_interval() const {
  if (members_.empty()) return std::nullopt;
  const std::size_t n = members_.size();
  if (n == universe_) return CircularInterval{0, n};
  // A proper circular run has exactly one member whose predecessor is absent.
  std::optional<std::size_t> first;
  for (std::size_t i : members_) {
    const std::size_t pred = i == 1 ? universe_ : i - 1;
    if (!contains(pred)) {
      if (first) return std::nullopt;
      first = i;
    }
  }
  return CircularInterval{*first - 1, n};
}

}  // namespace uncertainty
