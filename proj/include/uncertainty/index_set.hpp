#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace uncertainty {

// Circular run {start+1, ..., start+length} taken mod m inside {1, ..., m}.
struct CircularInterval {
  std::size_t start;
  std::size_t length;
};

// Subset of {1, ..., m}. Members are 1-based and strictly increasing.
class IndexSet {
 public:
  // Throws DomainError on out-of-range or duplicate members; order is free.
  IndexSet(std::size_t universe, std::vector<std::size_t> members);

  static IndexSet empty(std::size_t universe);
  static IndexSet full(std::size_t universe);
  // {start+1, ..., start+length} interpreted circularly; 1 <= length <= m.
  static IndexSet circular_interval(std::size_t universe, std::size_t start, std::size_t length);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_empty() const noexcept { return members_.empty(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::vector<std::size_t> zero_based() const;
  bool contains(std::size_t one_based) const;

  IndexSet complement() const;
  bool is_subset_of(const IndexSet& other) const;

  // The (start, length) representation when the set is a nonempty circular
  // run; the full set reports start 0.
  std::optional<CircularInterval> as_circular_interval() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t universe_;
  std::vector<std::size_t> members_;
};

}  // namespace uncertainty
