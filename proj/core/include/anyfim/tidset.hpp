#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace anyfim {

/// Transaction identifier: position of the transaction in the input file.
using Tid = std::uint32_t;

/// Strictly ascending set of transaction identifiers. Its cardinality is the
/// support of the itemset it covers.
class Tidset {
public:
  Tidset() = default;
  Tidset(std::initializer_list<Tid> tids);

  /// Takes ownership of `tids`; throws std::invalid_argument unless strictly
  /// ascending.
  static Tidset from_sorted(std::vector<Tid> tids);
  /// Skips validation. Caller guarantees strict ascending order.
  static Tidset adopt_sorted(std::vector<Tid> tids) noexcept;

  std::size_t size() const noexcept { return tids_.size(); }
  bool empty() const noexcept { return tids_.empty(); }
  bool contains(Tid tid) const noexcept;

  auto begin() const noexcept { return tids_.begin(); }
  auto end() const noexcept { return tids_.end(); }
  std::span<const Tid> view() const noexcept { return tids_; }
  Tid operator[](std::size_t i) const noexcept { return tids_[i]; }

  friend bool operator==(const Tidset&, const Tidset&) = default;
  friend auto operator<=>(const Tidset&, const Tidset&) = default;

private:
  explicit Tidset(std::vector<Tid> tids) noexcept : tids_(std::move(tids)) {}
  std::vector<Tid> tids_;
};

/// Merge-based intersection of two ascending tidsets.
Tidset intersect(const Tidset& a, const Tidset& b);

/// Whether every tid of `sub` is in `super`.
bool is_subset(const Tidset& sub, const Tidset& super) noexcept;

} // namespace anyfim
