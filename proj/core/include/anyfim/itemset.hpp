#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "anyfim/database.hpp"
#include "anyfim/tidset.hpp"

namespace anyfim {

/// Strictly ascending sequence of item ranks. Compared by content.
class Itemset {
public:
  Itemset() = default;
  Itemset(std::initializer_list<Rank> items);

  /// Throws std::invalid_argument unless strictly ascending.
  static Itemset from_sorted(std::vector<Rank> items);
  static Itemset adopt_sorted(std::vector<Rank> items) noexcept;
  /// Sorts and deduplicates.
  static Itemset from_unsorted(std::vector<Rank> items);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  /// Largest rank. Precondition: non-empty.
  Rank tail() const noexcept { return items_.back(); }
  bool contains(Rank r) const noexcept;

  /// This itemset plus `r`, which must exceed tail().
  Itemset extended_by(Rank r) const;

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  std::span<const Rank> view() const noexcept { return items_; }
  Rank operator[](std::size_t i) const noexcept { return items_[i]; }

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset&, const Itemset&) = default;

private:
  explicit Itemset(std::vector<Rank> items) noexcept : items_(std::move(items)) {}
  std::vector<Rank> items_;
};

Itemset set_union(const Itemset& a, const Itemset& b);
bool is_subset(const Itemset& sub, const Itemset& super) noexcept;

/// The itemsets {Y | min_itemset ⊆ Y ⊆ max_itemset}, all supported by `cover`.
struct ItemsetInterval {
  Itemset min_itemset;
  Itemset max_itemset;
  Tidset cover;

  Support support() const noexcept { return static_cast<Support>(cover.size()); }
  /// |max \ min|; the interval holds 2^width itemsets.
  std::size_t width() const noexcept { return max_itemset.size() - min_itemset.size(); }

  friend bool operator==(const ItemsetInterval&, const ItemsetInterval&) = default;
};

} // namespace anyfim
