#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "anyfim/database.hpp"
#include "anyfim/itemset.hpp"
#include "anyfim/tidset.hpp"

namespace anyfim {

/// T(X): transactions containing every item of X. X must be non-empty.
Tidset cover_of(const TransactionDatabase& db, const Itemset& x);

/// I(S): items present in every transaction of S, ascending. Throws
/// std::domain_error for an empty S.
Itemset intersection_closure(const TransactionDatabase& db, const Tidset& s);

/// X* = X ∪ {e ∈ I(T(X)) | e > tail(X)}. `cover` must be T(X).
Itemset closure_extension(const TransactionDatabase& db, const Itemset& x, const Tidset& cover);

inline constexpr std::size_t kDefaultExpansionBudget = std::size_t{1} << 20;

class ExpansionBudgetExceeded : public std::length_error {
public:
  ExpansionBudgetExceeded(std::size_t width, std::size_t budget);
  std::size_t width() const noexcept { return width_; }

private:
  std::size_t width_;
};

/// Every itemset of the interval, 2^width of them. Refuses intervals with more
/// members than `budget`.
std::vector<Itemset> expand(const ItemsetInterval& interval,
                            std::size_t budget = kDefaultExpansionBudget);

/// Per-item occurrence counter over a set of transactions. Reusable scratch
/// space for closure and closeness computations; resets only touched entries.
class OccurrenceCounter {
public:
  explicit OccurrenceCounter(std::size_t item_count) : counts_(item_count, 0) {}

  /// Counts the items of every transaction in `tids` that are greater than
  /// `above`. Pass kNoFloor to count every item.
  void count(const TransactionDatabase& db, const Tidset& tids, std::int64_t above = kNoFloor);

  std::uint32_t operator[](Rank r) const noexcept { return counts_[r]; }
  /// Items counted so far, in no particular order.
  const std::vector<Rank>& touched() const noexcept { return touched_; }
  void reset() noexcept;

  static constexpr std::int64_t kNoFloor = -1;

private:
  std::vector<std::uint32_t> counts_;
  std::vector<Rank> touched_;
};

} // namespace anyfim
