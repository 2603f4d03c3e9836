#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "anyfim/database.hpp"
#include "anyfim/itemset.hpp"

namespace anyfim {

/// Raised when an insertion would reopen a completed part of the search
/// space. Always a miner bug, never a user error.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Pending intervals that share one support value, drained FIFO.
struct Bin {
  Support support = 0;
  std::deque<ItemsetInterval> pending;
  std::uint64_t emitted_count = 0;
};

/// Summary of a bin after it was drained and dropped.
struct RetiredBin {
  Support support;
  std::uint64_t emitted_count;
};

/// Frontier of the search: intervals binned by support and processed in
/// strictly decreasing support order. Once a bin has been taken by next_bin,
/// every later insertion must carry a strictly smaller support.
class SupportIndex {
public:
  /// One interval (I, I*) per singleton I, in ascending rank order. With
  /// `closed_only`, only singletons whose I* equals I(T(I)) are kept.
  static SupportIndex init(const TransactionDatabase& db, bool closed_only);

  /// Appends to the bin keyed by the interval's support, creating it if
  /// needed. Throws InvariantViolation if the support is not below the
  /// current one.
  void insert(ItemsetInterval interval);

  /// Retires the current bin, then selects the highest-support bin with
  /// pending intervals. Returns nullptr once nothing is pending anywhere.
  /// The returned bin stays valid across insertions into other bins.
  Bin* next_bin();

  std::optional<Support> current_support() const noexcept { return current_; }
  /// Highest support still pending, if any.
  std::optional<Support> peek_support() const noexcept;
  std::size_t bin_count() const noexcept { return bins_.size(); }
  std::size_t pending_count() const noexcept { return pending_; }
  /// Bins drained so far, in the order they were processed.
  const std::vector<RetiredBin>& retired() const noexcept { return retired_; }
  /// Lowest support any interval was ever inserted with.
  std::optional<Support> lowest_inserted_support() const noexcept { return lowest_inserted_; }

  /// Removes the front interval of the current bin. Precondition: the current
  /// bin is non-empty.
  ItemsetInterval pop_current();

private:
  std::map<Support, Bin, std::greater<>> bins_;
  std::optional<Support> current_;
  std::optional<Support> lowest_inserted_;
  std::size_t pending_ = 0;
  std::vector<RetiredBin> retired_;
};

} // namespace anyfim
