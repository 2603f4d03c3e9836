#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string_view>
#include <variant>

#include "anyfim/database.hpp"
#include "anyfim/itemset.hpp"

namespace anyfim {

enum class CheckpointKind { all_itemsets, closed_itemsets };

std::string_view to_string(CheckpointKind kind) noexcept;

/// Certifies that every (closed) itemset with support >= minsup has been
/// emitted before this checkpoint.
struct Checkpoint {
  Support minsup = 0;
  CheckpointKind kind = CheckpointKind::all_itemsets;
  std::uint64_t intervals_emitted_total = 0;
  /// Itemsets covered by the emissions so far. For all-itemset runs this is
  /// the sum of 2^width over emitted intervals and saturates at
  /// kSaturatedCount; for closed runs it is the closed itemset count.
  std::uint64_t itemsets_certified_total = 0;
  std::chrono::nanoseconds elapsed{0};

  static constexpr std::uint64_t kSaturatedCount = std::numeric_limits<std::uint64_t>::max();
};

struct IntervalEmitted {
  const ItemsetInterval& interval;
};

/// Closed-itemset runs emit the maximum itemset of each explored interval.
struct ClosedItemsetEmitted {
  const Itemset& itemset;
  Support support;
};

struct CheckpointIssued {
  Checkpoint checkpoint;
};

struct Exhausted {
  std::optional<Checkpoint> last_checkpoint;
};

/// The next bin lies below the requested support floor.
struct FloorReached {
  std::optional<Checkpoint> last_checkpoint;
};

/// Stop requested from outside. `mid_bin` is set when the run was aborted
/// before the current bin drained; only `last_checkpoint` is certified then.
struct Interrupted {
  std::optional<Checkpoint> last_checkpoint;
  bool mid_bin = false;
};

using MinerEvent =
    std::variant<IntervalEmitted, ClosedItemsetEmitted, CheckpointIssued, Exhausted, FloorReached, Interrupted>;

using EventSink = std::function<void(const MinerEvent&)>;

enum class TerminalStatus { exhausted, floor, interrupted };

std::string_view to_string(TerminalStatus status) noexcept;

struct RunOutcome {
  TerminalStatus status = TerminalStatus::exhausted;
  std::optional<Checkpoint> last_checkpoint;
  bool mid_bin = false;
  std::uint64_t emissions = 0;
};

/// Consistent view of a run's progress, published by the miner.
struct ProgressSnapshot {
  std::optional<Support> last_minsup;
  std::uint64_t checkpoints = 0;
  std::uint64_t emissions = 0;
  bool finished = false;
};

/// Cross-thread control channel between a miner and whoever supervises it.
/// A stop request is honored at the next bin boundary (after its checkpoint);
/// an abort request is honored after the interval being explored. Both
/// request methods are async-signal-safe.
class MinerControl {
public:
  void request_stop() noexcept { stop_.store(true, std::memory_order_relaxed); }
  void request_abort() noexcept {
    abort_.store(true, std::memory_order_relaxed);
    stop_.store(true, std::memory_order_relaxed);
  }
  bool stop_requested() const noexcept { return stop_.load(std::memory_order_relaxed); }
  bool abort_requested() const noexcept { return abort_.load(std::memory_order_relaxed); }

  void publish_emission() noexcept;
  void publish_checkpoint(Support minsup) noexcept;
  void publish_finished() noexcept;
  ProgressSnapshot snapshot() const;

private:
  std::atomic<bool> stop_{false};
  std::atomic<bool> abort_{false};
  mutable std::mutex mutex_;
  ProgressSnapshot progress_;
};

} // namespace anyfim
