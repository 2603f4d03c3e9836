#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "anyfim/database.hpp"
#include "anyfim/events.hpp"
#include "anyfim/itemset.hpp"
#include "anyfim/oracle.hpp"

namespace anyfim {

/// Depth-first closed-itemset enumerator with a fixed minimum support and no
/// support ordering. Children are visited in ascending rank order with the
/// prefix-preserving closure test, so each closed itemset is emitted once as
/// ClosedItemsetEmitted. No checkpoints are issued. `control` may be null; an
/// abort (or stop) request ends the run after the current emission.
RunOutcome baseline_mine(const TransactionDatabase& db, const EventSink& sink, MinerControl* control,
                         Support minsup);

/// Largest s such that every reference itemset with support >= s appears in
/// `emitted`; nullopt when not even the top support level is complete.
std::optional<Support> reached_minsup(const SupportMap& reference, const std::set<Itemset>& emitted);

enum class MinerKind { all, closed, baseline };

std::string_view to_string(MinerKind kind) noexcept;

struct ProbeRecord {
  std::chrono::nanoseconds probe_time{0};
  std::optional<Support> minsup_reached;
  std::uint64_t checkpoints_so_far = 0;
  std::uint64_t intervals_or_patterns_so_far = 0;
};

enum class RunStatus { exhausted, interrupted, budget, floor };

std::string_view to_string(RunStatus status) noexcept;

struct RunReport {
  std::string dataset_id;
  MinerKind miner = MinerKind::closed;
  std::vector<ProbeRecord> probes;
  std::vector<Checkpoint> checkpoints;
  RunStatus status = RunStatus::exhausted;
  /// The run was aborted before its current bin drained.
  bool interrupted_mid_bin = false;
  std::chrono::nanoseconds elapsed{0};

  std::optional<Support> certified_minsup() const;
};

struct RunOptions {
  std::string dataset_id;
  MinerKind miner = MinerKind::closed;
  std::chrono::nanoseconds probe_interval{std::chrono::seconds(1)};
  /// Wall-clock budget; a stop is requested when it elapses.
  std::optional<std::chrono::nanoseconds> budget;
  /// After a budget stop, how long to wait for the bin boundary before
  /// aborting mid-bin.
  std::chrono::nanoseconds grace{std::chrono::seconds(2)};
  std::optional<Support> stop_at_support;
  /// Required for MinerKind::baseline.
  std::optional<Support> baseline_minsup;
  /// Polled by the supervisor; when set, a stop is requested (status
  /// interrupted).
  const std::atomic<bool>* external_interrupt = nullptr;
  /// Receives every miner event, on the miner thread.
  EventSink sink;
};

/// Runs one miner on a worker thread while this thread samples its published
/// progress at every multiple of probe_interval, plus once at termination.
/// Throws std::invalid_argument for a non-positive probe interval or a
/// baseline run without baseline_minsup.
RunReport run_with_probes(const TransactionDatabase& db, const RunOptions& options);

/// `probe_seconds,minsup_reached,checkpoints,patterns` with header;
/// minsup_reached is empty when no checkpoint was reached yet.
void write_probe_csv(std::ostream& out, const RunReport& report);
/// `elapsed_seconds,minsup,intervals_total,itemsets_certified_total` with
/// header.
void write_checkpoint_csv(std::ostream& out, const RunReport& report);

} // namespace anyfim
