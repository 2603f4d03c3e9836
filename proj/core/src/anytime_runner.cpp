#include "anyfim/anytime_runner.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <iomanip>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "anyfim/miner.hpp"

namespace anyfim {

std::optional<Support> reached_minsup(const SupportMap& reference, const std::set<Itemset>& emitted) {
  std::optional<Support> reached;
  for (const auto& [support, sets] : reference) {
    const bool complete =
        std::all_of(sets.begin(), sets.end(), [&](const Itemset& x) { return emitted.contains(x); });
    if (!complete) {
      break;
    }
    reached = support;
  }
  return reached;
}

std::string_view to_string(MinerKind kind) noexcept {
  switch (kind) {
  case MinerKind::all:
    return "all";
  case MinerKind::closed:
    return "closed";
  case MinerKind::baseline:
    return "baseline";
  }
  return "unknown";
}

std::string_view to_string(RunStatus status) noexcept {
  switch (status) {
  case RunStatus::exhausted:
    return "exhausted";
  case RunStatus::interrupted:
    return "interrupted";
  case RunStatus::budget:
    return "budget";
  case RunStatus::floor:
    return "floor";
  }
  return "unknown";
}

std::optional<Support> RunReport::certified_minsup() const {
  if (checkpoints.empty()) {
    return std::nullopt;
  }
  return checkpoints.back().minsup;
}

namespace {

using clock = std::chrono::steady_clock;

constexpr auto kExternalPollPeriod = std::chrono::milliseconds(20);

ProbeRecord probe(const MinerControl& control, clock::time_point start) {
  const ProgressSnapshot snap = control.snapshot();
  return ProbeRecord{std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start), snap.last_minsup,
                     snap.checkpoints, snap.emissions};
}

} // namespace

RunReport run_with_probes(const TransactionDatabase& db, const RunOptions& options) {
  if (options.probe_interval <= std::chrono::nanoseconds::zero()) {
    throw std::invalid_argument("probe interval must be positive");
  }
  if (options.miner == MinerKind::baseline && !options.baseline_minsup) {
    throw std::invalid_argument("baseline runs need a minimum support");
  }

  RunReport report;
  report.dataset_id = options.dataset_id;
  report.miner = options.miner;

  MinerControl control;
  std::mutex mutex;
  std::condition_variable cv;
  bool done = false;
  RunOutcome outcome;
  std::exception_ptr error;
  std::vector<Checkpoint> checkpoints;

  const auto start = clock::now();
  std::thread worker([&] {
    try {
      const EventSink sink = [&](const MinerEvent& event) {
        if (const auto* issued = std::get_if<CheckpointIssued>(&event)) {
          checkpoints.push_back(issued->checkpoint);
        }
        if (options.sink) {
          options.sink(event);
        }
      };
      switch (options.miner) {
      case MinerKind::all:
        outcome = mine_all(db, sink, &control, options.stop_at_support);
        break;
      case MinerKind::closed:
        outcome = mine_closed(db, sink, &control, options.stop_at_support);
        break;
      case MinerKind::baseline:
        outcome = baseline_mine(db, sink, &control, *options.baseline_minsup);
        break;
      }
    } catch (...) {
      error = std::current_exception();
    }
    {
      const std::lock_guard lock(mutex);
      done = true;
    }
    cv.notify_all();
  });

  auto next_probe = start + options.probe_interval;
  const std::optional<clock::time_point> budget_deadline =
      options.budget ? std::optional(start + std::max(*options.budget, std::chrono::nanoseconds::zero()))
                     : std::nullopt;
  std::optional<clock::time_point> abort_deadline;
  bool budget_stop = false;
  bool external_stop = false;

  {
    std::unique_lock lock(mutex);
    while (!done) {
      auto wake = next_probe;
      if (budget_deadline && !budget_stop && !external_stop) {
        wake = std::min(wake, *budget_deadline);
      }
      if (abort_deadline) {
        wake = std::min(wake, *abort_deadline);
      }
      if (options.external_interrupt && !external_stop) {
        wake = std::min(wake, clock::now() + kExternalPollPeriod);
      }
      if (cv.wait_until(lock, wake, [&] { return done; })) {
        break;
      }
      const auto now = clock::now();
      if (!budget_stop && !external_stop && options.external_interrupt &&
          options.external_interrupt->load(std::memory_order_relaxed)) {
        control.request_stop();
        external_stop = true;
        abort_deadline = now + options.grace;
      }
      if (budget_deadline && !budget_stop && !external_stop && now >= *budget_deadline) {
        control.request_stop();
        budget_stop = true;
        abort_deadline = now + options.grace;
      }
      if (abort_deadline && now >= *abort_deadline) {
        control.request_abort();
        abort_deadline.reset();
      }
      if (now >= next_probe) {
        report.probes.push_back(probe(control, start));
        while (next_probe <= now) {
          next_probe += options.probe_interval;
        }
      }
    }
  }
  worker.join();
  if (error) {
    std::rethrow_exception(error);
  }

  report.probes.push_back(probe(control, start));
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
  report.checkpoints = std::move(checkpoints);
  report.interrupted_mid_bin = outcome.status == TerminalStatus::interrupted && outcome.mid_bin;
  switch (outcome.status) {
  case TerminalStatus::exhausted:
    report.status = RunStatus::exhausted;
    break;
  case TerminalStatus::floor:
    report.status = RunStatus::floor;
    break;
  case TerminalStatus::interrupted:
    report.status = budget_stop ? RunStatus::budget : RunStatus::interrupted;
    break;
  }
  return report;
}

namespace {

double seconds(std::chrono::nanoseconds d) { return std::chrono::duration<double>(d).count(); }

} // namespace

void write_probe_csv(std::ostream& out, const RunReport& report) {
  out << "probe_seconds,minsup_reached,checkpoints,patterns\n";
  const auto flags = out.flags();
  out << std::fixed << std::setprecision(6);
  for (const auto& p : report.probes) {
    out << seconds(p.probe_time) << ',';
    if (p.minsup_reached) {
      out << *p.minsup_reached;
    }
    out << ',' << p.checkpoints_so_far << ',' << p.intervals_or_patterns_so_far << '\n';
  }
  out.flags(flags);
}

void write_checkpoint_csv(std::ostream& out, const RunReport& report) {
  out << "elapsed_seconds,minsup,intervals_total,itemsets_certified_total\n";
  const auto flags = out.flags();
  out << std::fixed << std::setprecision(6);
  for (const auto& c : report.checkpoints) {
    out << seconds(c.elapsed) << ',' << c.minsup << ',' << c.intervals_emitted_total << ','
        << c.itemsets_certified_total << '\n';
  }
  out.flags(flags);
}

} // namespace anyfim
