#pragma once

#include <atomic>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anyfim/anytime_runner.hpp"
#include "anyfim/database.hpp"

namespace anyfim::cli {

enum class Mode { all, closed, baseline, oracle, bench };

struct CliConfig {
  std::string input;
  Mode mode = Mode::closed;
  std::optional<Support> stop_at_support;
  std::optional<double> budget_seconds;
  std::optional<double> probe_seconds;
  double grace_seconds = 2.0;
  bool expand = false;
  std::size_t expand_budget = std::size_t{1} << 20;
  std::optional<std::string> output;
  std::optional<Support> baseline_minsup;
  MinerKind bench_miner = MinerKind::closed;
  std::optional<std::string> probe_csv;
  std::optional<std::string> checkpoint_csv;
};

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  /// Interrupted before anything was certified.
  kInterruptedUncertified = 130,
};

/// Parses and runs one invocation. `args` excludes the program name.
/// `signals` counts external interrupt requests: the first asks the miner to
/// stop at its next checkpoint, the second aborts mid-bin. May be null.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<int>* signals = nullptr);

} // namespace anyfim::cli
