#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "anyfim/closure.hpp"
#include "anyfim/miner.hpp"
#include "anyfim/oracle.hpp"

namespace anyfim::cli {

namespace {

using namespace std::chrono_literals;

void write_items(std::ostream& out, const TransactionDatabase& db, std::span<const Rank> ranks) {
  const auto ids = db.decode(ranks);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) {
      out << ',';
    }
    out << ids[i];
  }
}

void write_checkpoint(std::ostream& out, const Checkpoint& c) {
  out << "#CHECKPOINT " << c.minsup << ' '
      << std::chrono::duration_cast<std::chrono::milliseconds>(c.elapsed).count() << '\n';
}

void write_end(std::ostream& out, std::string_view status, std::optional<Support> certified) {
  out << "#END status=" << status << " certified_minsup=";
  if (certified) {
    out << *certified;
  } else {
    out << "none";
  }
  out << '\n';
}

/// Forwards the wall-clock budget and external signals to a miner running on
/// the calling thread. Stops on the first request, aborts after the grace
/// period or on a second signal.
class Watchdog {
public:
  Watchdog(MinerControl& control, std::optional<std::chrono::nanoseconds> budget, std::chrono::nanoseconds grace,
           const std::atomic<int>* signals)
      : control_(control), budget_(budget), grace_(grace), signals_(signals) {
    if (budget_ || signals_) {
      thread_ = std::thread([this] { watch(); });
    }
  }
  Watchdog(const Watchdog&) = delete;
  Watchdog& operator=(const Watchdog&) = delete;
  ~Watchdog() {
    {
      const std::lock_guard lock(mutex_);
      done_ = true;
    }
    cv_.notify_all();
    if (thread_.joinable()) {
      thread_.join();
    }
  }

  bool budget_expired() const noexcept { return budget_expired_.load(); }

private:
  void watch() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    std::optional<clock::time_point> abort_at;
    std::unique_lock lock(mutex_);
    while (!done_) {
      auto wake = clock::now() + 20ms;
      if (budget_ && !budget_expired_) {
        wake = std::min(wake, start + *budget_);
      }
      if (abort_at) {
        wake = std::min(wake, *abort_at);
      }
      if (cv_.wait_until(lock, wake, [this] { return done_; })) {
        break;
      }
      const auto now = clock::now();
      const int seen = signals_ ? signals_->load() : 0;
      if (seen >= 2) {
        control_.request_abort();
      } else if (seen == 1 && !control_.stop_requested()) {
        control_.request_stop();
        abort_at = now + grace_;
      }
      if (budget_ && !budget_expired_ && now >= start + *budget_) {
        budget_expired_ = true;
        control_.request_stop();
        abort_at = now + grace_;
      }
      if (abort_at && now >= *abort_at) {
        control_.request_abort();
        abort_at.reset();
      }
    }
  }

  MinerControl& control_;
  std::optional<std::chrono::nanoseconds> budget_;
  std::chrono::nanoseconds grace_;
  const std::atomic<int>* signals_;
  std::atomic<bool> budget_expired_{false};
  std::mutex mutex_;
  std::condition_variable cv_;
  bool done_ = false;
  std::thread thread_;
};

std::chrono::nanoseconds to_duration(double seconds) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::duration<double>(seconds));
}

std::string status_name(const RunOutcome& outcome, bool budget_expired) {
  if (outcome.status == TerminalStatus::interrupted && budget_expired) {
    return "budget";
  }
  return std::string(to_string(outcome.status));
}

int exit_code_for(const RunOutcome& outcome) {
  if (outcome.status == TerminalStatus::interrupted && !outcome.last_checkpoint) {
    return kInterruptedUncertified;
  }
  return kOk;
}

int run_miner(const CliConfig& cfg, const TransactionDatabase& db, std::ostream& out,
              const std::atomic<int>* signals) {
  MinerControl control;
  const Watchdog watchdog(control,
                          cfg.budget_seconds ? std::optional(to_duration(*cfg.budget_seconds)) : std::nullopt,
                          to_duration(cfg.grace_seconds), signals);

  const EventSink sink = [&](const MinerEvent& event) {
    if (const auto* e = std::get_if<IntervalEmitted>(&event)) {
      const auto& iv = e->interval;
      if (cfg.expand) {
        for (const Itemset& x : expand(iv, cfg.expand_budget)) {
          out << "sup=" << iv.support() << '\t';
          write_items(out, db, x.view());
          out << '\n';
        }
      } else {
        out << "sup=" << iv.support() << "\tP=";
        write_items(out, db, iv.min_itemset.view());
        out << "\tQ=";
        write_items(out, db, iv.max_itemset.view());
        out << '\n';
      }
    } else if (const auto* c = std::get_if<ClosedItemsetEmitted>(&event)) {
      out << "sup=" << c->support << '\t';
      write_items(out, db, c->itemset.view());
      out << '\n';
    } else if (const auto* cp = std::get_if<CheckpointIssued>(&event)) {
      write_checkpoint(out, cp->checkpoint);
    }
  };

  RunOutcome outcome;
  switch (cfg.mode) {
  case Mode::all:
    outcome = mine_all(db, sink, &control, cfg.stop_at_support);
    break;
  case Mode::closed:
    outcome = mine_closed(db, sink, &control, cfg.stop_at_support);
    break;
  case Mode::baseline:
    outcome = baseline_mine(db, sink, &control, *cfg.baseline_minsup);
    break;
  default:
    throw std::logic_error("run_miner called for a non-mining mode");
  }
  std::optional<Support> certified;
  if (cfg.mode == Mode::baseline) {
    if (outcome.status == TerminalStatus::exhausted) {
      certified = cfg.baseline_minsup;
    }
  } else if (outcome.last_checkpoint) {
    certified = outcome.last_checkpoint->minsup;
  }
  write_end(out, status_name(outcome, watchdog.budget_expired()), certified);
  return cfg.mode == Mode::baseline && outcome.status == TerminalStatus::interrupted ? kInterruptedUncertified
                                                                                     : exit_code_for(outcome);
}

int run_oracle(const TransactionDatabase& db, std::ostream& out) {
  const ReferenceIndex ref = enumerate_all(db);
  // Sort each support level by external ids so the listing is independent of
  // tie-breaking in the item order.
  for (const auto& [support, sets] : ref.by_support) {
    std::map<std::vector<ExternalItem>, bool> level;
    for (const Itemset& x : sets) {
      level.emplace(db.decode(x.view()), ref.is_closed(x));
    }
    for (const auto& [ids, closed] : level) {
      out << "sup=" << support << '\t';
      for (std::size_t i = 0; i < ids.size(); ++i) {
        out << (i ? "," : "") << ids[i];
      }
      out << (closed ? "\tclosed\n" : "\n");
    }
  }
  out << "#ITEMSETS " << ref.itemset_count() << " closed=" << ref.closed_count() << '\n';
  write_end(out, "exhausted",
            ref.distinct_supports.empty() ? std::nullopt : std::optional(ref.distinct_supports.back()));
  return kOk;
}

int run_bench(const CliConfig& cfg, const TransactionDatabase& db, std::ostream& out,
              const std::atomic<int>* signals) {
  std::atomic<bool> interrupt{false};
  RunOptions options;
  options.dataset_id = cfg.input;
  options.miner = cfg.bench_miner;
  options.probe_interval = to_duration(cfg.probe_seconds.value_or(1.0));
  if (cfg.budget_seconds) {
    options.budget = to_duration(*cfg.budget_seconds);
  }
  options.grace = to_duration(cfg.grace_seconds);
  options.stop_at_support = cfg.stop_at_support;
  options.baseline_minsup = cfg.baseline_minsup;

  // Bridge the signal counter to the runner's boolean flag.
  std::atomic<bool> finished{false};
  std::thread bridge;
  if (signals) {
    options.external_interrupt = &interrupt;
    bridge = std::thread([&] {
      while (!finished.load()) {
        if (signals->load() > 0) {
          interrupt.store(true);
        }
        std::this_thread::sleep_for(20ms);
      }
    });
  }
  RunReport report;
  try {
    report = run_with_probes(db, options);
  } catch (...) {
    finished = true;
    if (bridge.joinable()) {
      bridge.join();
    }
    throw;
  }
  finished = true;
  if (bridge.joinable()) {
    bridge.join();
  }

  const auto write_to = [&](const std::optional<std::string>& path, auto writer) {
    if (!path) {
      writer(out);
      return;
    }
    std::ofstream file(*path);
    if (!file) {
      throw std::runtime_error("cannot open " + *path + " for writing");
    }
    writer(file);
    if (!file) {
      throw std::runtime_error("write to " + *path + " failed");
    }
  };
  write_to(cfg.probe_csv, [&](std::ostream& o) { write_probe_csv(o, report); });
  write_to(cfg.checkpoint_csv, [&](std::ostream& o) { write_checkpoint_csv(o, report); });
  write_end(out, to_string(report.status), report.certified_minsup());
  if ((report.status == RunStatus::interrupted || report.status == RunStatus::budget) &&
      !report.certified_minsup()) {
    return kInterruptedUncertified;
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<int>* signals) {
  CliConfig cfg;
  CLI::App app{"Anytime frequent and closed itemset miner"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  const std::map<std::string, Mode> modes{{"all", Mode::all},
                                          {"closed", Mode::closed},
                                          {"baseline", Mode::baseline},
                                          {"oracle", Mode::oracle},
                                          {"bench", Mode::bench}};
  const std::map<std::string, MinerKind> miners{
      {"all", MinerKind::all}, {"closed", MinerKind::closed}, {"baseline", MinerKind::baseline}};

  app.add_option("--input", cfg.input, "FIMI transaction file")->required();
  app.add_option("--mode", cfg.mode, "all | closed | baseline | oracle | bench")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  auto* stop_opt = app.add_option("--stop-at-support", cfg.stop_at_support, "Stop before the first bin below this support")
                       ->check(CLI::PositiveNumber);
  auto* budget_opt =
      app.add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock budget")->check(CLI::NonNegativeNumber);
  auto* probe_opt =
      app.add_option("--probe-seconds", cfg.probe_seconds, "Probe interval (bench mode)")->check(CLI::PositiveNumber);
  app.add_option("--grace-seconds", cfg.grace_seconds, "Wait for a checkpoint this long before aborting mid-bin")
      ->check(CLI::NonNegativeNumber);
  auto* expand_flag = app.add_flag("--expand", cfg.expand, "Print every itemset of each interval (mode=all)");
  app.add_option("--expand-budget", cfg.expand_budget, "Largest interval --expand will print")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "Write the pattern stream here instead of stdout");
  auto* minsup_opt = app.add_option("--baseline-minsup", cfg.baseline_minsup, "Minimum support of the baseline miner")
                         ->check(CLI::PositiveNumber);
  std::string bench_miner = "closed";
  auto* bench_miner_opt = app.add_option("--bench-miner", bench_miner, "Miner used by bench mode: all | closed | baseline")
                              ->check(CLI::IsMember(miners, CLI::ignore_case));
  auto* probe_csv_opt = app.add_option("--probe-csv", cfg.probe_csv, "Probe report path (bench mode)");
  auto* checkpoint_csv_opt =
      app.add_option("--checkpoint-csv", cfg.checkpoint_csv, "Checkpoint log path (bench mode)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  cfg.bench_miner = miners.at(CLI::detail::to_lower(bench_miner));

  const auto usage = [&](const std::string& message) {
    err << "error: " << message << '\n';
    return kUsage;
  };
  const bool bench = cfg.mode == Mode::bench;
  const bool wants_minsup = cfg.mode == Mode::baseline || (bench && cfg.bench_miner == MinerKind::baseline);
  if (expand_flag->count() && cfg.mode != Mode::all) {
    return usage("--expand is only valid with --mode all");
  }
  if (wants_minsup && !minsup_opt->count()) {
    return usage("--baseline-minsup is required for the baseline miner");
  }
  if (!wants_minsup && minsup_opt->count()) {
    return usage("--baseline-minsup is only valid for the baseline miner");
  }
  if (!bench && (probe_opt->count() || probe_csv_opt->count() || checkpoint_csv_opt->count() ||
                 bench_miner_opt->count())) {
    return usage("--probe-seconds, --probe-csv, --checkpoint-csv and --bench-miner need --mode bench");
  }
  if (cfg.mode == Mode::oracle && (stop_opt->count() || budget_opt->count())) {
    return usage("--stop-at-support and --budget-seconds do not apply to --mode oracle");
  }
  if ((cfg.mode == Mode::baseline || (bench && cfg.bench_miner == MinerKind::baseline)) && stop_opt->count()) {
    return usage("--stop-at-support does not apply to the baseline miner");
  }

  try {
    const TransactionDatabase db = make_database(load_fimi(cfg.input));

    std::ofstream file;
    if (cfg.output) {
      file.open(*cfg.output);
      if (!file) {
        err << "error: cannot open " << *cfg.output << " for writing\n";
        return kFailure;
      }
    }
    std::ostream& sink = cfg.output ? file : out;

    int code = kOk;
    switch (cfg.mode) {
    case Mode::oracle:
      code = run_oracle(db, sink);
      break;
    case Mode::bench:
      code = run_bench(cfg, db, sink, signals);
      break;
    default:
      code = run_miner(cfg, db, sink, signals);
      break;
    }
    sink.flush();
    if (!sink) {
      err << "error: writing output failed\n";
      return kFailure;
    }
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

} // namespace anyfim::cli
