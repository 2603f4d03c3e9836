#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "anyfim/closure.hpp"
#include "anyfim/database.hpp"
#include "anyfim/events.hpp"
#include "anyfim/itemset.hpp"
#include "anyfim/synthetic.hpp"

namespace anyfim::testing {

// D1 with a=0, b=1, c=2: {abc, ab, ac, a}. Recoded ranks: b=0, c=1, a=2.
inline constexpr const char* kD1Text = "0 1 2\n0 1\n0 2\n0";
// D2 with x=0, y=1: {xy, xy}.
inline constexpr const char* kD2Text = "0 1\n0 1";

inline TransactionDatabase d1() { return make_database(parse_fimi(kD1Text)); }
inline TransactionDatabase d2() { return make_database(parse_fimi(kD2Text)); }

namespace d1_rank {
inline constexpr Rank b = 0;
inline constexpr Rank c = 1;
inline constexpr Rank a = 2;
} // namespace d1_rank

/// Copies every event of a run so it can be inspected afterwards.
struct Recorder {
  struct Emission {
    ItemsetInterval interval; // closed runs: min = max = the closed itemset
    bool closed = false;
  };
  std::vector<Emission> emissions;
  std::vector<Checkpoint> checkpoints;
  /// Number of emissions preceding each checkpoint.
  std::vector<std::size_t> emissions_before_checkpoint;
  int terminal_events = 0;

  EventSink sink() {
    return [this](const MinerEvent& event) { on_event(event); };
  }

  void on_event(const MinerEvent& event) {
    if (const auto* e = std::get_if<IntervalEmitted>(&event)) {
      emissions.push_back({e->interval, false});
    } else if (const auto* c = std::get_if<ClosedItemsetEmitted>(&event)) {
      std::vector<Tid> fake(c->support);
      for (Tid t = 0; t < c->support; ++t) {
        fake[t] = t;
      }
      emissions.push_back({ItemsetInterval{c->itemset, c->itemset, Tidset::adopt_sorted(std::move(fake))}, true});
    } else if (const auto* cp = std::get_if<CheckpointIssued>(&event)) {
      checkpoints.push_back(cp->checkpoint);
      emissions_before_checkpoint.push_back(emissions.size());
    } else {
      ++terminal_events;
    }
  }

  std::vector<Support> checkpoint_supports() const {
    std::vector<Support> out;
    for (const auto& c : checkpoints) {
      out.push_back(c.minsup);
    }
    return out;
  }
};

/// Expands the first `count` emissions into (itemset -> support), counting
/// itemsets that show up more than once.
struct Expansion {
  std::map<Itemset, Support> itemsets;
  std::size_t duplicates = 0;
};

inline Expansion expand_emissions(const std::vector<Recorder::Emission>& emissions, std::size_t count) {
  Expansion out;
  for (std::size_t i = 0; i < count && i < emissions.size(); ++i) {
    const auto& iv = emissions[i].interval;
    for (Itemset& x : expand(iv)) {
      if (!out.itemsets.emplace(std::move(x), iv.support()).second) {
        ++out.duplicates;
      }
    }
  }
  return out;
}

inline Expansion expand_emissions(const std::vector<Recorder::Emission>& emissions) {
  return expand_emissions(emissions, emissions.size());
}

/// Itemsets of a reference with support >= s, paired with their supports.
template <typename SupportMapT>
std::map<Itemset, Support> flatten(const SupportMapT& by_support, Support at_least = 1) {
  std::map<Itemset, Support> out;
  for (const auto& [s, sets] : by_support) {
    if (s < at_least) {
      continue;
    }
    for (const auto& x : sets) {
      out.emplace(x, s);
    }
  }
  return out;
}

struct CorpusEntry {
  std::string name;
  RawDatabase raw;
};

/// D1, D2 and `random_count` seeded random databases with at most 10 items,
/// at most 15 transactions and densities in [0.2, 0.8].
inline std::vector<CorpusEntry> oracle_corpus(std::size_t random_count = 200, std::uint64_t seed = 20240601) {
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"D1", parse_fimi(kD1Text)});
  corpus.push_back({"D2", parse_fimi(kD2Text)});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> items(1, 10);
  std::uniform_int_distribution<std::size_t> transactions(1, 15);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t n = items(rng);
    const std::size_t m = transactions(rng);
    const double p = density(rng);
    corpus.push_back({"random#" + std::to_string(i) + " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")",
                      random_database(m, n, p, rng())});
  }
  return corpus;
}

} // namespace anyfim::testing
