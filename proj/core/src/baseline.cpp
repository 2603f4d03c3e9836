#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anyfim/anytime_runner.hpp"
#include "anyfim/closure.hpp"

namespace anyfim {

namespace {

class DepthFirstClosedMiner {
public:
  DepthFirstClosedMiner(const TransactionDatabase& db, const EventSink& sink, MinerControl* control,
                        Support minsup)
      : db_(db), sink_(sink), control_(control), minsup_(minsup), counter_(db.item_count()),
        buckets_(db.item_count()), in_closed_(db.item_count(), 0) {}

  RunOutcome run() {
    const Tid m = static_cast<Tid>(db_.transaction_count());
    if (m == 0 || db_.item_count() == 0 || m < minsup_) {
      return finish();
    }
    std::vector<Tid> all(m);
    for (Tid t = 0; t < m; ++t) {
      all[t] = t;
    }
    const Tidset everything = Tidset::adopt_sorted(std::move(all));
    // The root is I(T): items present in every transaction.
    std::vector<Rank> root;
    for (Rank r = 0; r < db_.item_count(); ++r) {
      if (db_.item_cover(r).size() == m) {
        root.push_back(r);
      }
    }
    const Itemset root_set = Itemset::adopt_sorted(std::move(root));
    if (!root_set.empty() && !emit(root_set, m)) {
      return finish();
    }
    search(root_set, -1, everything);
    return finish();
  }

private:
  bool emit(const Itemset& closed, Support support) {
    sink_(ClosedItemsetEmitted{closed, support});
    ++outcome_.emissions;
    if (control_) {
      control_->publish_emission();
      if (control_->stop_requested()) {
        stopped_ = true;
      }
    }
    return !stopped_;
  }

  RunOutcome finish() {
    outcome_.status = stopped_ ? TerminalStatus::interrupted : TerminalStatus::exhausted;
    outcome_.mid_bin = stopped_;
    if (stopped_) {
      sink_(Interrupted{std::nullopt, true});
    } else {
      sink_(Exhausted{std::nullopt});
    }
    if (control_) {
      control_->publish_finished();
    }
    return outcome_;
  }

  // Extends the closed itemset `q` (whose core item is `core`) with every
  // item j > core, j ∉ q, ascending, keeping prefix-preserving closures.
  void search(const Itemset& q, std::int64_t core, const Tidset& cover) {
    for (const Rank r : q) {
      in_closed_[r] = 1;
    }
    std::vector<Rank> candidates;
    for (const Tid tid : cover) {
      const auto t = db_.transaction(tid);
      for (auto it = t.rbegin(); it != t.rend() && static_cast<std::int64_t>(*it) > core; ++it) {
        if (in_closed_[*it]) {
          continue;
        }
        if (buckets_[*it].empty()) {
          candidates.push_back(*it);
        }
        buckets_[*it].push_back(tid);
      }
    }
    for (const Rank r : q) {
      in_closed_[r] = 0;
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::pair<Rank, Tidset>> children;
    children.reserve(candidates.size());
    for (const Rank j : candidates) {
      auto& bucket = buckets_[j];
      if (bucket.size() >= minsup_) {
        children.emplace_back(j, Tidset::adopt_sorted(std::move(bucket)));
      }
      bucket = {};
    }

    for (auto& [j, child_cover] : children) {
      counter_.reset();
      counter_.count(db_, child_cover);
      std::vector<Rank> closure;
      bool prefix_preserved = true;
      for (const Rank e : counter_.touched()) {
        if (counter_[e] != child_cover.size()) {
          continue;
        }
        if (e < j && !q.contains(e)) {
          prefix_preserved = false;
          break;
        }
        closure.push_back(e);
      }
      if (!prefix_preserved) {
        continue;
      }
      const Itemset child = Itemset::from_unsorted(std::move(closure));
      if (!emit(child, static_cast<Support>(child_cover.size()))) {
        return;
      }
      search(child, j, child_cover);
      if (stopped_) {
        return;
      }
    }
  }

  const TransactionDatabase& db_;
  const EventSink& sink_;
  MinerControl* control_;
  Support minsup_;
  OccurrenceCounter counter_;
  std::vector<std::vector<Tid>> buckets_;
  std::vector<std::uint8_t> in_closed_;
  RunOutcome outcome_;
  bool stopped_ = false;
};

} // namespace

RunOutcome baseline_mine(const TransactionDatabase& db, const EventSink& sink, MinerControl* control,
                         Support minsup) {
  if (minsup < 1) {
    throw std::invalid_argument("baseline minsup must be at least 1");
  }
  return DepthFirstClosedMiner(db, sink, control, minsup).run();
}

} // namespace anyfim
