#include "anyfim/miner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iterator>

namespace anyfim {

std::string_view to_string(CheckpointKind kind) noexcept {
  return kind == CheckpointKind::all_itemsets ? "all" : "closed";
}

std::string_view to_string(TerminalStatus status) noexcept {
  switch (status) {
  case TerminalStatus::exhausted:
    return "exhausted";
  case TerminalStatus::floor:
    return "floor";
  case TerminalStatus::interrupted:
    return "interrupted";
  }
  return "unknown";
}

void MinerControl::publish_emission() noexcept {
  const std::lock_guard lock(mutex_);
  ++progress_.emissions;
}

void MinerControl::publish_checkpoint(Support minsup) noexcept {
  const std::lock_guard lock(mutex_);
  progress_.last_minsup = minsup;
  ++progress_.checkpoints;
}

void MinerControl::publish_finished() noexcept {
  const std::lock_guard lock(mutex_);
  progress_.finished = true;
}

ProgressSnapshot MinerControl::snapshot() const {
  const std::lock_guard lock(mutex_);
  return progress_;
}

Explorer::Explorer(const TransactionDatabase& db)
    : db_(db), counter_(db.item_count()), buckets_(db.item_count()), in_q_(db.item_count(), 0) {}

template <bool Closed>
std::uint64_t Explorer::explore_impl(const ItemsetInterval& interval, SupportIndex& index, const EventSink& sink,
                                     Support floor) {
  const Itemset& p = interval.min_itemset;
  const Itemset& q = interval.max_itemset;
  if constexpr (Closed) {
    sink(ClosedItemsetEmitted{q, interval.support()});
  } else {
    sink(IntervalEmitted{interval});
  }

  const Rank tail = p.tail();
  for (const Rank r : q) {
    in_q_[r] = 1;
  }
  // Deliver the cover to every candidate item j > tail(P), j ∉ Q; each
  // bucket ends up as T(P ∪ {j}) in ascending tid order.
  for (const Tid tid : interval.cover) {
    const auto t = db_.transaction(tid);
    for (auto it = t.rbegin(); it != t.rend() && *it > tail; ++it) {
      if (in_q_[*it]) {
        continue;
      }
      auto& bucket = buckets_[*it];
      if (bucket.empty()) {
        bucket_items_.push_back(*it);
      }
      bucket.push_back(tid);
    }
  }
  std::sort(bucket_items_.begin(), bucket_items_.end(), std::greater<>{});

  std::uint64_t dropped = 0;
  std::vector<Rank> extension;
  for (const Rank j : bucket_items_) {
    auto& bucket = buckets_[j];
    if (bucket.size() < floor) {
      ++dropped;
      bucket.clear();
      continue;
    }
    Tidset cover_r = Tidset::adopt_sorted(std::move(bucket));
    bucket = {};

    counter_.reset();
    counter_.count(db_, cover_r, Closed ? OccurrenceCounter::kNoFloor : static_cast<std::int64_t>(j));
    extension.clear();
    extension.push_back(j);
    bool closed = true;
    for (const Rank e : counter_.touched()) {
      if (counter_[e] != cover_r.size()) {
        continue;
      }
      if (e > j) {
        extension.push_back(e);
      } else if (Closed && e < j && !in_q_[e]) {
        // P ⊆ Q, so e ∉ Q also means e ∉ R.
        closed = false;
        break;
      }
    }
    if (!closed) {
      continue;
    }
    std::sort(extension.begin(), extension.end());
    std::vector<Rank> s;
    s.reserve(q.size() + extension.size());
    std::set_union(q.begin(), q.end(), extension.begin(), extension.end(), std::back_inserter(s));
    index.insert(ItemsetInterval{p.extended_by(j), Itemset::adopt_sorted(std::move(s)), std::move(cover_r)});
  }

  bucket_items_.clear();
  for (const Rank r : q) {
    in_q_[r] = 0;
  }
  return dropped;
}

std::uint64_t Explorer::explore(const ItemsetInterval& interval, SupportIndex& index, const EventSink& sink,
                                Support floor) {
  return explore_impl<false>(interval, index, sink, floor);
}

std::uint64_t Explorer::explore_closed(const ItemsetInterval& interval, SupportIndex& index,
                                       const EventSink& sink, Support floor) {
  return explore_impl<true>(interval, index, sink, floor);
}

bool Explorer::closeness_test(const Itemset& r, const Itemset& q, const Tidset& cover_r) {
  if (r.empty() || cover_r.empty()) {
    throw std::invalid_argument("closeness_test needs a non-empty itemset and cover");
  }
  const Rank tail = r.tail();
  counter_.reset();
  counter_.count(db_, cover_r);
  for (const Rank k : counter_.touched()) {
    if (k < tail && counter_[k] == cover_r.size() && !r.contains(k) && !q.contains(k)) {
      return false;
    }
  }
  return true;
}

void explore(const ItemsetInterval& interval, const TransactionDatabase& db, SupportIndex& index,
             const EventSink& sink) {
  Explorer(db).explore(interval, index, sink);
}

void explore_closed(const ItemsetInterval& interval, const TransactionDatabase& db, SupportIndex& index,
                    const EventSink& sink) {
  Explorer(db).explore_closed(interval, index, sink);
}

bool closeness_test(const TransactionDatabase& db, const Itemset& r, const Itemset& q, const Tidset& cover_r) {
  return Explorer(db).closeness_test(r, q, cover_r);
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > Checkpoint::kSaturatedCount - b ? Checkpoint::kSaturatedCount : a + b;
}

std::uint64_t interval_members(std::size_t width) noexcept {
  return width >= 64 ? Checkpoint::kSaturatedCount : std::uint64_t{1} << width;
}

template <bool Closed>
RunOutcome mine_impl(const TransactionDatabase& db, const EventSink& sink, MinerControl* control,
                     std::optional<Support> stop_at_support) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const Support floor = std::max<Support>(stop_at_support.value_or(1), 1);
  const CheckpointKind kind = Closed ? CheckpointKind::closed_itemsets : CheckpointKind::all_itemsets;

  SupportIndex index = SupportIndex::init(db, Closed);
  Explorer explorer(db);
  RunOutcome outcome;
  std::uint64_t certified = 0;
  std::uint64_t dropped_below_floor = 0;

  const auto finish = [&](TerminalStatus status, bool mid_bin) {
    outcome.status = status;
    outcome.mid_bin = mid_bin;
    switch (status) {
    case TerminalStatus::exhausted:
      sink(Exhausted{outcome.last_checkpoint});
      break;
    case TerminalStatus::floor:
      sink(FloorReached{outcome.last_checkpoint});
      break;
    case TerminalStatus::interrupted:
      sink(Interrupted{outcome.last_checkpoint, mid_bin});
      break;
    }
    if (control) {
      control->publish_finished();
    }
    return outcome;
  };

  for (;;) {
    Bin* bin = index.next_bin();
    if (bin == nullptr) {
      return finish(dropped_below_floor > 0 ? TerminalStatus::floor : TerminalStatus::exhausted, false);
    }
    if (bin->support < floor) {
      return finish(TerminalStatus::floor, false);
    }
    while (!bin->pending.empty()) {
      const ItemsetInterval interval = index.pop_current();
      if constexpr (Closed) {
        dropped_below_floor += explorer.explore_closed(interval, index, sink, floor);
        certified = saturating_add(certified, 1);
      } else {
        dropped_below_floor += explorer.explore(interval, index, sink, floor);
        certified = saturating_add(certified, interval_members(interval.width()));
      }
      ++outcome.emissions;
      if (control) {
        control->publish_emission();
        if (control->abort_requested() && !bin->pending.empty()) {
          return finish(TerminalStatus::interrupted, true);
        }
      }
    }

    Checkpoint checkpoint{bin->support, kind, outcome.emissions, certified,
                          std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start)};
    outcome.last_checkpoint = checkpoint;
    sink(CheckpointIssued{checkpoint});
    if (control) {
      control->publish_checkpoint(checkpoint.minsup);
      if (control->stop_requested()) {
        const auto next = index.peek_support();
        if (!next) {
          return finish(dropped_below_floor > 0 ? TerminalStatus::floor : TerminalStatus::exhausted, false);
        }
        if (*next < floor) {
          return finish(TerminalStatus::floor, false);
        }
        return finish(TerminalStatus::interrupted, false);
      }
    }
  }
}

} // namespace

RunOutcome mine_all(const TransactionDatabase& db, const EventSink& sink, MinerControl* control,
                    std::optional<Support> stop_at_support) {
  return mine_impl<false>(db, sink, control, stop_at_support);
}

RunOutcome mine_closed(const TransactionDatabase& db, const EventSink& sink, MinerControl* control,
                       std::optional<Support> stop_at_support) {
  return mine_impl<true>(db, sink, control, stop_at_support);
}

} // namespace anyfim
