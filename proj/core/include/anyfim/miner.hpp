#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "anyfim/closure.hpp"
#include "anyfim/database.hpp"
#include "anyfim/events.hpp"
#include "anyfim/itemset.hpp"
#include "anyfim/support_index.hpp"

namespace anyfim {

/// Mines every itemset in strictly decreasing support order. Each explored
/// interval is emitted as IntervalEmitted; after a bin drains a
/// CheckpointIssued(s) certifies that the intervals emitted so far expand to
/// exactly the itemsets with support >= s. The terminal event is also sent to
/// `sink`.
///
/// `control` may be null. `stop_at_support` ends the run before the first bin
/// below it; children below the floor are never indexed.
RunOutcome mine_all(const TransactionDatabase& db, const EventSink& sink, MinerControl* control = nullptr,
                    std::optional<Support> stop_at_support = std::nullopt);

/// Closed-itemset variant: emits each closed itemset once as
/// ClosedItemsetEmitted, with closed-kind checkpoints.
RunOutcome mine_closed(const TransactionDatabase& db, const EventSink& sink, MinerControl* control = nullptr,
                       std::optional<Support> stop_at_support = std::nullopt);

/// Expands one interval taken from the current bin: emits it, then extends
/// its minimum itemset P with every item j > tail(P) not in Q, from the
/// highest rank down, and indexes each child (P ∪ {j}, (P ∪ {j})* ∪ Q).
/// Holds reusable scratch buffers; one Explorer per mining thread.
class Explorer {
public:
  explicit Explorer(const TransactionDatabase& db);

  /// Children with support below `floor` are dropped; returns their count.
  std::uint64_t explore(const ItemsetInterval& interval, SupportIndex& index, const EventSink& sink,
                        Support floor = 1);
  /// As explore, but emits the closed itemset Q and keeps only children whose
  /// maximum itemset passes the closeness test.
  std::uint64_t explore_closed(const ItemsetInterval& interval, SupportIndex& index, const EventSink& sink,
                               Support floor = 1);

  /// True iff no item k < tail(R), k ∉ R, k ∉ Q occurs in every transaction
  /// of `cover_r`.
  bool closeness_test(const Itemset& r, const Itemset& q, const Tidset& cover_r);

private:
  template <bool Closed>
  std::uint64_t explore_impl(const ItemsetInterval& interval, SupportIndex& index, const EventSink& sink,
                             Support floor);

  const TransactionDatabase& db_;
  OccurrenceCounter counter_;
  std::vector<std::vector<Tid>> buckets_;
  std::vector<Rank> bucket_items_;
  std::vector<std::uint8_t> in_q_;
};

void explore(const ItemsetInterval& interval, const TransactionDatabase& db, SupportIndex& index,
             const EventSink& sink);
void explore_closed(const ItemsetInterval& interval, const TransactionDatabase& db, SupportIndex& index,
                    const EventSink& sink);
bool closeness_test(const TransactionDatabase& db, const Itemset& r, const Itemset& q, const Tidset& cover_r);

} // namespace anyfim
