#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "anyfim/closure.hpp"
#include "anyfim/miner.hpp"
#include "anyfim/oracle.hpp"
#include "fixtures.hpp"

namespace anyfim {
namespace {

namespace r = testing::d1_rank;
using testing::Recorder;

std::vector<std::pair<Itemset, Itemset>> bounds(const Recorder& rec) {
  std::vector<std::pair<Itemset, Itemset>> out;
  for (const auto& e : rec.emissions) {
    out.emplace_back(e.interval.min_itemset, e.interval.max_itemset);
  }
  return out;
}

TEST(MineAll, D1FullRun) {
  Recorder rec;
  const RunOutcome outcome = mine_all(testing::d1(), rec.sink());
  EXPECT_EQ(outcome.status, TerminalStatus::exhausted);
  EXPECT_EQ(outcome.emissions, 4u);
  EXPECT_EQ(rec.checkpoint_supports(), (std::vector<Support>{4, 2, 1}));
  const std::vector<std::pair<Itemset, Itemset>> expected{
      {{r::a}, {r::a}}, {{r::b}, {r::b, r::a}}, {{r::c}, {r::c, r::a}}, {{r::b, r::c}, {r::b, r::c, r::a}}};
  EXPECT_EQ(bounds(rec), expected);
  EXPECT_EQ(rec.emissions_before_checkpoint, (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(testing::expand_emissions(rec.emissions).itemsets.size(), 7u);
  EXPECT_EQ(rec.checkpoints.back().itemsets_certified_total, 7u);
  EXPECT_EQ(rec.checkpoints.back().kind, CheckpointKind::all_itemsets);
  EXPECT_EQ(rec.terminal_events, 1);
}

TEST(MineAll, D2FullRun) {
  Recorder rec;
  mine_all(testing::d2(), rec.sink());
  EXPECT_EQ(rec.checkpoint_supports(), (std::vector<Support>{2}));
  const std::vector<std::pair<Itemset, Itemset>> expected{{{0}, {0, 1}}, {{1}, {1}}};
  EXPECT_EQ(bounds(rec), expected);
}

TEST(MineAll, FloorAtMaxSingletonSupportGivesOneCheckpoint) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto db = make_database(random_database(12, 8, 0.5, seed));
    if (db.item_count() == 0) {
      continue;
    }
    Recorder rec;
    const RunOutcome outcome = mine_all(db, rec.sink(), nullptr, db.max_singleton_support());
    EXPECT_EQ(rec.checkpoint_supports(), (std::vector<Support>{db.max_singleton_support()}));
    EXPECT_TRUE(outcome.status == TerminalStatus::floor || outcome.status == TerminalStatus::exhausted);
  }
}

TEST(MineAll, EmptyDatabaseExhaustsWithoutCheckpoints) {
  Recorder rec;
  const RunOutcome outcome = mine_all(make_database(parse_fimi("\n\n")), rec.sink());
  EXPECT_EQ(outcome.status, TerminalStatus::exhausted);
  EXPECT_FALSE(outcome.last_checkpoint);
  EXPECT_TRUE(rec.emissions.empty());
}

TEST(Explore, D1Traces) {
  const auto db = testing::d1();
  Explorer explorer(db);
  Recorder rec;

  SupportIndex index = SupportIndex::init(db, false);
  index.next_bin();
  index.pop_current();
  index.next_bin();
  const ItemsetInterval b = index.pop_current();
  explorer.explore(b, index, rec.sink());
  ASSERT_EQ(index.pending_count(), 2u);
  const ItemsetInterval c = index.pop_current();
  EXPECT_EQ(c.min_itemset, (Itemset{r::c}));
  explorer.explore(c, index, rec.sink());
  EXPECT_EQ(index.pending_count(), 1u) << "rank of a lies in Q and must be skipped";

  index.next_bin();
  const ItemsetInterval bc = index.pop_current();
  EXPECT_EQ(bc.min_itemset, (Itemset{r::b, r::c}));
  EXPECT_EQ(bc.max_itemset, (Itemset{r::b, r::c, r::a}));
  EXPECT_EQ(bc.cover, (Tidset{0}));

  SupportIndex fresh = SupportIndex::init(db, false);
  fresh.next_bin();
  explorer.explore(fresh.pop_current(), fresh, rec.sink());
  EXPECT_EQ(fresh.pending_count(), 2u) << "exploring {a} adds nothing";
}

TEST(ClosenessTest, Examples) {
  const auto d2 = testing::d2();
  EXPECT_FALSE(closeness_test(d2, {1}, {1}, cover_of(d2, {1})));
  EXPECT_TRUE(closeness_test(d2, {1}, {0, 1}, cover_of(d2, {1})));
  const auto d1 = testing::d1();
  EXPECT_TRUE(closeness_test(d1, {r::b, r::c}, {r::b, r::c, r::a}, Tidset{0}));
  EXPECT_TRUE(closeness_test(d1, {r::c}, {0, 1, 2}, cover_of(d1, {r::c})));
}

TEST(MineClosed, D1FullRun) {
  Recorder rec;
  mine_closed(testing::d1(), rec.sink());
  EXPECT_EQ(rec.checkpoint_supports(), (std::vector<Support>{4, 2, 1}));
  std::vector<std::pair<Itemset, Support>> got;
  for (const auto& e : rec.emissions) {
    EXPECT_TRUE(e.closed);
    got.emplace_back(e.interval.max_itemset, e.interval.support());
  }
  const std::vector<std::pair<Itemset, Support>> expected{
      {{r::a}, 4}, {{r::b, r::a}, 2}, {{r::c, r::a}, 2}, {{r::b, r::c, r::a}, 1}};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(rec.checkpoints.back().kind, CheckpointKind::closed_itemsets);
  EXPECT_EQ(rec.checkpoints.back().itemsets_certified_total, 4u);
}

TEST(MineClosed, D2SingleEmission) {
  Recorder rec;
  mine_closed(testing::d2(), rec.sink());
  ASSERT_EQ(rec.emissions.size(), 1u);
  EXPECT_EQ(rec.emissions[0].interval.max_itemset, (Itemset{0, 1}));
  EXPECT_EQ(rec.checkpoint_supports(), (std::vector<Support>{2}));
}

TEST(MineClosed, IdenticalTransactions) {
  Recorder rec;
  mine_closed(make_database(parse_fimi("4 8 9\n9 8 4\n4 9 8")), rec.sink());
  ASSERT_EQ(rec.emissions.size(), 1u);
  EXPECT_EQ(rec.emissions[0].interval.max_itemset.size(), 3u);
  EXPECT_EQ(rec.checkpoint_supports(), (std::vector<Support>{3}));
}

TEST(MinerProperty, AllAndClosedAgreeWithOracle) {
  for (const auto& entry : testing::oracle_corpus(80, 4242)) {
    const auto db = make_database(entry.raw);
    const auto ref = enumerate_all(db);

    Recorder all;
    mine_all(db, all.sink());
    const auto expansion = testing::expand_emissions(all.emissions);
    EXPECT_EQ(expansion.duplicates, 0u) << entry.name;
    EXPECT_EQ(expansion.itemsets, ref.support_of) << entry.name;
    for (const auto& e : all.emissions) {
      for (const Itemset& y : expand(e.interval)) {
        EXPECT_EQ(cover_of(db, y), e.interval.cover) << entry.name;
      }
    }

    Recorder closed;
    mine_closed(db, closed.sink());
    std::map<Itemset, Support> closed_got;
    for (const auto& e : closed.emissions) {
      EXPECT_TRUE(closed_got.emplace(e.interval.max_itemset, e.interval.support()).second) << entry.name;
    }
    EXPECT_EQ(closed_got, testing::flatten(ref.closed_by_support)) << entry.name;

    // Closure of every all-itemset member is an emitted closed itemset.
    for (const auto& [x, s] : expansion.itemsets) {
      const auto it = closed_got.find(intersection_closure(db, cover_of(db, x)));
      ASSERT_NE(it, closed_got.end()) << entry.name;
      EXPECT_EQ(it->second, s);
    }
    EXPECT_EQ(closed.checkpoint_supports(), all.checkpoint_supports()) << entry.name;
  }
}

TEST(MinerControl, StopRequestEndsAtCheckpoint) {
  const auto db = testing::d1();
  MinerControl control;
  Recorder rec;
  const EventSink sink = [&](const MinerEvent& ev) {
    rec.on_event(ev);
    if (std::holds_alternative<IntervalEmitted>(ev)) {
      control.request_stop();
    }
  };
  const RunOutcome outcome = mine_all(db, sink, &control);
  EXPECT_EQ(outcome.status, TerminalStatus::interrupted);
  EXPECT_FALSE(outcome.mid_bin);
  ASSERT_TRUE(outcome.last_checkpoint);
  EXPECT_EQ(outcome.last_checkpoint->minsup, 4u);
  EXPECT_EQ(rec.emissions.size(), 1u);
}

TEST(MinerControl, AbortMidBinCertifiesOnlyLastCheckpoint) {
  const auto db = testing::d1();
  MinerControl control;
  Recorder rec;
  const EventSink sink = [&](const MinerEvent& ev) {
    rec.on_event(ev);
    if (rec.emissions.size() == 2) {
      control.request_abort();
    }
  };
  const RunOutcome outcome = mine_all(db, sink, &control);
  EXPECT_EQ(outcome.status, TerminalStatus::interrupted);
  EXPECT_TRUE(outcome.mid_bin);
  ASSERT_TRUE(outcome.last_checkpoint);
  EXPECT_EQ(outcome.last_checkpoint->minsup, 4u);
  EXPECT_EQ(rec.emissions.size(), 2u);
  EXPECT_EQ(control.snapshot().last_minsup, 4u);
  EXPECT_TRUE(control.snapshot().finished);
}

TEST(MinerDeterminism, RepeatedRunsEmitSameSequence) {
  const auto db = make_database(basket_database({.transactions = 300, .items = 40, .seed = 3}));
  Recorder first;
  Recorder second;
  mine_closed(db, first.sink(), nullptr, 5);
  mine_closed(db, second.sink(), nullptr, 5);
  ASSERT_EQ(first.emissions.size(), second.emissions.size());
  for (std::size_t i = 0; i < first.emissions.size(); ++i) {
    EXPECT_EQ(first.emissions[i].interval, second.emissions[i].interval);
  }
  EXPECT_EQ(first.checkpoint_supports(), second.checkpoint_supports());
}

} // namespace
} // namespace anyfim
