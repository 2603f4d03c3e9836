#include <gtest/gtest.h>

#include <random>

#include "anyfim/miner.hpp"
#include "anyfim/oracle.hpp"
#include "anyfim/synthetic.hpp"
#include "fixtures.hpp"

namespace anyfim {
namespace {

namespace r = testing::d1_rank;

TEST(EnumerateAll, D1) {
  const auto ref = enumerate_all(testing::d1());
  EXPECT_EQ(ref.itemset_count(), 7u);
  EXPECT_EQ(ref.closed_count(), 4u);
  EXPECT_EQ(ref.support({r::a}), 4u);
  EXPECT_EQ(ref.support({r::b, r::a}), 2u);
  EXPECT_EQ(ref.support({r::b, r::c}), 1u);
  EXPECT_EQ(ref.distinct_supports, (std::vector<Support>{4, 2, 1}));
  EXPECT_EQ(ref.by_support.at(2).size(), 4u);
  const SupportMap closed{{4, {{r::a}}}, {2, {{r::b, r::a}, {r::c, r::a}}}, {1, {{r::b, r::c, r::a}}}};
  EXPECT_EQ(ref.closed_by_support, closed);
  EXPECT_FALSE(ref.is_closed({r::b}));
  EXPECT_FALSE(ref.support({}).has_value());
}

TEST(EnumerateAll, D2) {
  const auto ref = enumerate_all(testing::d2());
  EXPECT_EQ(ref.by_support, (SupportMap{{2, {{0}, {1}, {0, 1}}}}));
  EXPECT_EQ(ref.closed_by_support, (SupportMap{{2, {{0, 1}}}}));
}

TEST(EnumerateAll, SingleEmptyTransaction) {
  const auto ref = enumerate_all(make_database(parse_fimi("\n")));
  EXPECT_EQ(ref.itemset_count(), 0u);
  EXPECT_TRUE(ref.distinct_supports.empty());
}

TEST(EnumerateAll, BudgetRefusal) {
  // 12 items in one transaction: 4095 itemsets.
  const auto db = make_database(parse_fimi("0 1 2 3 4 5 6 7 8 9 10 11"));
  EXPECT_EQ(enumerate_all(db, 4095).itemset_count(), 4095u);
  try {
    enumerate_all(db, 100);
    FAIL() << "expected OracleBudgetExceeded";
  } catch (const OracleBudgetExceeded& e) {
    EXPECT_GT(e.reached(), 100u);
  }
}

TEST(CompletenessProfile, FullEmptyAndStep) {
  const auto ref = enumerate_all(testing::d1());
  std::vector<std::pair<Itemset, Support>> full(ref.support_of.begin(), ref.support_of.end());
  for (const auto& [s, ratio] : completeness_profile(ref, full)) {
    EXPECT_DOUBLE_EQ(ratio, 1.0) << s;
  }
  for (const auto& [s, ratio] : completeness_profile(ref, {})) {
    EXPECT_DOUBLE_EQ(ratio, 0.0) << s;
  }
  std::vector<std::pair<Itemset, Support>> upto2;
  for (const auto& [x, s] : testing::flatten(ref.by_support, 2)) {
    upto2.emplace_back(x, s);
  }
  const auto profile = completeness_profile(ref, upto2);
  EXPECT_EQ(profile, (std::map<Support, double, std::greater<>>{{4, 1.0}, {2, 1.0}, {1, 0.0}}));

  const auto half = completeness_profile(ref, {{{r::b}, 2}, {{r::c}, 2}});
  EXPECT_DOUBLE_EQ(half.at(2), 0.5);
}

TEST(CompletenessProfile, RejectsInconsistentPartial) {
  const auto ref = enumerate_all(testing::d1());
  EXPECT_THROW(completeness_profile(ref, {{{r::a}, 3}}), OracleInconsistency);
  const auto d2 = enumerate_all(testing::d2());
  EXPECT_THROW(completeness_profile(d2, {{{5}, 1}}), OracleInconsistency);
}

TEST(OracleProperty, SelfConsistent) {
  std::mt19937_64 rng(5);
  for (const auto& entry : testing::oracle_corpus(60, 17)) {
    const auto db = make_database(entry.raw);
    const auto ref = enumerate_all(db);
    std::size_t total = 0;
    for (const auto& [s, sets] : ref.by_support) {
      total += sets.size();
      for (const auto& x : sets) {
        // Direct rescan of the transactions.
        Support count = 0;
        for (const auto& t : db.transactions()) {
          if (std::includes(t.begin(), t.end(), x.begin(), x.end())) {
            ++count;
          }
        }
        EXPECT_EQ(count, s);
      }
    }
    EXPECT_EQ(total, ref.itemset_count());
    for (const auto& [s, sets] : ref.closed_by_support) {
      for (const auto& x : sets) {
        EXPECT_TRUE(ref.by_support.at(s).contains(x));
        // No single extra item keeps the support.
        for (Rank e = 0; e < db.item_count(); ++e) {
          if (!x.contains(e)) {
            EXPECT_LT(ref.support(set_union(x, {e})).value_or(0), s);
          }
        }
      }
    }
    for (const auto& [x, s] : ref.support_of) {
      for (Rank drop : x) {
        std::vector<Rank> rest;
        std::copy_if(x.begin(), x.end(), std::back_inserter(rest), [&](Rank v) { return v != drop; });
        if (!rest.empty()) {
          EXPECT_GE(ref.support(Itemset::from_sorted(rest)).value(), s);
        }
      }
    }
  }
}

} // namespace
} // namespace anyfim
