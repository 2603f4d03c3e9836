#include "anyfim/closure.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace anyfim {

Tidset cover_of(const TransactionDatabase& db, const Itemset& x) {
  if (x.empty()) {
    throw std::invalid_argument("cover_of needs a non-empty itemset");
  }
  // Start from the rarest item; ranks ascend with support so that is x[0].
  Tidset cover = db.item_cover(x[0]);
  for (std::size_t i = 1; i < x.size() && !cover.empty(); ++i) {
    cover = intersect(cover, db.item_cover(x[i]));
  }
  return cover;
}

Itemset intersection_closure(const TransactionDatabase& db, const Tidset& s) {
  if (s.empty()) {
    throw std::domain_error("intersection of an empty transaction set is undefined here");
  }
  OccurrenceCounter counter(db.item_count());
  counter.count(db, s);
  std::vector<Rank> items;
  for (const Rank r : counter.touched()) {
    if (counter[r] == s.size()) {
      items.push_back(r);
    }
  }
  return Itemset::from_unsorted(std::move(items));
}

Itemset closure_extension(const TransactionDatabase& db, const Itemset& x, const Tidset& cover) {
  if (x.empty()) {
    throw std::invalid_argument("closure_extension needs a non-empty itemset");
  }
  OccurrenceCounter counter(db.item_count());
  counter.count(db, cover, x.tail());
  std::vector<Rank> items(x.begin(), x.end());
  for (const Rank r : counter.touched()) {
    if (counter[r] == cover.size()) {
      items.push_back(r);
    }
  }
  std::sort(items.begin() + static_cast<std::ptrdiff_t>(x.size()), items.end());
  return Itemset::adopt_sorted(std::move(items));
}

ExpansionBudgetExceeded::ExpansionBudgetExceeded(std::size_t width, std::size_t budget)
    : std::length_error("interval of width " + std::to_string(width) + " exceeds expansion budget of " +
                        std::to_string(budget) + " itemsets"),
      width_(width) {}

std::vector<Itemset> expand(const ItemsetInterval& interval, std::size_t budget) {
  std::vector<Rank> free_items;
  std::set_difference(interval.max_itemset.begin(), interval.max_itemset.end(),
                      interval.min_itemset.begin(), interval.min_itemset.end(),
                      std::back_inserter(free_items));
  const std::size_t width = free_items.size();
  if (width >= 63 || (std::size_t{1} << width) > budget) {
    throw ExpansionBudgetExceeded(width, budget);
  }
  const std::size_t members = std::size_t{1} << width;
  std::vector<Itemset> out;
  out.reserve(members);
  for (std::size_t mask = 0; mask < members; ++mask) {
    std::vector<Rank> items(interval.min_itemset.begin(), interval.min_itemset.end());
    for (std::size_t b = 0; b < width; ++b) {
      if (mask & (std::size_t{1} << b)) {
        items.push_back(free_items[b]);
      }
    }
    out.push_back(Itemset::from_unsorted(std::move(items)));
  }
  return out;
}

void OccurrenceCounter::count(const TransactionDatabase& db, const Tidset& tids, std::int64_t above) {
  for (const Tid tid : tids) {
    const auto t = db.transaction(tid);
    // Transactions are ascending, so walk back from the end until the floor.
    for (auto it = t.rbegin(); it != t.rend() && static_cast<std::int64_t>(*it) > above; ++it) {
      if (counts_[*it]++ == 0) {
        touched_.push_back(*it);
      }
    }
  }
}

void OccurrenceCounter::reset() noexcept {
  for (const Rank r : touched_) {
    counts_[r] = 0;
  }
  touched_.clear();
}

} // namespace anyfim
