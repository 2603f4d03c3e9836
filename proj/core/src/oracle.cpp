#include "anyfim/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace anyfim {

namespace {

// Items common to all transactions of `cover`, by pairwise intersection.
std::vector<Rank> common_items(const TransactionDatabase& db, const Tidset& cover) {
  auto it = cover.begin();
  const auto first = db.transaction(*it);
  std::vector<Rank> common(first.begin(), first.end());
  for (++it; it != cover.end() && !common.empty(); ++it) {
    const auto t = db.transaction(*it);
    std::vector<Rank> next;
    std::set_intersection(common.begin(), common.end(), t.begin(), t.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

struct Enumerator {
  const TransactionDatabase& db;
  std::size_t budget;
  ReferenceIndex& out;

  void visit(std::vector<Rank>& items, const Tidset& cover) {
    if (out.support_of.size() >= budget) {
      throw OracleBudgetExceeded(out.support_of.size() + 1);
    }
    const auto support = static_cast<Support>(cover.size());
    Itemset x = Itemset::from_sorted(items);
    out.by_support[support].insert(x);
    if (common_items(db, cover) == items) {
      out.closed_by_support[support].insert(x);
    }
    out.support_of.emplace(std::move(x), support);

    for (Rank j = items.back() + 1; j < db.item_count(); ++j) {
      Tidset next = intersect(cover, db.item_cover(j));
      if (next.empty()) {
        continue;
      }
      items.push_back(j);
      visit(items, next);
      items.pop_back();
    }
  }
};

} // namespace

std::size_t ReferenceIndex::closed_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [s, sets] : closed_by_support) {
    n += sets.size();
  }
  return n;
}

std::optional<Support> ReferenceIndex::support(const Itemset& x) const {
  if (const auto it = support_of.find(x); it != support_of.end()) {
    return it->second;
  }
  return std::nullopt;
}

bool ReferenceIndex::is_closed(const Itemset& x) const {
  const auto s = support(x);
  if (!s) {
    return false;
  }
  const auto it = closed_by_support.find(*s);
  return it != closed_by_support.end() && it->second.contains(x);
}

std::set<Itemset> ReferenceIndex::at_least(Support s, bool closed_only) const {
  std::set<Itemset> out;
  for (const auto& [support, sets] : closed_only ? closed_by_support : by_support) {
    if (support < s) {
      break;
    }
    out.insert(sets.begin(), sets.end());
  }
  return out;
}

OracleBudgetExceeded::OracleBudgetExceeded(std::size_t reached)
    : std::length_error("oracle enumeration exceeded its budget after " + std::to_string(reached) + " itemsets"),
      reached_(reached) {}

ReferenceIndex enumerate_all(const TransactionDatabase& db, std::size_t budget) {
  ReferenceIndex out;
  Enumerator e{db, budget, out};
  std::vector<Rank> items;
  for (Rank r = 0; r < db.item_count(); ++r) {
    const Tidset& cover = db.item_cover(r);
    if (cover.empty()) {
      continue;
    }
    items.assign(1, r);
    e.visit(items, cover);
  }
  for (const auto& [s, sets] : out.by_support) {
    out.distinct_supports.push_back(s);
  }
  return out;
}

std::map<Support, double, std::greater<>> completeness_profile(
    const ReferenceIndex& reference, const std::vector<std::pair<Itemset, Support>>& partial) {
  std::map<Support, std::set<Itemset>> found;
  for (const auto& [x, s] : partial) {
    const auto expected = reference.support(x);
    if (!expected) {
      throw OracleInconsistency("partial result holds an itemset absent from the reference");
    }
    if (*expected != s) {
      throw OracleInconsistency("partial result claims support " + std::to_string(s) + " but the reference has " +
                                std::to_string(*expected));
    }
    found[s].insert(x);
  }
  std::map<Support, double, std::greater<>> profile;
  for (const auto& [s, sets] : reference.by_support) {
    const auto it = found.find(s);
    const std::size_t hits = it == found.end() ? 0 : it->second.size();
    profile[s] = static_cast<double>(hits) / static_cast<double>(sets.size());
  }
  return profile;
}

} // namespace anyfim
