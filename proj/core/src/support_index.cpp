#include "anyfim/support_index.hpp"

#include <string>

#include "anyfim/closure.hpp"

namespace anyfim {

SupportIndex SupportIndex::init(const TransactionDatabase& db, bool closed_only) {
  SupportIndex index;
  OccurrenceCounter counter(db.item_count());
  for (Rank r = 0; r < db.item_count(); ++r) {
    const Tidset& cover = db.item_cover(r);
    counter.reset();
    counter.count(db, cover);
    bool closed = true;
    std::vector<Rank> extension{r};
    for (const Rank e : counter.touched()) {
      if (counter[e] != cover.size()) {
        continue;
      }
      if (e > r) {
        extension.push_back(e);
      } else if (e < r) {
        closed = false;
      }
    }
    if (closed_only && !closed) {
      continue;
    }
    index.insert(ItemsetInterval{Itemset{r}, Itemset::from_unsorted(std::move(extension)), cover});
  }
  return index;
}

void SupportIndex::insert(ItemsetInterval interval) {
  const Support s = interval.support();
  if (s == 0) {
    throw InvariantViolation("interval with empty cover inserted into support index");
  }
  if (current_ && s >= *current_) {
    throw InvariantViolation("insertion at support " + std::to_string(s) +
                             " does not lie below the current support " + std::to_string(*current_));
  }
  auto [it, created] = bins_.try_emplace(s);
  if (created) {
    it->second.support = s;
  }
  it->second.pending.push_back(std::move(interval));
  ++pending_;
  if (!lowest_inserted_ || s < *lowest_inserted_) {
    lowest_inserted_ = s;
  }
}

Bin* SupportIndex::next_bin() {
  if (current_) {
    const auto it = bins_.find(*current_);
    if (it != bins_.end()) {
      if (!it->second.pending.empty()) {
        throw InvariantViolation("current bin retired while intervals are pending");
      }
      retired_.push_back(RetiredBin{it->second.support, it->second.emitted_count});
      bins_.erase(it);
    }
  }
  if (bins_.empty()) {
    return nullptr;
  }
  Bin& bin = bins_.begin()->second;
  current_ = bin.support;
  return &bin;
}

std::optional<Support> SupportIndex::peek_support() const noexcept {
  for (const auto& [support, bin] : bins_) {
    if (!bin.pending.empty()) {
      return support;
    }
  }
  return std::nullopt;
}

ItemsetInterval SupportIndex::pop_current() {
  if (!current_) {
    throw InvariantViolation("no current bin");
  }
  Bin& bin = bins_.at(*current_);
  if (bin.pending.empty()) {
    throw InvariantViolation("current bin is empty");
  }
  ItemsetInterval interval = std::move(bin.pending.front());
  bin.pending.pop_front();
  ++bin.emitted_count;
  --pending_;
  return interval;
}

} // namespace anyfim
