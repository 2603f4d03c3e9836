#include "anyfim/itemset.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace anyfim {

Itemset::Itemset(std::initializer_list<Rank> items) : Itemset(from_sorted(std::vector<Rank>(items))) {}

Itemset Itemset::from_sorted(std::vector<Rank> items) {
  if (std::adjacent_find(items.begin(), items.end(), std::greater_equal<>{}) != items.end()) {
    throw std::invalid_argument("itemset must be strictly ascending");
  }
  return Itemset(std::move(items));
}

Itemset Itemset::adopt_sorted(std::vector<Rank> items) noexcept { return Itemset(std::move(items)); }

Itemset Itemset::from_unsorted(std::vector<Rank> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Itemset(std::move(items));
}

bool Itemset::contains(Rank r) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), r);
}

Itemset Itemset::extended_by(Rank r) const {
  if (!items_.empty() && r <= items_.back()) {
    throw std::invalid_argument("extension item must exceed the tail");
  }
  std::vector<Rank> out;
  out.reserve(items_.size() + 1);
  out.assign(items_.begin(), items_.end());
  out.push_back(r);
  return Itemset(std::move(out));
}

Itemset set_union(const Itemset& a, const Itemset& b) {
  std::vector<Rank> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Itemset::adopt_sorted(std::move(out));
}

bool is_subset(const Itemset& sub, const Itemset& super) noexcept {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

} // namespace anyfim
