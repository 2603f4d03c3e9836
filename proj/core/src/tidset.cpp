#include "anyfim/tidset.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace anyfim {

Tidset::Tidset(std::initializer_list<Tid> tids) : Tidset(from_sorted(std::vector<Tid>(tids))) {}

Tidset Tidset::from_sorted(std::vector<Tid> tids) {
  if (std::adjacent_find(tids.begin(), tids.end(), std::greater_equal<>{}) != tids.end()) {
    throw std::invalid_argument("tidset must be strictly ascending");
  }
  return Tidset(std::move(tids));
}

Tidset Tidset::adopt_sorted(std::vector<Tid> tids) noexcept { return Tidset(std::move(tids)); }

bool Tidset::contains(Tid tid) const noexcept {
  return std::binary_search(tids_.begin(), tids_.end(), tid);
}

Tidset intersect(const Tidset& a, const Tidset& b) {
  std::vector<Tid> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Tidset::adopt_sorted(std::move(out));
}

bool is_subset(const Tidset& sub, const Tidset& super) noexcept {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

} // namespace anyfim
