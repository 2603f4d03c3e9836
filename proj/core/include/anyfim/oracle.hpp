#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anyfim/database.hpp"
#include "anyfim/itemset.hpp"

namespace anyfim {

/// Itemsets grouped by support, highest support first.
using SupportMap = std::map<Support, std::set<Itemset>, std::greater<>>;

/// Brute-force ground truth for small databases. Built without any closure
/// shortcut or support index so it can check the miners independently.
struct ReferenceIndex {
  SupportMap by_support;
  SupportMap closed_by_support;
  /// Distinct supports of all itemsets, descending.
  std::vector<Support> distinct_supports;
  std::map<Itemset, Support> support_of;

  std::size_t itemset_count() const noexcept { return support_of.size(); }
  std::size_t closed_count() const noexcept;
  std::optional<Support> support(const Itemset& x) const;
  bool is_closed(const Itemset& x) const;
  /// {X : sup(X) >= s}, or closed ones only.
  std::set<Itemset> at_least(Support s, bool closed_only = false) const;
};

inline constexpr std::size_t kDefaultOracleBudget = std::size_t{1} << 22;

class OracleBudgetExceeded : public std::length_error {
public:
  explicit OracleBudgetExceeded(std::size_t reached);
  std::size_t reached() const noexcept { return reached_; }

private:
  std::size_t reached_;
};

/// A partial result claimed an itemset or support the reference disagrees with.
class OracleInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Depth-first enumeration of every itemset with non-empty cover by direct
/// cover intersection. Closedness is decided by recomputing the intersection
/// of the covering transactions. Refuses once more than `budget` itemsets
/// have been found.
ReferenceIndex enumerate_all(const TransactionDatabase& db, std::size_t budget = kDefaultOracleBudget);

/// Fraction of sup⁻¹(s) found in `partial`, for every distinct support s of
/// the reference. Throws OracleInconsistency if `partial` holds an itemset
/// with a support other than the reference's.
std::map<Support, double, std::greater<>> completeness_profile(
    const ReferenceIndex& reference, const std::vector<std::pair<Itemset, Support>>& partial);

} // namespace anyfim
