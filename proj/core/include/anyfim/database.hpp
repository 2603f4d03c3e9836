#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "anyfim/tidset.hpp"

namespace anyfim {

/// Item identifier as it appears in the input file.
using ExternalItem = std::uint32_t;
/// Position of an item in the ascending-support total order, 0..n-1.
using Rank = std::uint32_t;
/// Absolute support count.
using Support = std::uint32_t;

/// Transactions as read from a FIMI file. Each transaction holds its distinct
/// external item ids in ascending order; tids are 0..m-1 in file order.
struct RawDatabase {
  std::vector<std::vector<ExternalItem>> transactions;

  std::size_t transaction_count() const noexcept { return transactions.size(); }
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  /// 1-based line number of the offending token.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Parses the FIMI transaction format: one transaction per line, items are
/// base-10 non-negative integers separated by spaces or tabs, LF or CRLF line
/// ends, and an empty line is an empty transaction. A final line without a
/// terminator is still a transaction; a trailing terminator does not start one.
RawDatabase parse_fimi(std::string_view text);
RawDatabase parse_fimi(std::istream& in);
/// Throws std::runtime_error if the file cannot be opened, ParseError on bad
/// content.
RawDatabase load_fimi(const std::filesystem::path& path);

/// Support-based total order over the items that occur in the database.
/// rank(i) < rank(j) implies sup(i) <= sup(j); ties go to the smaller external
/// id. Items occurring nowhere get no rank.
class ItemOrder {
public:
  ItemOrder() = default;
  ItemOrder(std::vector<ExternalItem> decode, std::vector<Support> singleton_support);

  std::size_t size() const noexcept { return decode_.size(); }
  std::optional<Rank> rank_of(ExternalItem item) const;
  ExternalItem external(Rank rank) const { return decode_.at(rank); }
  Support singleton_support(Rank rank) const { return singleton_support_.at(rank); }
  std::span<const ExternalItem> decode_table() const noexcept { return decode_; }
  std::span<const Support> singleton_supports() const noexcept { return singleton_support_; }

private:
  std::vector<ExternalItem> decode_;
  std::vector<Support> singleton_support_;
  std::unordered_map<ExternalItem, Rank> recode_;
};

ItemOrder build_order(const RawDatabase& db);

/// Recoded database: transactions as ascending rank sequences plus the cover
/// of every single item. Immutable after construction.
class TransactionDatabase {
public:
  TransactionDatabase() = default;
  TransactionDatabase(ItemOrder order, std::vector<std::vector<Rank>> transactions);

  std::size_t item_count() const noexcept { return order_.size(); }
  std::size_t transaction_count() const noexcept { return transactions_.size(); }

  std::span<const Rank> transaction(Tid tid) const { return transactions_.at(tid); }
  const std::vector<std::vector<Rank>>& transactions() const noexcept { return transactions_; }
  const Tidset& item_cover(Rank rank) const { return item_covers_.at(rank); }
  const ItemOrder& order() const noexcept { return order_; }

  /// Highest singleton support, 0 for a database without items.
  Support max_singleton_support() const noexcept;
  /// Translates ascending ranks back to ascending external ids.
  std::vector<ExternalItem> decode(std::span<const Rank> ranks) const;

private:
  ItemOrder order_;
  std::vector<std::vector<Rank>> transactions_;
  std::vector<Tidset> item_covers_;
};

/// Recodes every transaction with `order`, dropping items that `order` does
/// not know. `order` must have been built from `db`.
TransactionDatabase recode(const RawDatabase& db, const ItemOrder& order);

/// build_order followed by recode.
TransactionDatabase make_database(const RawDatabase& db);

} // namespace anyfim
