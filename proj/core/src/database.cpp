#include "anyfim/database.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

namespace anyfim {

namespace {

bool is_separator(char c) noexcept { return c == ' ' || c == '\t'; }

std::vector<ExternalItem> parse_line(std::string_view line, std::size_t line_no) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  std::vector<ExternalItem> items;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (is_separator(line[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && !is_separator(line[end])) {
      ++end;
    }
    const std::string_view token = line.substr(pos, end - pos);
    ExternalItem value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(line_no, "item id out of range: '" + std::string(token) + "'");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "invalid item token: '" + std::string(token) + "'");
    }
    items.push_back(value);
    pos = end;
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

RawDatabase parse_fimi(std::string_view text) {
  RawDatabase db;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', start);
    const std::size_t stop = nl == std::string_view::npos ? text.size() : nl;
    db.transactions.push_back(parse_line(text.substr(start, stop - start), line_no));
    if (nl == std::string_view::npos) {
      break;
    }
    start = nl + 1;
  }
  return db;
}

RawDatabase parse_fimi(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) {
    throw std::runtime_error("read error");
  }
  return parse_fimi(std::string_view(text));
}

RawDatabase load_fimi(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  try {
    return parse_fimi(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

ItemOrder::ItemOrder(std::vector<ExternalItem> decode, std::vector<Support> singleton_support)
    : decode_(std::move(decode)), singleton_support_(std::move(singleton_support)) {
  if (decode_.size() != singleton_support_.size()) {
    throw std::invalid_argument("item order tables differ in length");
  }
  recode_.reserve(decode_.size());
  for (Rank r = 0; r < decode_.size(); ++r) {
    if (!recode_.emplace(decode_[r], r).second) {
      throw std::invalid_argument("duplicate item in order");
    }
  }
}

std::optional<Rank> ItemOrder::rank_of(ExternalItem item) const {
  if (const auto it = recode_.find(item); it != recode_.end()) {
    return it->second;
  }
  return std::nullopt;
}

ItemOrder build_order(const RawDatabase& db) {
  std::unordered_map<ExternalItem, Support> counts;
  for (const auto& t : db.transactions) {
    for (const ExternalItem item : t) {
      ++counts[item];
    }
  }
  std::vector<std::pair<Support, ExternalItem>> keyed;
  keyed.reserve(counts.size());
  for (const auto& [item, sup] : counts) {
    keyed.emplace_back(sup, item);
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<ExternalItem> decode;
  std::vector<Support> supports;
  decode.reserve(keyed.size());
  supports.reserve(keyed.size());
  for (const auto& [sup, item] : keyed) {
    decode.push_back(item);
    supports.push_back(sup);
  }
  return ItemOrder(std::move(decode), std::move(supports));
}

TransactionDatabase::TransactionDatabase(ItemOrder order, std::vector<std::vector<Rank>> transactions)
    : order_(std::move(order)), transactions_(std::move(transactions)) {
  std::vector<std::vector<Tid>> covers(order_.size());
  for (Tid tid = 0; tid < transactions_.size(); ++tid) {
    const auto& t = transactions_[tid];
    if (std::adjacent_find(t.begin(), t.end(), std::greater_equal<>{}) != t.end()) {
      throw std::invalid_argument("transaction " + std::to_string(tid) + " is not strictly ascending");
    }
    for (const Rank r : t) {
      if (r >= order_.size()) {
        throw std::invalid_argument("transaction " + std::to_string(tid) + " holds unknown rank");
      }
      covers[r].push_back(tid);
    }
  }
  item_covers_.reserve(covers.size());
  for (Rank r = 0; r < covers.size(); ++r) {
    if (covers[r].size() != order_.singleton_support(r)) {
      throw std::invalid_argument("item order support disagrees with transactions");
    }
    item_covers_.push_back(Tidset::adopt_sorted(std::move(covers[r])));
  }
}

Support TransactionDatabase::max_singleton_support() const noexcept {
  const auto sups = order_.singleton_supports();
  return sups.empty() ? 0 : sups.back();
}

std::vector<ExternalItem> TransactionDatabase::decode(std::span<const Rank> ranks) const {
  std::vector<ExternalItem> out;
  out.reserve(ranks.size());
  for (const Rank r : ranks) {
    out.push_back(order_.external(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TransactionDatabase recode(const RawDatabase& db, const ItemOrder& order) {
  std::vector<std::vector<Rank>> transactions;
  transactions.reserve(db.transactions.size());
  for (const auto& raw : db.transactions) {
    std::vector<Rank> t;
    t.reserve(raw.size());
    for (const ExternalItem item : raw) {
      if (const auto r = order.rank_of(item)) {
        t.push_back(*r);
      }
    }
    std::sort(t.begin(), t.end());
    transactions.push_back(std::move(t));
  }
  return TransactionDatabase(order, std::move(transactions));
}

TransactionDatabase make_database(const RawDatabase& db) { return recode(db, build_order(db)); }

} // namespace anyfim
