#pragma once

#include <cstddef>
#include <cstdint>

#include "anyfim/database.hpp"

namespace anyfim {

/// Every (transaction, item) cell is present independently with probability
/// `density`. Item ids are 0..items-1.
RawDatabase random_database(std::size_t transactions, std::size_t items, double density, std::uint64_t seed);

/// Market-basket style generator: item popularity decays with a Zipf-like
/// law, and a pool of planted patterns is injected so that correlated
/// itemsets (and therefore many closed itemsets) exist.
struct BasketParams {
  std::size_t transactions = 5000;
  std::size_t items = 200;
  double mean_noise_items = 6.0;
  double zipf_exponent = 0.8;
  std::size_t patterns = 40;
  std::size_t mean_pattern_length = 4;
  double pattern_probability = 0.35;
  double pattern_item_drop = 0.1;
  std::uint64_t seed = 1;
};

RawDatabase basket_database(const BasketParams& params);

/// `k` items (ids 0..k-1) present in every transaction, plus noise items that
/// never occur in transaction 0 and so have strictly lower support. The top
/// items are perfectly correlated: every combination of them has support m.
RawDatabase correlated_top_database(std::size_t k, std::size_t transactions, std::size_t noise_items,
                                    std::uint64_t seed);

} // namespace anyfim
