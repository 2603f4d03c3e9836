#include "anyfim/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace anyfim {

namespace {

void normalize(std::vector<ExternalItem>& t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
}

} // namespace

RawDatabase random_database(std::size_t transactions, std::size_t items, double density, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(density);
  RawDatabase db;
  db.transactions.resize(transactions);
  for (auto& t : db.transactions) {
    for (std::size_t i = 0; i < items; ++i) {
      if (present(rng)) {
        t.push_back(static_cast<ExternalItem>(i));
      }
    }
  }
  return db;
}

RawDatabase basket_database(const BasketParams& params) {
  if (params.items == 0) {
    throw std::invalid_argument("basket database needs at least one item");
  }
  std::mt19937_64 rng(params.seed);

  std::vector<double> weights(params.items);
  for (std::size_t i = 0; i < params.items; ++i) {
    weights[i] = 1.0 / std::pow(static_cast<double>(i + 1), params.zipf_exponent);
  }
  std::discrete_distribution<std::size_t> pick_item(weights.begin(), weights.end());

  std::vector<std::vector<ExternalItem>> patterns(params.patterns);
  std::poisson_distribution<std::size_t> pattern_length(static_cast<double>(params.mean_pattern_length));
  for (auto& pattern : patterns) {
    const std::size_t len = std::clamp<std::size_t>(pattern_length(rng), 2, params.items);
    while (pattern.size() < len) {
      pattern.push_back(static_cast<ExternalItem>(pick_item(rng)));
      normalize(pattern);
    }
  }
  // Patterns themselves are Zipf-popular too.
  std::vector<double> pattern_weights(params.patterns);
  for (std::size_t p = 0; p < params.patterns; ++p) {
    pattern_weights[p] = 1.0 / static_cast<double>(p + 1);
  }
  std::discrete_distribution<std::size_t> pick_pattern(pattern_weights.begin(), pattern_weights.end());

  std::poisson_distribution<std::size_t> noise_count(params.mean_noise_items);
  std::bernoulli_distribution use_pattern(params.pattern_probability);
  std::bernoulli_distribution drop(params.pattern_item_drop);

  RawDatabase db;
  db.transactions.resize(params.transactions);
  for (auto& t : db.transactions) {
    if (!patterns.empty()) {
      while (use_pattern(rng)) {
        for (const ExternalItem item : patterns[pick_pattern(rng)]) {
          if (!drop(rng)) {
            t.push_back(item);
          }
        }
      }
    }
    const std::size_t noise = noise_count(rng);
    for (std::size_t i = 0; i < noise; ++i) {
      t.push_back(static_cast<ExternalItem>(pick_item(rng)));
    }
    normalize(t);
  }
  return db;
}

RawDatabase correlated_top_database(std::size_t k, std::size_t transactions, std::size_t noise_items,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(0.5);
  RawDatabase db;
  db.transactions.resize(transactions);
  for (std::size_t tid = 0; tid < transactions; ++tid) {
    auto& t = db.transactions[tid];
    for (std::size_t i = 0; i < k; ++i) {
      t.push_back(static_cast<ExternalItem>(i));
    }
    if (tid == 0) {
      continue;
    }
    for (std::size_t i = 0; i < noise_items; ++i) {
      if (present(rng)) {
        t.push_back(static_cast<ExternalItem>(k + i));
      }
    }
  }
  return db;
}

} // namespace anyfim
