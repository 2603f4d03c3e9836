#include <benchmark/benchmark.h>

#include <filesystem>
#include <map>
#include <string>
#include <sstream>

#include "anyfim/anytime_runner.hpp"
#include "anyfim/miner.hpp"
#include "anyfim/synthetic.hpp"

namespace {

using namespace anyfim;

const TransactionDatabase& basket(std::size_t transactions) {
  static std::map<std::size_t, TransactionDatabase> cache;
  auto it = cache.find(transactions);
  if (it == cache.end()) {
    BasketParams params;
    params.transactions = transactions;
    it = cache.emplace(transactions, make_database(basket_database(params))).first;
  }
  return it->second;
}

void BM_ParseFimi(benchmark::State& state) {
  const RawDatabase raw = basket_database({.transactions = static_cast<std::size_t>(state.range(0))});
  std::ostringstream text;
  for (const auto& t : raw.transactions) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      text << (i ? " " : "") << t[i];
    }
    text << '\n';
  }
  const std::string input = text.str();
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_fimi(input));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * input.size()));
}
BENCHMARK(BM_ParseFimi)->Arg(1000)->Arg(5000);

const EventSink kDiscard = [](const MinerEvent&) {};

void BM_MineAllToFloor(benchmark::State& state) {
  const auto& db = basket(5000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mine_all(db, kDiscard, nullptr, static_cast<Support>(state.range(0))));
  }
}
BENCHMARK(BM_MineAllToFloor)->Arg(200)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_MineClosedToFloor(benchmark::State& state) {
  const auto& db = basket(5000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mine_closed(db, kDiscard, nullptr, static_cast<Support>(state.range(0))));
  }
}
BENCHMARK(BM_MineClosedToFloor)->Arg(200)->Arg(50)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  const auto& db = basket(5000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(baseline_mine(db, kDiscard, nullptr, static_cast<Support>(state.range(0))));
  }
}
BENCHMARK(BM_Baseline)->Arg(200)->Arg(50)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MushroomClosed(benchmark::State& state) {
  const std::string path = std::string(ANYFIM_DATA_DIR) + "/mushroom.dat";
  if (!std::filesystem::exists(path)) {
    state.SkipWithError("mushroom.dat not found");
    return;
  }
  const TransactionDatabase db = make_database(load_fimi(path));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mine_closed(db, kDiscard, nullptr, static_cast<Support>(state.range(0))));
  }
}
BENCHMARK(BM_MushroomClosed)->Arg(1000)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
