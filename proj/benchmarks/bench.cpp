#include <benchmark/benchmark.h>

#include <random>

#include "qdm/linalg.hpp"
#include "qdm/tools/corpus.hpp"

namespace {

using namespace qdm;

void BM_LatticeBuild(benchmark::State& state) {
  const FieldPtr f2 = Field::make(2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Lattice::build(f2, n));
}
BENCHMARK(BM_LatticeBuild)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CheckF1F2Spread(benchmark::State& state) {
  const AmbientPtr amb = Ambient::make(Field::make(2), 4);
  const Family f = spread_delta(amb).feasible();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_f1f2(f, threads));
}
BENCHMARK(BM_CheckF1F2Spread)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_CheckF3F4Independents(benchmark::State& state) {
  const AmbientPtr amb = Ambient::make(Field::make(2), 4);
  const Family f = from_qmatroid(QMatroid::uniform(amb, 2), FamilyKind::kIndependents).feasible();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_f3f4(f, threads));
}
BENCHMARK(BM_CheckF3F4Independents)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_StrongRankdiff(benchmark::State& state) {
  const AmbientPtr amb = Ambient::make(Field::make(2), 4);
  const auto pair = tools::counterexample_pair(amb);
  for (auto _ : state) benchmark::DoNotOptimize(is_strong_rankdiff(pair.upper, pair.lower, 1));
}
BENCHMARK(BM_StrongRankdiff)->Unit(benchmark::kMicrosecond);

std::vector<gf2::Row> random_rows(int n, std::mt19937_64& rng) {
  std::vector<gf2::Row> rows(static_cast<std::size_t>(n));
  const gf2::Row mask = n == 64 ? ~gf2::Row{0} : (gf2::Row{1} << n) - 1;
  for (auto& r : rows) r = rng() & mask;
  return rows;
}

void BM_RrefPacked(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto rows = random_rows(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rref(rows, n));
}
BENCHMARK(BM_RrefPacked)->Arg(8)->Arg(32)->Arg(64);

void BM_RrefGeneric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldPtr f2 = Field::make(2);
  std::mt19937_64 rng(1);
  const auto rows = random_rows(n, rng);
  MatGF m(f2, rows.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < n; ++j) m.set(i, static_cast<std::size_t>(j), (rows[i] >> j) & 1u);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefGeneric)->Arg(8)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
