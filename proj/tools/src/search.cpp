#include "qdm/tools/search.hpp"

#include <random>

#include "qdm/error.hpp"
#include "qdm/qg.hpp"
#include "qdm/rmcodes.hpp"
#include "qdm/tools/corpus.hpp"

namespace qdm::tools {

SearchTarget parse_search_target(std::string_view name) {
  if (name == "f3f4-vs-qg") return SearchTarget::kF3F4VsQG;
  if (name == "upper-lower-strong") return SearchTarget::kUpperLowerStrong;
  fail(Errc::kParseError, "unknown search target '" + std::string(name) + "'");
}

std::string_view search_target_name(SearchTarget target) {
  return target == SearchTarget::kF3F4VsQG ? "f3f4-vs-qg" : "upper-lower-strong";
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Uniform q-matroids plus a few random code q-matroids.
std::vector<QMatroid> matroid_pool(const AmbientPtr& amb, Rng& rng, unsigned threads) {
  const int n = amb->n();
  std::vector<QMatroid> pool;
  for (int k = 0; k <= n; ++k) pool.push_back(QMatroid::uniform(amb, k));
  if (n == 4) {
    CounterexamplePair ce = counterexample_pair(amb, threads);
    pool.push_back(std::move(ce.upper));
    pool.push_back(std::move(ce.lower));
  }
  const ExtFieldTower tower = ExtFieldTower::make(2, static_cast<std::uint32_t>(n));
  const Field& top = *tower.top();
  for (int made = 0, tries = 0; made < 6 && tries < 100; ++tries) {
    const auto k = static_cast<std::size_t>(1 + pick(rng, static_cast<std::size_t>(n - 1)));
    MatGF gen(tower.top(), k, static_cast<std::size_t>(n));
    // Sparse entries make non-uniform q-matroids likely.
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
        if (pick(rng, 3) == 0) gen.set(r, c, static_cast<Elem>(pick(rng, top.order())));
      }
    }
    if (rank(gen) != k) continue;
    pool.push_back(code_qmatroid(RankMetricCode(tower, std::move(gen)), amb, threads));
    ++made;
  }
  return pool;
}

Family from_bits(const LatticePtr& lattice, const Bitset& bits) {
  Family f(lattice);
  for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) f.insert(static_cast<SubspaceId>(i));
  return f;
}

// Union of a few random intervals [B2, B1] with B2 a basis of the lower and
// B1 a basis of the upper q-matroid.
Family random_intervals(const QMatroid& upper, const QMatroid& lower, Rng& rng) {
  const Lattice& lat = upper.lattice();
  const std::vector<SubspaceId> tops = derived(upper).bases.ids();
  const std::vector<SubspaceId> bottoms = derived(lower).bases.ids();
  Family f(upper.lattice_ptr());
  const std::size_t count = 1 + pick(rng, 4);
  for (std::size_t i = 0; i < count; ++i) {
    const SubspaceId b1 = tops[pick(rng, tops.size())];
    std::vector<SubspaceId> inside;
    for (SubspaceId b2 : bottoms) {
      if (lat.contains(b1, b2)) inside.push_back(b2);
    }
    if (inside.empty()) continue;
    const SubspaceId b2 = inside[pick(rng, inside.size())];
    f |= from_bits(upper.lattice_ptr(), lat.down_set(b1) & lat.up_set(b2));
  }
  return f;
}

// Empty when the implication holds for this family.
std::string f3f4_vs_qg(const Family& f, const AmbientPtr& amb, unsigned threads) {
  const UpperLower ul = upper_lower(QDeltaMatroid::unchecked(amb, f), threads);
  const MapReport strong = is_strong_rankdiff(ul.upper, ul.lower, threads);
  if (!strong) return "(F3)(F4) hold but upper -> lower is not strong: " + describe(strong, amb->lattice());
  const QDeltaMatroid qg = qg_family(QGPair::make(ul.upper, ul.lower, Certificate::kStrong, threads), threads);
  if (!(qg.feasible() == f)) return "(F3)(F4) hold but the family is not the q-g family of its upper and lower";
  return {};
}

std::string upper_lower_strong(const Family& f, const AmbientPtr& amb, unsigned threads) {
  const UpperLower ul = upper_lower(QDeltaMatroid::unchecked(amb, f), threads);
  const MapReport strong = is_strong_rankdiff(ul.upper, ul.lower, threads);
  if (!strong) return "upper -> lower is not strong: " + describe(strong, amb->lattice());
  return {};
}

void search_f3f4(const SearchOptions& opt, const AmbientPtr& amb, Rng& rng, SearchResult& result) {
  const std::vector<QMatroid> pool = matroid_pool(amb, rng, opt.threads);
  while (result.iterations < opt.budget) {
    ++result.iterations;
    const QMatroid& upper = pool[pick(rng, pool.size())];
    const QMatroid& lower = pool[pick(rng, pool.size())];
    if (!basis_sandwich(upper, lower)) continue;
    Family f = pick(rng, 8) == 0 ? weak_qg_family(QGPair::make(upper, lower, Certificate::kWeak, opt.threads))
                                 : random_intervals(upper, lower, rng);
    if (f.empty() || !check_f3f4(f, opt.threads)) continue;
    ++result.tested;
    std::string why = f3f4_vs_qg(f, amb, opt.threads);
    if (!why.empty()) {
      result.counterexample = std::move(f);
      result.detail = std::move(why);
      return;
    }
  }
}

void search_upper_lower(const SearchOptions& opt, const AmbientPtr& amb, Rng& rng, SearchResult& result) {
  const Lattice& lat = amb->lattice();
  const LatticePtr& lp = amb->lattice_ptr();
  auto test = [&](Family f) {
    ++result.tested;
    std::string why = upper_lower_strong(f, amb, opt.threads);
    if (why.empty()) return false;
    result.counterexample = std::move(f);
    result.detail = std::move(why);
    return true;
  };

  std::vector<Family> seeds;
  for (const QMatroid& m : matroid_pool(amb, rng, opt.threads)) {
    const DerivedFamilies d = derived(m);
    seeds.push_back(d.bases);
    seeds.push_back(d.independents);
    seeds.push_back(d.spanning);
  }
  if (lat.n() == 4) {
    seeds.push_back(spread_delta(amb).feasible());
    seeds.push_back(even_dims_delta(amb).feasible());
  }
  for (Family& f : seeds) {
    if (result.iterations >= opt.budget) return;
    ++result.iterations;
    if (test(std::move(f))) return;
  }

  const std::size_t patience = 4 * lat.size();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (result.iterations < opt.budget) {
    const double density = 0.05 + 0.45 * unit(rng);
    Family current(lp);
    for (SubspaceId id : lat.all()) {
      if (unit(rng) < density) current.insert(id);
    }
    if (current.empty()) current.insert(lat.zero());
    std::size_t violations = count_f1f2_violations(current, opt.threads);
    for (std::size_t step = 0; step < patience && violations > 0 && result.iterations < opt.budget; ++step) {
      ++result.iterations;
      const auto id = static_cast<SubspaceId>(pick(rng, lat.size()));
      Family next = current;
      if (next.contains(id)) {
        next.erase(id);
      } else {
        next.insert(id);
      }
      if (next.empty()) continue;
      const std::size_t v = count_f1f2_violations(next, opt.threads);
      if (v <= violations || unit(rng) < 0.05) {
        current = std::move(next);
        violations = v;
      }
    }
    if (violations == 0 && test(current)) return;
  }
}

}  // namespace

SearchResult run_search(const SearchOptions& options) {
  if (options.budget == 0) fail(Errc::kBudgetZero, "search budget must be positive");
  if (options.n < 2 || options.n > 5) fail(Errc::kUnsupportedAmbient, "search runs on F_2^n with 2 <= n <= 5");
  const AmbientPtr amb = Ambient::make(Field::make(2), options.n);
  Rng rng(options.seed);
  SearchResult result;
  if (options.target == SearchTarget::kF3F4VsQG) {
    search_f3f4(options, amb, rng, result);
  } else {
    search_upper_lower(options, amb, rng, result);
  }
  return result;
}

}  // namespace qdm::tools
