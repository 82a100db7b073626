#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qdm/family.hpp"

namespace qdm::tools {

// kF3F4VsQG: does every family satisfying (F3)(F4) equal the q-g family of
// its upper and lower q-matroids, with a strong map between them?
// kUpperLowerStrong: is the identity from the upper to the lower q-matroid
// of every q-Delta-matroid a strong map?
enum class SearchTarget { kF3F4VsQG, kUpperLowerStrong };

// Throws ParseError.
SearchTarget parse_search_target(std::string_view name);
std::string_view search_target_name(SearchTarget target);

struct SearchOptions {
  SearchTarget target = SearchTarget::kUpperLowerStrong;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  int n = 4;
  unsigned threads = 0;
};

struct SearchResult {
  std::uint64_t iterations = 0;
  // Families on which the implication was actually tested.
  std::uint64_t tested = 0;
  std::optional<Family> counterexample;
  std::string detail;
};

// Randomized search over F_2^n, n in 2..5, deterministic for a given seed.
// Throws BudgetZero and UnsupportedAmbient.
SearchResult run_search(const SearchOptions& options);

}  // namespace qdm::tools
