#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdm/qmatroid.hpp"

namespace qdm {

// Verdict on the identity map from `domain` to `codomain`. A false verdict
// always carries a witness that reproduces the violation.
struct MapReport {
  bool verdict = true;
  std::string criterion;
  std::vector<std::pair<std::string, SubspaceId>> witness;
  std::string detail;

  explicit operator bool() const { return verdict; }
  std::optional<SubspaceId> role(std::string_view name) const {
    for (const auto& [r, id] : witness) {
      if (r == name) return id;
    }
    return std::nullopt;
  }
};

std::string describe(const MapReport& report, const Lattice& lattice);

// All checkers throw LatticeMismatch for q-matroids on different lattices and
// report the first witness in lattice order.

// r2(V) <= r1(V) for every V.
MapReport is_weak(const QMatroid& m1, const QMatroid& m2);
// r1(X) - r1(Y) >= r2(X) - r2(Y) for every Y inside X.
MapReport is_strong_rankdiff(const QMatroid& m1, const QMatroid& m2, unsigned threads = 0);
// Every flat of m2 is a flat of m1.
MapReport is_strong_flats(const QMatroid& m1, const QMatroid& m2);
// Every circuit of m1 is a sum of circuits of m2.
MapReport is_strong_circuits(const QMatroid& m1, const QMatroid& m2);
// Every basis of m2 lies in a basis of m1 and every basis of m1 contains a
// basis of m2.
MapReport basis_sandwich(const QMatroid& m1, const QMatroid& m2);

}  // namespace qdm
