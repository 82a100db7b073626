#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdm/lattice.hpp"

namespace qdm {

// Outcome of an exhaustive axiom check. On failure, witness lists the
// offending subspaces by role ("X", "Y", "A", ...) so the violation can be
// replayed.
struct AxiomReport {
  bool pass = true;
  std::string axiom;
  std::vector<std::pair<std::string, SubspaceId>> witness;
  std::string detail;

  explicit operator bool() const { return pass; }

  std::optional<SubspaceId> role(std::string_view name) const {
    for (const auto& [r, id] : witness) {
      if (r == name) return id;
    }
    return std::nullopt;
  }

  static AxiomReport ok() { return {}; }
  static AxiomReport violated(std::string axiom, std::vector<std::pair<std::string, SubspaceId>> witness,
                              std::string detail = {}) {
    return {false, std::move(axiom), std::move(witness), std::move(detail)};
  }
};

// "pass", or "fail <axiom>: X = <...>; A = <...> (detail)".
std::string describe(const AxiomReport& report, const Lattice& lattice);

}  // namespace qdm
