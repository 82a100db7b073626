#include "qdm/strongmap.hpp"

#include "qdm/error.hpp"
#include "qdm/parallel.hpp"

namespace qdm {
namespace {

void require_same_lattice(const QMatroid& m1, const QMatroid& m2) {
  if (!m1.lattice().same_shape(m2.lattice())) fail(Errc::kLatticeMismatch, "q-matroids on different lattices");
}

MapReport holds(std::string criterion) { return {true, std::move(criterion), {}, {}}; }

MapReport broken(std::string criterion, std::vector<std::pair<std::string, SubspaceId>> witness, std::string detail) {
  return {false, std::move(criterion), std::move(witness), std::move(detail)};
}

bool is_circuit(const QMatroid& m, SubspaceId id) {
  if (m.is_independent(id)) return false;
  for (SubspaceId c : m.lattice().lower_covers(id)) {
    if (!m.is_independent(c)) return false;
  }
  return true;
}

std::vector<SubspaceId> bases_of(const QMatroid& m) {
  std::vector<SubspaceId> out;
  for (SubspaceId id : m.lattice().of_dim(m.full_rank())) {
    if (m.is_independent(id)) out.push_back(id);
  }
  return out;
}

}  // namespace

std::string describe(const MapReport& report, const Lattice& lattice) {
  std::string out = (report.verdict ? "holds (" : "fails (") + report.criterion + ")";
  const char* sep = ": ";
  for (const auto& [role, id] : report.witness) {
    out += sep + role + " = <" + lattice.render(id) + ">";
    sep = "; ";
  }
  if (!report.detail.empty()) out += " [" + report.detail + "]";
  return out;
}

MapReport is_weak(const QMatroid& m1, const QMatroid& m2) {
  require_same_lattice(m1, m2);
  for (SubspaceId v : m1.lattice().all()) {
    if (m2.rank(v) > m1.rank(v)) {
      return broken("weak", {{"V", v}},
                    "r2(V) = " + std::to_string(m2.rank(v)) + " > r1(V) = " + std::to_string(m1.rank(v)));
    }
  }
  return holds("weak");
}

MapReport is_strong_rankdiff(const QMatroid& m1, const QMatroid& m2, unsigned threads) {
  require_same_lattice(m1, m2);
  const Lattice& lat = m1.lattice();
  auto violates = [&](SubspaceId x, SubspaceId y) {
    return m1.rank(x) - m1.rank(y) < m2.rank(x) - m2.rank(y);
  };
  auto hit = find_first(lat.size(), threads, [&](std::size_t i) -> std::optional<SubspaceId> {
    const auto x = static_cast<SubspaceId>(i);
    if (lat.has_relation_tables()) {
      const Bitset& below = lat.down_set(x);
      for (std::size_t y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
        if (violates(x, static_cast<SubspaceId>(y))) return static_cast<SubspaceId>(y);
      }
    } else {
      for (SubspaceId y = 0; y <= x; ++y) {
        if (lat.contains(x, y) && violates(x, y)) return y;
      }
    }
    return std::nullopt;
  });
  if (!hit) return holds("rankdiff");
  const auto x = static_cast<SubspaceId>(hit->first);
  const SubspaceId y = hit->second;
  return broken("rankdiff", {{"X", x}, {"Y", y}},
                "r1(X) - r1(Y) = " + std::to_string(m1.rank(x)) + " - " + std::to_string(m1.rank(y)) + " = " +
                    std::to_string(m1.rank(x) - m1.rank(y)) + " < r2(X) - r2(Y) = " + std::to_string(m2.rank(x)) +
                    " - " + std::to_string(m2.rank(y)) + " = " + std::to_string(m2.rank(x) - m2.rank(y)));
}

MapReport is_strong_flats(const QMatroid& m1, const QMatroid& m2) {
  require_same_lattice(m1, m2);
  for (SubspaceId f : m1.lattice().all()) {
    if (m2.is_flat(f) && !m1.is_flat(f)) return broken("flats", {{"F", f}}, "flat of the codomain only");
  }
  return holds("flats");
}

MapReport is_strong_circuits(const QMatroid& m1, const QMatroid& m2) {
  require_same_lattice(m1, m2);
  const Lattice& lat = m1.lattice();
  std::vector<SubspaceId> targets;
  for (SubspaceId id : lat.all()) {
    if (is_circuit(m2, id)) targets.push_back(id);
  }
  // Sums of circuits inside C are all contained in the sum of every such
  // circuit, and that sum is itself reachable; so C is a sum iff it equals it.
  for (SubspaceId c : lat.all()) {
    if (!is_circuit(m1, c)) continue;
    SubspaceId total = lat.zero();
    for (SubspaceId t : targets) {
      if (lat.contains(c, t)) total = lat.join(total, t);
    }
    if (total != c) {
      return broken("circuits", {{"C", c}}, "circuits of the codomain inside C only span <" + lat.render(total) + ">");
    }
  }
  return holds("circuits");
}

MapReport basis_sandwich(const QMatroid& m1, const QMatroid& m2) {
  require_same_lattice(m1, m2);
  const Lattice& lat = m1.lattice();
  const std::vector<SubspaceId> b1 = bases_of(m1);
  const std::vector<SubspaceId> b2 = bases_of(m2);
  for (SubspaceId b : b2) {
    bool inside = false;
    for (SubspaceId big : b1) {
      if (lat.contains(big, b)) {
        inside = true;
        break;
      }
    }
    if (!inside) return broken("sandwich", {{"B", b}}, "basis of the codomain lies in no basis of the domain");
  }
  for (SubspaceId b : b1) {
    bool covers = false;
    for (SubspaceId small : b2) {
      if (lat.contains(b, small)) {
        covers = true;
        break;
      }
    }
    if (!covers) return broken("sandwich", {{"B", b}}, "basis of the domain contains no basis of the codomain");
  }
  return holds("sandwich");
}

}  // namespace qdm
