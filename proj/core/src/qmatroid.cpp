#include "qdm/qmatroid.hpp"

#include <algorithm>

#include "qdm/error.hpp"
#include "qdm/parallel.hpp"

namespace qdm {
namespace {

using Witness = std::vector<std::pair<std::string, SubspaceId>>;

void require_same_lattice(const Lattice& lattice, const Family& family) {
  if (!lattice.same_shape(family.lattice())) fail(Errc::kLatticeMismatch, "family lives on a different lattice");
}

// Independent iff a member lies above: propagate membership down the covers.
std::vector<char> down_closure(const Family& family) {
  const Lattice& lat = family.lattice();
  std::vector<char> inside(lat.size(), 0);
  for (SubspaceId id = static_cast<SubspaceId>(lat.size()); id-- > 0;) {
    if (family.contains(id)) {
      inside[id] = 1;
      continue;
    }
    for (SubspaceId up : lat.upper_covers(id)) {
      if (inside[up]) {
        inside[id] = 1;
        break;
      }
    }
  }
  return inside;
}

// Subspace of the parent lattice standing for `u` under the coordinates.
SubspaceId pull_back(const IntervalQMatroid& minor, const Lattice& target, SubspaceId u, const MatGF& coordinates) {
  const Lattice& lat = minor.parent().lattice();
  MatGF image = multiply(target.subspace(u).basis(), coordinates);
  if (minor.kind() == IntervalQMatroid::Kind::kContraction) {
    image = vstack(image, lat.subspace(minor.anchor()).basis());
  }
  return lat.id_of(Subspace::span(lat.field(), lat.n(), image));
}

}  // namespace

QMatroid QMatroid::from_ranks(AmbientPtr ambient, std::vector<int> ranks, unsigned threads) {
  AxiomReport report = validate_ranks(ambient->lattice(), ranks, threads);
  if (!report) fail(Errc::kNotAQMatroid, describe(report, ambient->lattice()));
  return QMatroid(std::move(ambient), std::move(ranks));
}

QMatroid QMatroid::unchecked(AmbientPtr ambient, std::vector<int> ranks) {
  if (ranks.size() != ambient->size()) fail(Errc::kIncompleteTable, "rank table does not cover the lattice");
  return QMatroid(std::move(ambient), std::move(ranks));
}

QMatroid QMatroid::uniform(AmbientPtr ambient, int k) {
  if (k < 0 || k > ambient->n()) fail(Errc::kInvalidDimension, "uniform rank out of range");
  std::vector<int> ranks(ambient->size());
  for (SubspaceId id : ambient->lattice().all()) ranks[id] = std::min(k, ambient->lattice().dim(id));
  return QMatroid(std::move(ambient), std::move(ranks));
}

BasisOutcome try_from_bases(AmbientPtr ambient, const Family& bases, unsigned threads) {
  const Lattice& lat = ambient->lattice();
  require_same_lattice(lat, bases);
  if (bases.empty()) fail(Errc::kEmptyFamily, "no bases given");

  const std::vector<char> independent = down_closure(bases);
  std::vector<int> ranks(lat.size(), 0);
  for (SubspaceId id : lat.all()) {
    if (independent[id]) {
      ranks[id] = lat.dim(id);
      continue;
    }
    for (SubspaceId c : lat.lower_covers(id)) ranks[id] = std::max(ranks[id], ranks[c]);
  }

  AxiomReport report = validate_ranks(lat, ranks, threads);
  if (!report) {
    report.detail = report.detail.empty() ? "induced rank function" : report.detail + "; induced rank function";
    return {std::nullopt, std::move(report)};
  }
  const int top = ranks.back();
  for (SubspaceId id : lat.all()) {
    const bool basis = independent[id] && lat.dim(id) == top;
    if (basis != bases.contains(id)) {
      return {std::nullopt,
              AxiomReport::violated("basis-mismatch", {{"B", id}},
                                    basis ? "basis of the induced q-matroid missing from the family"
                                          : "family member is not a basis of the induced q-matroid")};
    }
  }
  return {QMatroid::unchecked(std::move(ambient), std::move(ranks)), AxiomReport::ok()};
}

QMatroid QMatroid::from_bases(AmbientPtr ambient, const Family& bases, unsigned threads) {
  const Lattice& lat = ambient->lattice();
  BasisOutcome outcome = try_from_bases(ambient, bases, threads);
  if (outcome.matroid) return std::move(*outcome.matroid);
  const Errc code = outcome.report.axiom == "basis-mismatch" ? Errc::kBasisMismatch : Errc::kNotAQMatroid;
  fail(code, describe(outcome.report, lat));
}

bool QMatroid::is_flat(SubspaceId id) const {
  for (SubspaceId up : lattice().upper_covers(id)) {
    if (ranks_[up] == ranks_[id]) return false;
  }
  return true;
}

bool QMatroid::operator==(const QMatroid& other) const {
  return lattice().same_shape(other.lattice()) && ranks_ == other.ranks_;
}

AxiomReport validate_ranks(const Lattice& lat, std::span<const int> ranks, unsigned threads) {
  if (ranks.size() != lat.size()) fail(Errc::kIncompleteTable, "rank table does not cover the lattice");
  for (SubspaceId a : lat.all()) {
    if (ranks[a] < 0 || ranks[a] > lat.dim(a)) {
      return AxiomReport::violated("R1", {{"A", a}},
                                   "r(A) = " + std::to_string(ranks[a]) + ", dim A = " + std::to_string(lat.dim(a)));
    }
  }
  for (SubspaceId b : lat.all()) {
    for (SubspaceId a : lat.lower_covers(b)) {
      if (ranks[a] > ranks[b]) {
        return AxiomReport::violated("R2", {{"A", a}, {"B", b}},
                                     "r(A) = " + std::to_string(ranks[a]) + " > r(B) = " + std::to_string(ranks[b]));
      }
    }
  }
  auto hit = find_first(lat.size(), threads, [&](std::size_t i) -> std::optional<SubspaceId> {
    const auto a = static_cast<SubspaceId>(i);
    for (SubspaceId b = a + 1; b < lat.size(); ++b) {
      if (ranks[lat.join(a, b)] + ranks[lat.meet(a, b)] > ranks[a] + ranks[b]) return b;
    }
    return std::nullopt;
  });
  if (hit) {
    const auto a = static_cast<SubspaceId>(hit->first);
    const SubspaceId b = hit->second;
    return AxiomReport::violated(
        "R3", {{"A", a}, {"B", b}},
        "r(A+B) + r(A meet B) = " + std::to_string(ranks[lat.join(a, b)] + ranks[lat.meet(a, b)]) +
            " > r(A) + r(B) = " + std::to_string(ranks[a] + ranks[b]));
  }
  return AxiomReport::ok();
}

DerivedFamilies derived(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  const LatticePtr& lp = m.lattice_ptr();
  DerivedFamilies d{Family(lp), Family(lp), Family(lp), Family(lp), Family(lp), Family(lp), Family(lp), Family(lp)};
  for (SubspaceId id : lat.all()) {
    const bool indep = m.is_independent(id);
    if (indep) {
      d.independents.insert(id);
      bool maximal = true;
      for (SubspaceId up : lat.upper_covers(id)) {
        if (m.is_independent(up)) {
          maximal = false;
          break;
        }
      }
      if (maximal) d.bases.insert(id);
    } else {
      bool minimal = true;
      for (SubspaceId c : lat.lower_covers(id)) {
        if (!m.is_independent(c)) {
          minimal = false;
          break;
        }
      }
      if (minimal) d.circuits.insert(id);
    }
    if (m.is_spanning(id)) d.spanning.insert(id);
    if (m.is_flat(id)) d.flats.insert(id);
  }
  const std::vector<SubspaceId> flats = d.flats.ids();
  for (SubspaceId f : flats) {
    if (f == lat.full()) continue;
    bool maximal = true;
    for (SubspaceId g : flats) {
      if (g != f && g != lat.full() && lat.contains(g, f)) {
        maximal = false;
        break;
      }
    }
    if (maximal) d.hyperplanes.insert(f);
  }
  const QMatroid star = dual(m);
  for (SubspaceId x : lat.points()) {
    if (m.rank(x) == 0) d.loops.insert(x);
    if (star.rank(x) == 0) d.coloops.insert(x);
  }
  return d;
}

AxiomReport check_independence_axioms(const Family& family) {
  const Lattice& lat = family.lattice();
  if (family.empty()) return AxiomReport::violated("I1", {}, "family is empty");
  const std::vector<SubspaceId> members = family.ids();
  for (SubspaceId j : members) {
    for (SubspaceId i : lat.lower_covers(j)) {
      if (!family.contains(i)) return AxiomReport::violated("I2", {{"J", j}, {"I", i}}, "subspace of a member is missing");
    }
  }
  for (SubspaceId i : members) {
    for (SubspaceId j : members) {
      if (lat.dim(i) >= lat.dim(j)) continue;
      bool found = false;
      for (SubspaceId x : lat.hyperplanes()) {
        if (lat.contains(x, i) && !lat.contains(x, j) && extensions_outside_in(family, i, x)) {
          found = true;
          break;
        }
      }
      if (!found) return AxiomReport::violated("nI3", {{"I", i}, {"J", j}});
    }
  }
  return AxiomReport::ok();
}

AxiomReport check_basis_axioms(const Family& family) {
  const Lattice& lat = family.lattice();
  if (family.empty()) return AxiomReport::violated("B1", {}, "family is empty");
  const std::vector<SubspaceId> members = family.ids();
  for (SubspaceId b1 : members) {
    for (SubspaceId b2 : members) {
      if (b1 != b2 && lat.contains(b2, b1)) return AxiomReport::violated("B2", {{"B1", b1}, {"B2", b2}});
    }
  }
  for (SubspaceId b1 : members) {
    for (SubspaceId b2 : members) {
      for (SubspaceId a : lat.lower_covers(b1)) {
        bool found = false;
        for (SubspaceId x : lat.hyperplanes()) {
          if (lat.contains(x, a) && !lat.contains(x, b2) && extensions_outside_in(family, a, x)) {
            found = true;
            break;
          }
        }
        if (!found) return AxiomReport::violated("nB3", {{"B1", b1}, {"B2", b2}, {"A", a}});
      }
    }
  }
  return AxiomReport::ok();
}

AxiomReport check_spanning_axioms(const Family& family) {
  const Lattice& lat = family.lattice();
  if (!family.contains(lat.full())) return AxiomReport::violated("S1", {}, "E is not spanning");
  const std::vector<SubspaceId> members = family.ids();
  for (SubspaceId j : members) {
    for (SubspaceId i : lat.upper_covers(j)) {
      if (!family.contains(i)) {
        return AxiomReport::violated("S2", {{"J", j}, {"I", i}}, "superspace of a member is missing");
      }
    }
  }
  for (SubspaceId s1 : members) {
    for (SubspaceId s2 : members) {
      if (lat.dim(s2) >= lat.dim(s1)) continue;
      bool found = false;
      for (SubspaceId x : lat.points()) {
        if (lat.contains(s1, x) && !lat.contains(s2, x) && cuts_avoiding_in(family, s1, x)) {
          found = true;
          break;
        }
      }
      if (!found) return AxiomReport::violated("nS3", {{"S1", s1}, {"S2", s2}});
    }
  }
  return AxiomReport::ok();
}

AxiomReport check_circuit_axioms(const Family& family) {
  const Lattice& lat = family.lattice();
  if (family.contains(lat.zero())) return AxiomReport::violated("C1", {{"C", lat.zero()}});
  const std::vector<SubspaceId> members = family.ids();
  for (SubspaceId c1 : members) {
    for (SubspaceId c2 : members) {
      if (c1 != c2 && lat.contains(c2, c1)) return AxiomReport::violated("C2", {{"C1", c1}, {"C2", c2}});
    }
  }
  for (SubspaceId c1 : members) {
    for (SubspaceId c2 : members) {
      if (c1 == c2) continue;
      const SubspaceId s = lat.join(c1, c2);
      for (SubspaceId x : lat.hyperplanes()) {
        const SubspaceId w = lat.meet(s, x);
        bool found = false;
        for (SubspaceId c3 : members) {
          if (lat.contains(w, c3)) {
            found = true;
            break;
          }
        }
        if (!found) return AxiomReport::violated("C3", {{"C1", c1}, {"C2", c2}, {"X", x}});
      }
    }
  }
  return AxiomReport::ok();
}

AxiomReport check_cryptomorphisms(const DerivedFamilies& families) {
  for (AxiomReport r : {check_independence_axioms(families.independents), check_basis_axioms(families.bases),
                        check_spanning_axioms(families.spanning), check_circuit_axioms(families.circuits)}) {
    if (!r) return r;
  }
  return AxiomReport::ok();
}

SubspaceId closure(const QMatroid& m, SubspaceId id) {
  const Lattice& lat = m.lattice();
  while (true) {
    SubspaceId next = id;
    for (SubspaceId up : lat.upper_covers(id)) {
      if (m.rank(up) == m.rank(id)) next = lat.join(next, up);
    }
    if (next == id) return id;
    id = next;
  }
}

QMatroid dual(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  std::vector<int> ranks(lat.size());
  for (SubspaceId id : lat.all()) ranks[id] = lat.dim(id) - m.full_rank() + m.rank(m.ambient().perp(id));
  return QMatroid::unchecked(m.ambient_ptr(), std::move(ranks));
}

std::optional<SubspaceId> point_in_every_basis(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  std::vector<SubspaceId> bases;
  for (SubspaceId id : lat.of_dim(m.full_rank())) {
    if (m.is_independent(id)) bases.push_back(id);
  }
  for (SubspaceId x : lat.points()) {
    if (std::all_of(bases.begin(), bases.end(), [&](SubspaceId b) { return lat.contains(b, x); })) return x;
  }
  return std::nullopt;
}

SubspaceId fundamental_circuit(const QMatroid& m, SubspaceId x, SubspaceId a) {
  const Lattice& lat = m.lattice();
  if (!m.is_independent(x)) fail(Errc::kPreconditionViolated, "X is dependent");
  if (lat.dim(a) != lat.dim(x) + 1 || !lat.contains(a, x)) {
    fail(Errc::kPreconditionViolated, "X is not of codimension 1 in A");
  }
  if (m.is_independent(a)) fail(Errc::kPreconditionViolated, "A is independent");
  std::vector<SubspaceId> found;
  for (SubspaceId c : lat.all()) {
    if (!lat.contains(a, c) || m.is_independent(c)) continue;
    const auto covers = lat.lower_covers(c);
    if (std::all_of(covers.begin(), covers.end(), [&](SubspaceId h) { return m.is_independent(h); })) {
      found.push_back(c);
    }
  }
  if (found.size() != 1) {
    fail(Errc::kNonUnique, "A contains " + std::to_string(found.size()) + " circuits");
  }
  return found.front();
}

IntervalQMatroid::IntervalQMatroid(QMatroid parent, SubspaceId anchor, Kind kind)
    : parent_(std::move(parent)), anchor_(anchor), kind_(kind) {
  if (anchor_ >= parent_.lattice().size()) fail(Errc::kAmbientMismatch, "anchor outside the lattice");
}

int IntervalQMatroid::ground_dim() const {
  const int d = parent_.lattice().dim(anchor_);
  return kind_ == Kind::kRestriction ? d : parent_.lattice().n() - d;
}

bool IntervalQMatroid::in_domain(SubspaceId id) const {
  const Lattice& lat = parent_.lattice();
  return kind_ == Kind::kRestriction ? lat.contains(anchor_, id) : lat.contains(id, anchor_);
}

std::vector<SubspaceId> IntervalQMatroid::domain() const {
  std::vector<SubspaceId> out;
  for (SubspaceId id : parent_.lattice().all()) {
    if (in_domain(id)) out.push_back(id);
  }
  return out;
}

int IntervalQMatroid::rank(SubspaceId id) const {
  if (!in_domain(id)) fail(Errc::kNotContained, "subspace outside the minor's interval");
  return kind_ == Kind::kRestriction ? parent_.rank(id) : parent_.rank(id) - parent_.rank(anchor_);
}

int IntervalQMatroid::relative_dim(SubspaceId id) const {
  const int d = parent_.lattice().dim(id);
  return kind_ == Kind::kRestriction ? d : d - parent_.lattice().dim(anchor_);
}

IntervalQMatroid restrict_to(const QMatroid& m, SubspaceId x) {
  return IntervalQMatroid(m, x, IntervalQMatroid::Kind::kRestriction);
}

IntervalQMatroid contract_by(const QMatroid& m, SubspaceId x) {
  return IntervalQMatroid(m, x, IntervalQMatroid::Kind::kContraction);
}

AxiomReport validate(const IntervalQMatroid& minor) {
  const Lattice& lat = minor.parent().lattice();
  const std::vector<SubspaceId> dom = minor.domain();
  for (SubspaceId a : dom) {
    if (minor.rank(a) < 0 || minor.rank(a) > minor.relative_dim(a)) return AxiomReport::violated("R1", {{"A", a}});
  }
  for (SubspaceId b : dom) {
    for (SubspaceId a : lat.lower_covers(b)) {
      if (minor.in_domain(a) && minor.rank(a) > minor.rank(b)) return AxiomReport::violated("R2", {{"A", a}, {"B", b}});
    }
  }
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      const SubspaceId a = dom[i], b = dom[j];
      if (minor.rank(lat.join(a, b)) + minor.rank(lat.meet(a, b)) > minor.rank(a) + minor.rank(b)) {
        return AxiomReport::violated("R3", {{"A", a}, {"B", b}});
      }
    }
  }
  return AxiomReport::ok();
}

QMatroid coordinatize(const IntervalQMatroid& minor, const MatGF& coordinates, AmbientPtr target) {
  const Lattice& lat = minor.parent().lattice();
  const Lattice& tgt = target->lattice();
  const int d = minor.ground_dim();
  if (!same_field(tgt.field(), lat.field()) || tgt.n() != d) {
    fail(Errc::kAmbientMismatch, "target space must be F_q^d with d the minor's ground dimension");
  }
  if (coordinates.rows() != static_cast<std::size_t>(d) || coordinates.cols() != static_cast<std::size_t>(lat.n())) {
    fail(Errc::kDimensionMismatch, "coordinate matrix must be d x n");
  }
  // The coordinate rows must pick out the whole interval.
  const SubspaceId top = pull_back(minor, tgt, tgt.full(), coordinates);
  const SubspaceId want = minor.kind() == IntervalQMatroid::Kind::kRestriction ? minor.anchor() : lat.full();
  if (top != want || rank(coordinates) != static_cast<std::size_t>(d)) {
    fail(Errc::kPreconditionViolated, "coordinates do not identify F_q^d with the minor's ground space");
  }
  std::vector<int> ranks(tgt.size());
  for (SubspaceId u : tgt.all()) ranks[u] = minor.rank(pull_back(minor, tgt, u, coordinates));
  return QMatroid::unchecked(std::move(target), std::move(ranks));
}

}  // namespace qdm
