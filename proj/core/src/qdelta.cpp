#include "qdm/qdelta.hpp"

#include <algorithm>
#include <atomic>

#include "qdm/error.hpp"
#include "qdm/parallel.hpp"

namespace qdm {
namespace {

bool disjunct_ii(const Family& f, SubspaceId a) {
  const Lattice& lat = f.lattice();
  for (SubspaceId z : lat.hyperplanes()) {
    if (f.contains(lat.meet(z, a))) return true;
  }
  return false;
}

bool disjunct_iv(const Family& f, SubspaceId a) {
  const Lattice& lat = f.lattice();
  for (SubspaceId z : lat.points()) {
    if (f.contains(lat.join(a, z))) return true;
  }
  return false;
}

bool disjunct_i(const Family& f, SubspaceId y, SubspaceId a) {
  const Lattice& lat = f.lattice();
  for (SubspaceId z : lat.hyperplanes()) {
    if (lat.contains(z, a) && !lat.contains(z, y) && extensions_outside_in(f, a, z)) return true;
  }
  return false;
}

bool disjunct_iii(const Family& f, SubspaceId y, SubspaceId a) {
  const Lattice& lat = f.lattice();
  for (SubspaceId z : lat.points()) {
    if (lat.contains(a, z) && !lat.contains(y, z) && cuts_avoiding_in(f, a, z)) return true;
  }
  return false;
}

// Per-A data that does not depend on Y, precomputed for every A adjacent to
// a feasible space. The Y-dependent parts of (i) and (iii) only filter the
// stored candidate lists.
class ExchangeTables {
 public:
  ExchangeTables(const Family& f, bool below, bool above, unsigned threads) : f_(f) {
    const Lattice& lat = f.lattice();
    const std::size_t n = lat.size();
    std::vector<char> need_low(n, 0), need_up(n, 0);
    for (SubspaceId x : f.ids()) {
      if (below) {
        for (SubspaceId a : lat.lower_covers(x)) need_low[a] = 1;
      }
      if (above) {
        for (SubspaceId a : lat.upper_covers(x)) need_up[a] = 1;
      }
    }
    ii_.assign(n, 0);
    iv_.assign(n, 0);
    hyperplanes_.resize(n);
    points_.resize(n);
    parallel_for(n, threads, [&](std::size_t i) {
      const auto a = static_cast<SubspaceId>(i);
      if (need_low[a]) {
        ii_[a] = disjunct_ii(f, a);
        for (SubspaceId z : lat.hyperplanes()) {
          if (lat.contains(z, a) && extensions_outside_in(f, a, z)) hyperplanes_[a].push_back(z);
        }
      }
      if (need_up[a]) {
        iv_[a] = disjunct_iv(f, a);
        for (SubspaceId z : lat.points()) {
          if (lat.contains(a, z) && cuts_avoiding_in(f, a, z)) points_[a].push_back(z);
        }
      }
    });
  }

  bool holds(Exchange axiom, SubspaceId y, SubspaceId a) const {
    switch (axiom) {
      case Exchange::kF1:
        return ii_[a] || i(y, a);
      case Exchange::kF2:
        return iv_[a] || iii(y, a);
      case Exchange::kF3:
        return f_.contains(a) || i(y, a);
      case Exchange::kF4:
        return f_.contains(a) || iii(y, a);
    }
    return false;
  }

 private:
  bool i(SubspaceId y, SubspaceId a) const {
    const Lattice& lat = f_.lattice();
    for (SubspaceId z : hyperplanes_[a]) {
      if (!lat.contains(z, y)) return true;
    }
    return false;
  }
  bool iii(SubspaceId y, SubspaceId a) const {
    const Lattice& lat = f_.lattice();
    for (SubspaceId z : points_[a]) {
      if (!lat.contains(y, z)) return true;
    }
    return false;
  }

  const Family& f_;
  std::vector<char> ii_, iv_;
  std::vector<std::vector<SubspaceId>> hyperplanes_;
  std::vector<std::vector<SubspaceId>> points_;
};

bool shrinks(Exchange axiom) { return axiom == Exchange::kF1 || axiom == Exchange::kF3; }

std::span<const SubspaceId> candidates(const Lattice& lat, Exchange axiom, SubspaceId x) {
  return shrinks(axiom) ? lat.lower_covers(x) : lat.upper_covers(x);
}

const char* failure_detail(Exchange axiom) {
  switch (axiom) {
    case Exchange::kF1:
      return "neither (i) nor (ii) holds";
    case Exchange::kF2:
      return "neither (iii) nor (iv) holds";
    case Exchange::kF3:
      return "neither (i) nor (v) holds";
    case Exchange::kF4:
      return "neither (iii) nor (vi) holds";
  }
  return "";
}

struct Failure {
  Exchange axiom;
  SubspaceId a;
};

AxiomReport run_check(const Family& f, Exchange first, Exchange second, unsigned threads) {
  if (f.empty()) fail(Errc::kEmptyFamily, "feasible family is empty");
  const Lattice& lat = f.lattice();
  const ExchangeTables tables(f, true, true, threads);
  const std::vector<SubspaceId> members = f.ids();
  const std::size_t m = members.size();
  auto hit = find_first(m * m, threads, [&](std::size_t p) -> std::optional<Failure> {
    const SubspaceId x = members[p / m];
    const SubspaceId y = members[p % m];
    for (Exchange axiom : {first, second}) {
      for (SubspaceId a : candidates(lat, axiom, x)) {
        if (!tables.holds(axiom, y, a)) return Failure{axiom, a};
      }
    }
    return std::nullopt;
  });
  if (!hit) return AxiomReport::ok();
  const std::size_t p = hit->first;
  const Failure& bad = hit->second;
  return AxiomReport::violated(exchange_name(bad.axiom),
                               {{"X", members[p / m]}, {"Y", members[p % m]}, {"A", bad.a}},
                               failure_detail(bad.axiom));
}

std::size_t run_count(const Family& f, Exchange first, Exchange second, unsigned threads) {
  if (f.empty()) fail(Errc::kEmptyFamily, "feasible family is empty");
  const Lattice& lat = f.lattice();
  const ExchangeTables tables(f, true, true, threads);
  const std::vector<SubspaceId> members = f.ids();
  std::atomic<std::size_t> total{0};
  parallel_for(members.size(), threads, [&](std::size_t i) {
    std::size_t local = 0;
    const SubspaceId x = members[i];
    for (SubspaceId y : members) {
      for (Exchange axiom : {first, second}) {
        for (SubspaceId a : candidates(lat, axiom, x)) {
          if (!tables.holds(axiom, y, a)) ++local;
        }
      }
    }
    total += local;
  });
  return total.load();
}

}  // namespace

const char* exchange_name(Exchange axiom) {
  switch (axiom) {
    case Exchange::kF1:
      return "F1";
    case Exchange::kF2:
      return "F2";
    case Exchange::kF3:
      return "F3";
    case Exchange::kF4:
      return "F4";
  }
  return "?";
}

bool exchange_holds(const Family& f, Exchange axiom, SubspaceId /*x*/, SubspaceId y, SubspaceId a) {
  switch (axiom) {
    case Exchange::kF1:
      return disjunct_ii(f, a) || disjunct_i(f, y, a);
    case Exchange::kF2:
      return disjunct_iv(f, a) || disjunct_iii(f, y, a);
    case Exchange::kF3:
      return f.contains(a) || disjunct_i(f, y, a);
    case Exchange::kF4:
      return f.contains(a) || disjunct_iii(f, y, a);
  }
  return false;
}

QDeltaMatroid QDeltaMatroid::checked(AmbientPtr ambient, Family feasible, unsigned threads) {
  QDeltaMatroid d = unchecked(std::move(ambient), std::move(feasible));
  AxiomReport report = check_f1f2(d.feasible_, threads);
  if (!report) fail(Errc::kNotAQDeltaMatroid, describe(report, d.lattice()));
  return d;
}

QDeltaMatroid QDeltaMatroid::unchecked(AmbientPtr ambient, Family feasible) {
  if (!ambient->lattice().same_shape(feasible.lattice())) {
    fail(Errc::kLatticeMismatch, "family lives on a different lattice");
  }
  if (feasible.empty()) fail(Errc::kEmptyFamily, "feasible family is empty");
  return QDeltaMatroid(std::move(ambient), std::move(feasible));
}

AxiomReport check_f1f2(const Family& feasible, unsigned threads) {
  return run_check(feasible, Exchange::kF1, Exchange::kF2, threads);
}

AxiomReport check_f3f4(const Family& feasible, unsigned threads) {
  AxiomReport report = run_check(feasible, Exchange::kF3, Exchange::kF4, threads);
  if (report) {
    AxiomReport weaker = check_f1f2(feasible, threads);
    if (!weaker) {
      fail(Errc::kInternalInconsistency,
           "family passes (F3)(F4) but fails (F1)(F2): " + describe(weaker, feasible.lattice()));
    }
  }
  return report;
}

AxiomReport check_exchange_pair(const Family& feasible, Exchange first, Exchange second, SubspaceId x,
                                SubspaceId y) {
  const Lattice& lat = feasible.lattice();
  for (Exchange axiom : {first, second}) {
    for (SubspaceId a : candidates(lat, axiom, x)) {
      if (!exchange_holds(feasible, axiom, x, y, a)) {
        return AxiomReport::violated(exchange_name(axiom), {{"X", x}, {"Y", y}, {"A", a}}, failure_detail(axiom));
      }
    }
  }
  return AxiomReport::ok();
}

std::size_t count_f1f2_violations(const Family& feasible, unsigned threads) {
  return run_count(feasible, Exchange::kF1, Exchange::kF2, threads);
}

std::size_t count_f3f4_violations(const Family& feasible, unsigned threads) {
  return run_count(feasible, Exchange::kF3, Exchange::kF4, threads);
}

QDeltaMatroid dual(const QDeltaMatroid& delta) {
  return QDeltaMatroid::unchecked(delta.ambient_ptr(), delta.feasible().mapped(delta.ambient().perp_table()));
}

UpperLower upper_lower(const QDeltaMatroid& delta, unsigned threads) {
  const Family& f = delta.feasible();
  BasisOutcome upper = try_from_bases(delta.ambient_ptr(), f.with_dim(f.max_dim()), threads);
  BasisOutcome lower = try_from_bases(delta.ambient_ptr(), f.with_dim(f.min_dim()), threads);
  if (upper.matroid && lower.matroid) return {std::move(*upper.matroid), std::move(*lower.matroid)};
  AxiomReport axioms = check_f1f2(f, threads);
  if (!axioms) fail(Errc::kNotAQDeltaMatroid, describe(axioms, delta.lattice()));
  const AxiomReport& why = upper.matroid ? lower.report : upper.report;
  fail(Errc::kInternalInconsistency, std::string(upper.matroid ? "lower" : "upper") +
                                         " family of a q-Delta-matroid is not a basis family: " +
                                         describe(why, delta.lattice()));
}

AxiomReport is_saturated(const Family& feasible) {
  const Lattice& lat = feasible.lattice();
  const std::vector<SubspaceId> members = feasible.ids();
  for (SubspaceId y : members) {
    for (SubspaceId x : members) {
      if (x == y || !lat.contains(x, y)) continue;
      if (lat.has_relation_tables()) {
        Bitset between = lat.up_set(y) & lat.down_set(x);
        between.and_not(feasible.bits());
        const std::size_t z = between.find_first();
        if (z != Bitset::npos) {
          return AxiomReport::violated("saturation", {{"Y", y}, {"Z", static_cast<SubspaceId>(z)}, {"X", x}},
                                       "Z lies between feasible Y and X but is not feasible");
        }
      } else {
        for (SubspaceId z : lat.all()) {
          if (!feasible.contains(z) && lat.contains(z, y) && lat.contains(x, z)) {
            return AxiomReport::violated("saturation", {{"Y", y}, {"Z", z}, {"X", x}},
                                         "Z lies between feasible Y and X but is not feasible");
          }
        }
      }
    }
  }
  return AxiomReport::ok();
}

int rank_delta(const QDeltaMatroid& delta, SubspaceId a) {
  const Lattice& lat = delta.lattice();
  int best = 2 * lat.n() + 1;
  for (SubspaceId f : delta.feasible().ids()) {
    best = std::min(best, lat.dim(a) + lat.dim(f) - 2 * lat.dim(lat.meet(a, f)));
  }
  return lat.n() - best;
}

int birank(const QDeltaMatroid& delta, SubspaceId x, SubspaceId y) {
  const Lattice& lat = delta.lattice();
  const Ambient& amb = delta.ambient();
  if (!lat.contains(amb.perp(x), y)) fail(Errc::kNotOrthogonal, "Y is not inside the orthogonal complement of X");
  int best = 0;
  for (SubspaceId f : delta.feasible().ids()) {
    best = std::max(best, lat.dim(lat.meet(f, x)) + lat.dim(lat.meet(amb.perp(f), y)));
  }
  return best;
}

bool characterize_dim4(const Family& lines, unsigned threads) {
  const Lattice& lat = lines.lattice();
  if (lat.n() != 4) fail(Errc::kUnsupportedAmbient, "the characterization needs n = 4");
  for (SubspaceId d : lines.ids()) {
    if (lat.dim(d) != 2) fail(Errc::kWrongDimensions, "member <" + lat.render(d) + "> is not 2-dimensional");
  }
  const std::vector<SubspaceId> members = lines.ids();
  auto some_member = [&](auto&& pred) { return std::any_of(members.begin(), members.end(), pred); };
  bool verdict = true;
  for (SubspaceId x : lat.points()) {
    if (!some_member([&](SubspaceId d) { return lat.contains(d, x); })) verdict = false;
  }
  for (SubspaceId t : lat.of_dim(3)) {
    if (!some_member([&](SubspaceId d) { return lat.contains(t, d); })) verdict = false;
  }
  Family closed = lines;
  closed.insert(lat.zero());
  closed.insert(lat.full());
  const bool axioms = static_cast<bool>(check_f1f2(closed, threads));
  if (axioms != verdict) {
    fail(Errc::kInternalInconsistency, "covering conditions and (F1)(F2) disagree on {0, E} plus the given lines");
  }
  return verdict;
}

Family desarguesian_spread(const LatticePtr& lattice) {
  const Lattice& lat = *lattice;
  const Field& base = *lat.field();
  if (lat.n() != 4) fail(Errc::kUnsupportedAmbient, "a line spread needs n = 4");
  if (base.degree() != 1) fail(Errc::kUnsupportedAmbient, "the spread construction needs a prime field");
  const auto ext = Field::make(base.characteristic(), 2);
  const VectorCodec codec(lat.q(), 4);
  const Elem basis[2] = {1, ext->root()};
  auto pack = [&](Elem a, Elem b) {
    const auto ca = ext->coeffs(a);
    const auto cb = ext->coeffs(b);
    const std::vector<Elem> v{ca[0], ca[1], cb[0], cb[1]};
    return codec.encode(v);
  };
  Family spread(lattice);
  for (Elem lambda = 0; lambda < ext->order(); ++lambda) {
    std::vector<PackedVec> rows;
    for (Elem a : basis) rows.push_back(pack(a, ext->mul(lambda, a)));
    spread.insert(lat.span_of(std::move(rows)));
  }
  spread.insert(lat.span_of({pack(0, basis[0]), pack(0, basis[1])}));
  return spread;
}

namespace {

QDeltaMatroid asserted(const AmbientPtr& ambient, Family family, const char* what) {
  AxiomReport report = check_f1f2(family);
  if (!report) {
    fail(Errc::kInternalInconsistency,
         std::string(what) + " fails (F1)(F2): " + describe(report, ambient->lattice()));
  }
  return QDeltaMatroid::unchecked(ambient, std::move(family));
}

}  // namespace

QDeltaMatroid spread_delta(const AmbientPtr& ambient) {
  Family f = desarguesian_spread(ambient->lattice_ptr());
  f.insert(ambient->lattice().zero());
  f.insert(ambient->lattice().full());
  return asserted(ambient, std::move(f), "spread family");
}

QDeltaMatroid even_dims_delta(const AmbientPtr& ambient) {
  if (ambient->n() != 4) fail(Errc::kUnsupportedAmbient, "the even-dimension family is built for n = 4");
  return asserted(ambient, Family::of_dims(ambient->lattice_ptr(), {0, 2, 4}), "even-dimension family");
}

QDeltaMatroid from_qmatroid(const QMatroid& m, FamilyKind kind) {
  DerivedFamilies d = derived(m);
  switch (kind) {
    case FamilyKind::kBases:
      return asserted(m.ambient_ptr(), std::move(d.bases), "basis family");
    case FamilyKind::kIndependents:
      return asserted(m.ambient_ptr(), std::move(d.independents), "independent family");
    case FamilyKind::kSpanning:
      return asserted(m.ambient_ptr(), std::move(d.spanning), "spanning family");
  }
  fail(Errc::kInternalInconsistency, "unknown family kind");
}

Family coordinatize_family(const Family& feasible, SubspaceId t, const LatticePtr& target) {
  const Lattice& lat = feasible.lattice();
  if (!same_field(target->field(), lat.field()) || target->n() != lat.dim(t)) {
    fail(Errc::kAmbientMismatch, "target must be F_q^d with d = dim T");
  }
  const MatGF basis = lat.subspace(t).basis();
  Family out(target);
  for (SubspaceId u : target->all()) {
    const MatGF image = multiply(target->subspace(u).basis(), basis);
    if (feasible.contains(lat.id_of(Subspace::span(lat.field(), lat.n(), image)))) out.insert(u);
  }
  return out;
}

}  // namespace qdm
