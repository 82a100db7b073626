#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qdm/family.hpp"
#include "qdm/lattice.hpp"
#include "qdm/report.hpp"

namespace qdm {

// A q-matroid on E = F_q^n given by its full rank table, indexed by lattice id.
class QMatroid {
 public:
  // Checks R1-R3; throws NotAQMatroid with the first violation.
  static QMatroid from_ranks(AmbientPtr ambient, std::vector<int> ranks, unsigned threads = 0);
  static QMatroid unchecked(AmbientPtr ambient, std::vector<int> ranks);
  // r(A) = min(k, dim A).
  static QMatroid uniform(AmbientPtr ambient, int k);
  // Rank of A is the largest dimension of a subspace of A lying inside some
  // member. Throws NotAQMatroid if that rank function breaks R1-R3 and
  // BasisMismatch if its bases are not exactly the given family.
  static QMatroid from_bases(AmbientPtr ambient, const Family& bases, unsigned threads = 0);

  const Ambient& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  const Lattice& lattice() const { return ambient_->lattice(); }
  const LatticePtr& lattice_ptr() const { return ambient_->lattice_ptr(); }

  int rank(SubspaceId id) const { return ranks_[id]; }
  const std::vector<int>& ranks() const { return ranks_; }
  // r(E).
  int full_rank() const { return ranks_.back(); }

  bool is_independent(SubspaceId id) const { return ranks_[id] == lattice().dim(id); }
  bool is_spanning(SubspaceId id) const { return ranks_[id] == full_rank(); }
  bool is_flat(SubspaceId id) const;

  bool operator==(const QMatroid& other) const;

 private:
  QMatroid(AmbientPtr ambient, std::vector<int> ranks) : ambient_(std::move(ambient)), ranks_(std::move(ranks)) {}

  AmbientPtr ambient_;
  std::vector<int> ranks_;
};

// R1, then R2 on covering pairs, then R3 on unordered pairs; first violation
// in lattice order. Throws IncompleteTable if ranks does not cover the lattice.
AxiomReport validate_ranks(const Lattice& lattice, std::span<const int> ranks, unsigned threads = 0);
inline AxiomReport validate(const QMatroid& m, unsigned threads = 0) {
  return validate_ranks(m.lattice(), m.ranks(), threads);
}

// Either a q-matroid or the reason the family does not define one.
struct BasisOutcome {
  std::optional<QMatroid> matroid;
  AxiomReport report;
};
BasisOutcome try_from_bases(AmbientPtr ambient, const Family& bases, unsigned threads = 0);

struct DerivedFamilies {
  Family independents;
  Family bases;
  Family spanning;
  Family circuits;
  Family flats;
  Family hyperplanes;
  Family loops;
  Family coloops;
};

DerivedFamilies derived(const QMatroid& m);

// Axiom systems for the derived families, checked directly on the families.
AxiomReport check_independence_axioms(const Family& independents);
AxiomReport check_basis_axioms(const Family& bases);
AxiomReport check_spanning_axioms(const Family& spanning);
AxiomReport check_circuit_axioms(const Family& circuits);
// All four of the above on derived(m).
AxiomReport check_cryptomorphisms(const DerivedFamilies& families);

// Smallest flat containing id.
SubspaceId closure(const QMatroid& m, SubspaceId id);

// r*(A) = dim A - r(E) + r(perp A) under the ambient form.
QMatroid dual(const QMatroid& m);

// A point lying in every basis, if any.
std::optional<SubspaceId> point_in_every_basis(const QMatroid& m);

// The circuit inside `a`, where x is independent of codimension 1 in the
// dependent space a. Throws PreconditionViolated or NonUnique.
SubspaceId fundamental_circuit(const QMatroid& m, SubspaceId x, SubspaceId a);

// Restriction to [0, X] or contraction onto [X, E], kept on the parent lattice.
class IntervalQMatroid {
 public:
  enum class Kind { kRestriction, kContraction };

  IntervalQMatroid(QMatroid parent, SubspaceId anchor, Kind kind);

  const QMatroid& parent() const { return parent_; }
  SubspaceId anchor() const { return anchor_; }
  Kind kind() const { return kind_; }

  // Dimension of the minor's ground space.
  int ground_dim() const;
  bool in_domain(SubspaceId id) const;
  // Members of the interval in lattice order.
  std::vector<SubspaceId> domain() const;
  // Throws NotContained outside the interval.
  int rank(SubspaceId id) const;
  // dim A, or dim A - dim X for a contraction.
  int relative_dim(SubspaceId id) const;

 private:
  QMatroid parent_;
  SubspaceId anchor_;
  Kind kind_;
};

IntervalQMatroid restrict_to(const QMatroid& m, SubspaceId x);
IntervalQMatroid contract_by(const QMatroid& m, SubspaceId x);

// R1-R3 relative to the interval lattice.
AxiomReport validate(const IntervalQMatroid& minor);

// Re-expresses a minor as a q-matroid on F_q^d. For a restriction the d rows
// of `coordinates` must be a basis of X and subspace U of F_q^d stands for
// span(U * coordinates). For a contraction they must span a complement of X
// and U stands for X + span(U * coordinates). Meant for comparing rank
// tables of minors under an explicit identification of ground spaces.
QMatroid coordinatize(const IntervalQMatroid& minor, const MatGF& coordinates, AmbientPtr target);

}  // namespace qdm
