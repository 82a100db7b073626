#pragma once

#include <cstddef>
#include <utility>

#include "qdm/family.hpp"
#include "qdm/qmatroid.hpp"
#include "qdm/report.hpp"

namespace qdm {

// A ground space with a non-empty family of feasible subspaces.
class QDeltaMatroid {
 public:
  // Checks (F1)(F2); throws NotAQDeltaMatroid with the first violation.
  static QDeltaMatroid checked(AmbientPtr ambient, Family feasible, unsigned threads = 0);
  // Only non-emptiness is enforced (EmptyFamily).
  static QDeltaMatroid unchecked(AmbientPtr ambient, Family feasible);

  const Ambient& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  const Lattice& lattice() const { return ambient_->lattice(); }
  const Family& feasible() const { return feasible_; }
  bool is_feasible(SubspaceId id) const { return feasible_.contains(id); }

  bool operator==(const QDeltaMatroid& other) const { return feasible_ == other.feasible_; }

 private:
  QDeltaMatroid(AmbientPtr ambient, Family feasible) : ambient_(std::move(ambient)), feasible_(std::move(feasible)) {}

  AmbientPtr ambient_;
  Family feasible_;
};

// The exchange axioms for a pair (X, Y) of feasible spaces and a space A.
// F1 and F3 take A of codimension 1 in X; F2 and F4 take A with X of
// codimension 1 in A. Disjuncts, with Z a hyperplane of E and z a point:
//   (i)   some Z contains A but not Y, and A + z is feasible for all z not in Z
//   (ii)  Z meet A is feasible for some Z
//   (iii) some z lies in A but not in Y, and A meet Z is feasible for all Z
//         not containing z
//   (iv)  A + z is feasible for some z
//   (v), (vi)  A is feasible
// F1 = (i) or (ii), F2 = (iii) or (iv), F3 = (i) or (v), F4 = (iii) or (vi).
enum class Exchange { kF1, kF2, kF3, kF4 };

const char* exchange_name(Exchange axiom);

// Evaluates one axiom at one triple; does not check that X, Y are feasible
// or that A has the right position relative to X.
bool exchange_holds(const Family& feasible, Exchange axiom, SubspaceId x, SubspaceId y, SubspaceId a);

// Exhaustive checks. Ordered pairs (X, Y) of feasible spaces, X = Y
// included, in lattice order of X then Y; for each pair the first axiom of
// the two is tried before the second, and A runs in lattice order. The
// report names the first failing triple with roles X, Y, A. Throws
// EmptyFamily.
AxiomReport check_f1f2(const Family& feasible, unsigned threads = 0);
// Also asserts that a pass here implies a pass of check_f1f2
// (InternalInconsistency otherwise).
AxiomReport check_f3f4(const Family& feasible, unsigned threads = 0);

// The same exhaustive search restricted to one ordered pair (X, Y): first
// the A of `first`, then those of `second`, each in lattice order.
AxiomReport check_exchange_pair(const Family& feasible, Exchange first, Exchange second, SubspaceId x,
                                SubspaceId y);

// Number of failing (X, Y, A) triples for the two axioms of a check; zero
// iff the corresponding check passes.
std::size_t count_f1f2_violations(const Family& feasible, unsigned threads = 0);
std::size_t count_f3f4_violations(const Family& feasible, unsigned threads = 0);

// Feasible family {perp F}.
QDeltaMatroid dual(const QDeltaMatroid& delta);

// q-matroids whose bases are the feasible spaces of largest and smallest
// dimension.
struct UpperLower {
  QMatroid upper;
  QMatroid lower;
};
UpperLower upper_lower(const QDeltaMatroid& delta, unsigned threads = 0);

// Every Z between feasible Y and X is feasible. Witness roles Y, Z, X.
AxiomReport is_saturated(const Family& feasible);

// n - min over feasible F of (dim A + dim F - 2 dim(A meet F)).
int rank_delta(const QDeltaMatroid& delta, SubspaceId a);
// max over feasible F of dim(F meet X) + dim(perp F meet Y); requires Y
// inside perp X (NotOrthogonal).
int birank(const QDeltaMatroid& delta, SubspaceId x, SubspaceId y);

// For a family of 2-dimensional subspaces D of F_q^4: every point lies in a
// member and every 3-dimensional subspace contains one. Asserts agreement
// with check_f1f2 on {0, E} plus D. Throws UnsupportedAmbient unless n = 4
// and WrongDimensions for members of other dimensions.
bool characterize_dim4(const Family& lines, unsigned threads = 0);

// The Desarguesian spread of F_q^4: the lines {(a, l a)} and {(0, a)} of
// F_{q^2}^2 written over the basis {1, w} of F_{q^2}, w the root of the
// default modulus. Prime q and n = 4 only (UnsupportedAmbient).
Family desarguesian_spread(const LatticePtr& lattice);

// {0, E} plus the spread.
QDeltaMatroid spread_delta(const AmbientPtr& ambient);
// All subspaces of dimension 0, 2, 4; n = 4 only.
QDeltaMatroid even_dims_delta(const AmbientPtr& ambient);

enum class FamilyKind { kBases, kIndependents, kSpanning };
QDeltaMatroid from_qmatroid(const QMatroid& m, FamilyKind kind);

// Members of `feasible` that lie in t, rewritten in the coordinates of t's
// canonical basis as subspaces of `target` = F_q^{dim t}.
Family coordinatize_family(const Family& feasible, SubspaceId t, const LatticePtr& target);

}  // namespace qdm
