#pragma once

#include <span>
#include <string>
#include <vector>

#include "qdm/qg.hpp"

namespace qdm {

// F_q inside F_{q^m}, with F_{q^m} expanded over the polynomial basis
// 1, x, ..., x^(m-1) of its modulus. The base field must be prime.
class ExtFieldTower {
 public:
  // Throws InvalidField for a non-prime base.
  ExtFieldTower(FieldPtr base, FieldPtr top);
  static ExtFieldTower make(std::uint32_t p, std::uint32_t m);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& top() const { return top_; }
  std::uint32_t m() const { return top_->degree(); }

  // Coordinates of a over the polynomial basis, as base-field elements.
  std::vector<Elem> expand(Elem a) const;
  Elem recombine(std::span<const Elem> coords) const;
  // A matrix over F_q read as a matrix over F_{q^m}.
  MatGF lift(const MatGF& m) const;

 private:
  FieldPtr base_;
  FieldPtr top_;
};

// An F_{q^m}-linear code of length n with a full-rank k x n generator.
class RankMetricCode {
 public:
  // Throws InvalidDimension unless the generator over the top field has
  // full row rank.
  RankMetricCode(ExtFieldTower tower, MatGF generator);

  const ExtFieldTower& tower() const { return tower_; }
  int n() const { return static_cast<int>(generator_.cols()); }
  int k() const { return static_cast<int>(generator_.rows()); }
  const MatGF& generator() const { return generator_; }

 private:
  ExtFieldTower tower_;
  MatGF generator_;
};

// Row space over F_q of the m x n expansion of the word. Throws
// LengthMismatch.
Subspace rank_support(const RankMetricCode& code, std::span<const Elem> word);

// Dimension of {c in C : rank_support(c) inside J}.
int subcode_dim(const RankMetricCode& code, const Subspace& j);

// r(X) = k - subcode_dim(C, perp X) under the ambient form; cross-checked
// against code_rank_oracle (ValidationFailed on disagreement or if R1-R3
// break).
QMatroid code_qmatroid(const RankMetricCode& code, const AmbientPtr& ambient, unsigned threads = 0);

// Independent rank computation: r(X) = rank over F_{q^m} of G * Gram * A^T
// with the rows of A a basis of X.
std::vector<int> code_rank_oracle(const RankMetricCode& code, const Ambient& ambient);

// Dual under the standard inner product on F_{q^m}^n.
RankMetricCode dual_code(const RankMetricCode& code);

// Rows g, g^q, ..., g^(q^(k-1)) applied coordinatewise. The n entries of g
// must be linearly independent over F_q (PreconditionViolated).
RankMetricCode gabidulin(const ExtFieldTower& tower, std::span<const Elem> g, int k);

// Whether the row space of inner lies in that of outer.
bool is_subcode(const RankMetricCode& inner, const RankMetricCode& outer);

// (code_qmatroid(C1), code_qmatroid(C2)) with a strong certificate.
// Throws NotNested unless C2 is a subcode of C1; a failing strong-map check
// is InternalInconsistency.
QGPair nested_pair(const RankMetricCode& c1, const RankMetricCode& c2, const AmbientPtr& ambient,
                   unsigned threads = 0);

enum class Representability { kNone, kWeak, kStrong };

struct RepresentabilityReport {
  Representability level = Representability::kNone;
  std::string detail;
};

// kWeak: the upper and lower q-matroids of delta are the q-matroids of a
// nested pair C2 inside C1. kStrong: in addition the feasible family is the
// whole q-g family of that pair.
RepresentabilityReport representability(const QDeltaMatroid& delta, const RankMetricCode& c1,
                                        const RankMetricCode& c2, unsigned threads = 0);

}  // namespace qdm
