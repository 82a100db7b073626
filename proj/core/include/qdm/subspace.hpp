#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdm/gf.hpp"
#include "qdm/linalg.hpp"

namespace qdm {

// A vector of F_q^n packed as a base-q integer with coordinate 0 as the most
// significant digit. Integer order is lexicographic order on coordinates.
// For q = 2 this coincides with the gf2::Row bit layout.
using PackedVec = std::uint64_t;

class VectorCodec {
 public:
  VectorCodec(std::uint32_t q, int n);

  std::uint32_t q() const { return q_; }
  int n() const { return n_; }

  PackedVec encode(std::span<const Elem> coords) const;
  std::vector<Elem> decode(PackedVec v) const;
  Elem digit(PackedVec v, int j) const;

 private:
  std::uint32_t q_;
  int n_;
  std::vector<PackedVec> place_;  // q^(n-1-j)
};

// Largest n for which F_q^n vectors fit a PackedVec.
int max_packed_dim(std::uint32_t q);

// Renders a vector as one digit per coordinate ("1100"); requires q <= 10.
std::string render_vector(std::span<const Elem> coords);

// A subspace of F_q^n held by its canonical basis: the nonzero rows of the
// reduced row echelon form, leftmost pivot first. Two subspaces are equal
// iff their canonical rows are identical.
class Subspace {
 public:
  Subspace() = default;
  // Zero subspace of F_q^n.
  Subspace(FieldPtr field, int n);

  static Subspace full(FieldPtr field, int n);
  // Span of the rows; throws DimensionMismatch if cols != n.
  static Subspace span(FieldPtr field, int n, const MatGF& vectors);
  static Subspace span_packed(FieldPtr field, int n, std::vector<PackedVec> vectors);
  // Trusts that rows are already canonical.
  static Subspace from_canonical(FieldPtr field, int n, std::vector<PackedVec> rows);

  const FieldPtr& field() const { return field_; }
  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<PackedVec>& packed_rows() const { return rows_; }

  MatGF basis() const;
  bool contains_vector(PackedVec v) const;

  // Space-separated digit strings, "0" for the zero subspace.
  std::string to_string() const;

  bool operator==(const Subspace& other) const;
  std::strong_ordering operator<=>(const Subspace& other) const;

 private:
  FieldPtr field_;
  int n_ = 0;
  std::vector<PackedVec> rows_;
};

Subspace canonicalize(FieldPtr field, int n, const MatGF& vectors);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// True iff inner is a subspace of outer.
bool contains(const Subspace& outer, const Subspace& inner);

// A nondegenerate reflexive bilinear form (v, w) -> v G w^T on F_q^n.
// Reflexive means symmetric or alternating; with it, perp is an
// inclusion-reversing involution on the subspace lattice.
class BilinearForm {
 public:
  static BilinearForm identity(FieldPtr field, int n);
  // Throws SingularForm unless gram is square, invertible and reflexive.
  explicit BilinearForm(MatGF gram);

  const MatGF& gram() const { return gram_; }
  int n() const { return static_cast<int>(gram_.rows()); }
  bool is_identity() const;

  Elem evaluate(std::span<const Elem> v, std::span<const Elem> w) const;

  bool operator==(const BilinearForm& other) const { return gram_ == other.gram_; }

 private:
  MatGF gram_;
};

// {v : v G a^T = 0 for every a in the subspace}.
Subspace perp(const Subspace& a, const BilinearForm& form);

// All k-dimensional subspaces of F_q^n ordered lexicographically by their
// canonical rows; count is the Gaussian binomial [n choose k]_q.
std::vector<Subspace> enumerate_subspaces(FieldPtr field, int n, int k);

enum class Neighbor { kCodim1Inside, kCoverAbove };

// kCodim1Inside: the hyperplanes of a. kCoverAbove: every b with a < b <= within
// and dim b = dim a + 1. Deterministic order.
std::vector<Subspace> interval_neighbors(const Subspace& a, Neighbor direction, const Subspace& within);

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

// Parses one digit-string vector ("1100") over GF(q).
std::vector<Elem> parse_vector(std::string_view text, std::uint32_t q, int n);

}  // namespace qdm
