#include "qdm/subspace.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "qdm/error.hpp"

namespace qdm {
namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !same_field(a.field(), b.field())) {
    fail(Errc::kAmbientMismatch, "subspaces live in different ambient spaces");
  }
}

MatGF to_matrix(const FieldPtr& field, int n, std::span<const PackedVec> rows) {
  VectorCodec codec(field->order(), n);
  MatGF m(field, 0, static_cast<std::size_t>(n));
  for (PackedVec r : rows) m.append_row(codec.decode(r));
  return m;
}

std::vector<PackedVec> canonical_rows(const FieldPtr& field, int n, std::vector<PackedVec> rows) {
  if (field->order() == 2) return gf2::rref(std::move(rows), n);
  Echelon e = rref(to_matrix(field, n, rows));
  VectorCodec codec(field->order(), n);
  std::vector<PackedVec> out;
  out.reserve(e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(codec.encode(e.reduced.row(i)));
  return out;
}

std::vector<PackedVec> kernel_rows(const FieldPtr& field, int n, std::span<const PackedVec> rows) {
  if (field->order() == 2) return gf2::kernel(rows, n);
  MatGF k = kernel(to_matrix(field, n, rows));
  VectorCodec codec(field->order(), n);
  std::vector<PackedVec> out;
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(codec.encode(k.row(i)));
  return out;
}

}  // namespace

int max_packed_dim(std::uint32_t q) {
  int n = 0;
  std::uint64_t total = 1;
  while (total <= (std::uint64_t{1} << 63) / q) {
    total *= q;
    ++n;
  }
  return n;
}

VectorCodec::VectorCodec(std::uint32_t q, int n) : q_(q), n_(n), place_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > max_packed_dim(q)) fail(Errc::kCapExceeded, "ambient dimension too large to pack");
  PackedVec scale = 1;
  for (int j = n - 1; j >= 0; --j) {
    place_[static_cast<std::size_t>(j)] = scale;
    scale *= q;
  }
}

PackedVec VectorCodec::encode(std::span<const Elem> coords) const {
  if (coords.size() != static_cast<std::size_t>(n_)) fail(Errc::kDimensionMismatch, "vector length differs from n");
  PackedVec v = 0;
  for (int j = 0; j < n_; ++j) {
    if (coords[j] >= q_) fail(Errc::kInvalidElement, "coordinate outside the field");
    v += coords[j] * place_[static_cast<std::size_t>(j)];
  }
  return v;
}

std::vector<Elem> VectorCodec::decode(PackedVec v) const {
  std::vector<Elem> out(static_cast<std::size_t>(n_));
  for (int j = n_ - 1; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = static_cast<Elem>(v % q_);
    v /= q_;
  }
  return out;
}

Elem VectorCodec::digit(PackedVec v, int j) const {
  return static_cast<Elem>((v / place_[static_cast<std::size_t>(j)]) % q_);
}

std::string render_vector(std::span<const Elem> coords) {
  std::string s;
  s.reserve(coords.size());
  for (Elem c : coords) {
    if (c > 9) fail(Errc::kInvalidElement, "digit rendering needs q <= 10");
    s.push_back(static_cast<char>('0' + c));
  }
  return s;
}

std::vector<Elem> parse_vector(std::string_view text, std::uint32_t q, int n) {
  if (text.size() != static_cast<std::size_t>(n)) {
    fail(Errc::kParseError, "vector '" + std::string(text) + "' does not have " + std::to_string(n) + " coordinates");
  }
  std::vector<Elem> out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '9' || static_cast<std::uint32_t>(ch - '0') >= q) {
      fail(Errc::kParseError, "digit '" + std::string(1, ch) + "' is not an element of GF(" + std::to_string(q) + ")");
    }
    out.push_back(static_cast<Elem>(ch - '0'));
  }
  return out;
}

Subspace::Subspace(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  VectorCodec check(field_->order(), n);
  (void)check;
}

Subspace Subspace::full(FieldPtr field, int n) {
  VectorCodec codec(field->order(), n);
  std::vector<PackedVec> rows;
  std::vector<Elem> e(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    e[static_cast<std::size_t>(j)] = 1;
    rows.push_back(codec.encode(e));
    e[static_cast<std::size_t>(j)] = 0;
  }
  return from_canonical(std::move(field), n, std::move(rows));
}

Subspace Subspace::span(FieldPtr field, int n, const MatGF& vectors) {
  return canonicalize(std::move(field), n, vectors);
}

Subspace Subspace::span_packed(FieldPtr field, int n, std::vector<PackedVec> vectors) {
  Subspace s(field, n);
  s.rows_ = canonical_rows(s.field_, n, std::move(vectors));
  return s;
}

Subspace Subspace::from_canonical(FieldPtr field, int n, std::vector<PackedVec> rows) {
  Subspace s(std::move(field), n);
  s.rows_ = std::move(rows);
  return s;
}

MatGF Subspace::basis() const { return to_matrix(field_, n_, rows_); }

bool Subspace::contains_vector(PackedVec v) const {
  if (field_->order() == 2) return gf2::reduce(rows_, n_, v) == 0;
  std::vector<PackedVec> rows = rows_;
  rows.push_back(v);
  return canonical_rows(field_, n_, std::move(rows)).size() == rows_.size();
}

std::string Subspace::to_string() const {
  if (rows_.empty()) return "0";
  VectorCodec codec(field_->order(), n_);
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out.push_back(' ');
    out += render_vector(codec.decode(rows_[i]));
  }
  return out;
}

bool Subspace::operator==(const Subspace& other) const {
  return n_ == other.n_ && rows_ == other.rows_ && same_field(field_, other.field_);
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = rows_.size() <=> other.rows_.size(); c != 0) return c;
  return rows_ <=> other.rows_;
}

Subspace canonicalize(FieldPtr field, int n, const MatGF& vectors) {
  if (vectors.cols() != static_cast<std::size_t>(n)) {
    fail(Errc::kDimensionMismatch, "vectors have " + std::to_string(vectors.cols()) + " columns, expected " + std::to_string(n));
  }
  if (!same_field(field, vectors.field()) && vectors.rows() > 0) {
    fail(Errc::kAmbientMismatch, "vectors are over a different field");
  }
  VectorCodec codec(field->order(), n);
  std::vector<PackedVec> rows;
  rows.reserve(vectors.rows());
  for (std::size_t i = 0; i < vectors.rows(); ++i) rows.push_back(codec.encode(vectors.row(i)));
  return Subspace::span_packed(std::move(field), n, std::move(rows));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  std::vector<PackedVec> rows = a.packed_rows();
  rows.insert(rows.end(), b.packed_rows().begin(), b.packed_rows().end());
  return Subspace::span_packed(a.field(), a.ambient_dim(), std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  // a ∩ b is the common kernel of the two parity-check systems.
  const int n = a.ambient_dim();
  std::vector<PackedVec> checks = kernel_rows(a.field(), n, a.packed_rows());
  std::vector<PackedVec> kb = kernel_rows(a.field(), n, b.packed_rows());
  checks.insert(checks.end(), kb.begin(), kb.end());
  return Subspace::from_canonical(a.field(), n, kernel_rows(a.field(), n, checks));
}

bool contains(const Subspace& outer, const Subspace& inner) {
  check_same_ambient(outer, inner);
  if (inner.dim() > outer.dim()) return false;
  if (outer.field()->order() == 2) {
    for (PackedVec v : inner.packed_rows()) {
      if (gf2::reduce(outer.packed_rows(), outer.ambient_dim(), v) != 0) return false;
    }
    return true;
  }
  return sum(outer, inner).dim() == outer.dim();
}

BilinearForm BilinearForm::identity(FieldPtr field, int n) {
  return BilinearForm(MatGF::identity(std::move(field), static_cast<std::size_t>(n)));
}

BilinearForm::BilinearForm(MatGF gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) fail(Errc::kSingularForm, "Gram matrix must be square");
  if (!inverse(gram_)) fail(Errc::kSingularForm, "Gram matrix is not invertible");
  const Field& f = *gram_.field();
  bool symmetric = true, alternating = true;
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) != 0) alternating = false;
    for (std::size_t j = 0; j < gram_.cols(); ++j) {
      if (gram_(i, j) != gram_(j, i)) symmetric = false;
      if (gram_(i, j) != f.neg(gram_(j, i))) alternating = false;
    }
  }
  if (!symmetric && !alternating) fail(Errc::kSingularForm, "Gram matrix is neither symmetric nor alternating");
}

bool BilinearForm::is_identity() const {
  return gram_ == MatGF::identity(gram_.field(), gram_.rows());
}

Elem BilinearForm::evaluate(std::span<const Elem> v, std::span<const Elem> w) const {
  const Field& f = *gram_.field();
  Elem acc = 0;
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < gram_.cols(); ++j) acc = f.add(acc, f.mul(v[i], f.mul(gram_(i, j), w[j])));
  }
  return acc;
}

Subspace perp(const Subspace& a, const BilinearForm& form) {
  if (form.n() != a.ambient_dim() || !same_field(form.gram().field(), a.field())) {
    fail(Errc::kAmbientMismatch, "form and subspace live in different ambient spaces");
  }
  const int n = a.ambient_dim();
  if (a.dim() == 0) return Subspace::full(a.field(), n);
  // v G a^T = v . (a G^T), so the constraints are the rows a G^T.
  MatGF constraints = multiply(a.basis(), form.gram().transposed());
  VectorCodec codec(a.field()->order(), n);
  std::vector<PackedVec> rows;
  for (std::size_t i = 0; i < constraints.rows(); ++i) rows.push_back(codec.encode(constraints.row(i)));
  return Subspace::from_canonical(a.field(), n, kernel_rows(a.field(), n, rows));
}

std::vector<Subspace> enumerate_subspaces(FieldPtr field, int n, int k) {
  if (k < 0 || k > n) fail(Errc::kInvalidDimension, "subspace dimension " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  const std::uint32_t q = field->order();
  VectorCodec codec(q, n);
  std::vector<Subspace> out;

  std::vector<int> pivots(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
  while (true) {
    // Free cells: row i, columns right of its pivot that hold no pivot.
    std::vector<std::pair<int, int>> cells;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int i = 0; i < k; ++i) {
      for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j) {
        if (!is_pivot[static_cast<std::size_t>(j)]) cells.emplace_back(i, j);
      }
    }
    std::vector<Elem> assignment(cells.size(), 0);
    while (true) {
      std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(k), std::vector<Elem>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        rows[static_cast<std::size_t>(cells[c].first)][static_cast<std::size_t>(cells[c].second)] = assignment[c];
      }
      std::vector<PackedVec> packed;
      packed.reserve(rows.size());
      for (const auto& r : rows) packed.push_back(codec.encode(r));
      out.push_back(Subspace::from_canonical(field, n, std::move(packed)));

      std::size_t pos = 0;
      while (pos < assignment.size() && ++assignment[pos] == q) assignment[pos++] = 0;
      if (pos == assignment.size()) break;
    }

    // Next pivot combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> interval_neighbors(const Subspace& a, Neighbor direction, const Subspace& within) {
  check_same_ambient(a, within);
  if (!contains(within, a)) fail(Errc::kNotContained, "subspace is not contained in the bounding space");
  const FieldPtr& field = a.field();
  const int n = a.ambient_dim();
  std::vector<Subspace> out;
  if (direction == Neighbor::kCodim1Inside) {
    if (a.dim() == 0) return out;
    const int k = a.dim();
    VectorCodec inner(field->order(), k);
    MatGF basis = a.basis();
    for (const Subspace& coeff : enumerate_subspaces(field, k, k - 1)) {
      MatGF c = coeff.basis();
      out.push_back(canonicalize(field, n, multiply(c, basis)));
    }
  } else {
    std::set<Subspace> seen;
    for (const Subspace& x : enumerate_subspaces(field, n, 1)) {
      if (!contains(within, x) || contains(a, x)) continue;
      seen.insert(sum(a, x));
    }
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  // Pascal-type recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t qk = 1;
    for (int j = 1; j <= std::min(m, k); ++j) qk *= q;
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + qk * row[static_cast<std::size_t>(j)];
      qk /= q;
    }
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace qdm
