#include "qdm/linalg.hpp"

#include <bit>
#include <utility>

#include "qdm/error.hpp"

namespace qdm {

MatGF::MatGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatGF MatGF::identity(FieldPtr field, std::size_t n) {
  MatGF m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

MatGF MatGF::from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
  MatGF m(std::move(field), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void MatGF::set(std::size_t r, std::size_t c, Elem v) {
  if (!field_->valid(v)) fail(Errc::kInvalidElement, "matrix entry outside the field");
  data_[r * cols_ + c] = v;
}

void MatGF::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) fail(Errc::kDimensionMismatch, "row length differs from column count");
  for (auto v : values) {
    if (!field_->valid(v)) fail(Errc::kInvalidElement, "matrix entry outside the field");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

MatGF MatGF::transposed() const {
  MatGF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  }
  return t;
}

bool MatGF::operator==(const MatGF& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_ &&
         same_field(field_, other.field_);
}

Echelon rref(const MatGF& m) {
  Echelon out{m, {}};
  MatGF& a = out.reduced;
  const Field& f = *m.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t pick = lead;
    while (pick < a.rows() && a(pick, c) == 0) ++pick;
    if (pick == a.rows()) continue;
    if (pick != lead) {
      auto r1 = a.row(pick), r2 = a.row(lead);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    const Elem scale = f.inv(a(lead, c));
    for (auto& v : a.row(lead)) v = f.mul(v, scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const Elem factor = a(r, c);
      if (factor == 0) continue;
      auto target = a.row(r);
      auto source = a.row(lead);
      for (std::size_t k = 0; k < a.cols(); ++k) target[k] = f.sub(target[k], f.mul(factor, source[k]));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank(const MatGF& m) { return rref(m).rank(); }

MatGF kernel(const MatGF& m) {
  const Field& f = *m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  MatGF basis(m.field(), 0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.append_row(v);
  }
  Echelon k = rref(basis);
  MatGF out(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < k.rank(); ++i) out.append_row(k.reduced.row(i));
  return out;
}

MatGF multiply(const MatGF& a, const MatGF& b) {
  if (a.cols() != b.rows()) fail(Errc::kDimensionMismatch, "matrix product shape mismatch");
  if (!same_field(a.field(), b.field())) fail(Errc::kAmbientMismatch, "matrix product over different fields");
  const Field& f = *a.field();
  MatGF c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, f.add(c(i, j), f.mul(aik, b(k, j))));
    }
  }
  return c;
}

MatGF vstack(const MatGF& top, const MatGF& bottom) {
  if (top.cols() != bottom.cols()) fail(Errc::kDimensionMismatch, "vstack column mismatch");
  if (!same_field(top.field(), bottom.field())) fail(Errc::kAmbientMismatch, "vstack over different fields");
  MatGF out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

std::optional<MatGF> inverse(const MatGF& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  MatGF aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  Echelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  MatGF inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, e.reduced(i, n + j));
  }
  return inv;
}

namespace gf2 {

std::vector<Row> rref(std::vector<Row> rows, int ncols) {
  std::size_t lead = 0;
  for (int c = 0; c < ncols && lead < rows.size(); ++c) {
    const Row bit = column_bit(ncols, c);
    std::size_t pick = lead;
    while (pick < rows.size() && !(rows[pick] & bit)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[lead]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead && (rows[r] & bit)) rows[r] ^= rows[lead];
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::vector<Row> kernel(std::span<const Row> rows, int ncols) {
  std::vector<Row> r = rref(std::vector<Row>(rows.begin(), rows.end()), ncols);
  std::vector<int> pivots;
  Row pivot_mask = 0;
  for (Row row : r) {
    const int pc = ncols - 1 - (std::bit_width(row) - 1);
    pivots.push_back(pc);
    pivot_mask |= column_bit(ncols, pc);
  }
  std::vector<Row> basis;
  for (int free = 0; free < ncols; ++free) {
    const Row fbit = column_bit(ncols, free);
    if (pivot_mask & fbit) continue;
    Row v = fbit;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] & fbit) v |= column_bit(ncols, pivots[i]);
    }
    basis.push_back(v);
  }
  return rref(std::move(basis), ncols);
}

Row reduce(std::span<const Row> basis, int ncols, Row v) {
  (void)ncols;
  for (Row b : basis) {
    const Row lead = std::bit_floor(b);
    if (v & lead) v ^= b;
  }
  return v;
}

}  // namespace gf2
}  // namespace qdm
