#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qdm/gf.hpp"

namespace qdm {

// Dense row-major matrix over a finite field.
class MatGF {
 public:
  MatGF() = default;
  MatGF(FieldPtr field, std::size_t rows, std::size_t cols);

  static MatGF identity(FieldPtr field, std::size_t n);
  static MatGF from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v);

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  MatGF transposed() const;

  bool operator==(const MatGF& other) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  MatGF reduced;                     // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;   // strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form. Pivot choice: leftmost column with a nonzero
// entry among the remaining rows, topmost such row.
Echelon rref(const MatGF& m);
std::size_t rank(const MatGF& m);

// Basis of {x : m * x^T = 0}, in reduced row echelon form.
MatGF kernel(const MatGF& m);

MatGF multiply(const MatGF& a, const MatGF& b);
MatGF vstack(const MatGF& top, const MatGF& bottom);
std::optional<MatGF> inverse(const MatGF& m);

// Bit-packed GF(2) rows: column j of an n-column matrix is bit (n - 1 - j),
// so comparing rows as integers compares them lexicographically.
namespace gf2 {

using Row = std::uint64_t;
inline constexpr int kMaxCols = 64;

inline Row column_bit(int n, int j) { return Row{1} << (n - 1 - j); }

// Reduced echelon basis of the row space, zero rows dropped, rows ordered
// by pivot (leftmost pivot first).
std::vector<Row> rref(std::vector<Row> rows, int ncols);

// Reduced echelon basis of {x : r . x = 0 for every row r}.
std::vector<Row> kernel(std::span<const Row> rows, int ncols);

// Reduces v against an rref basis; zero means v lies in the row space.
Row reduce(std::span<const Row> basis, int ncols, Row v);

}  // namespace gf2
}  // namespace qdm
