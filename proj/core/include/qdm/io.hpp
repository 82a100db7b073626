#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdm/family.hpp"
#include "qdm/qmatroid.hpp"
#include "qdm/rmcodes.hpp"

namespace qdm {

// Text formats. Vectors are digit strings over GF(q), one digit per
// coordinate (q <= 9), digits being the integer codes of field elements.
// '#' starts a comment; blank lines are ignored. All parse failures throw
// ParseError naming the source and line.

// Family file: a header `q n`, then one subspace per line as space-separated
// vectors; `0` is the zero subspace and `E` the whole space.
struct FamilyFile {
  std::uint32_t q = 0;
  int n = 0;
  std::vector<Subspace> members;  // canonical, file order, no duplicates
};

FamilyFile parse_family(std::istream& in, const std::string& source = "<input>");
FamilyFile read_family_file(const std::string& path);
Family to_family(const FamilyFile& file, const LatticePtr& lattice);
void write_family(std::ostream& out, const Family& family);

// Code file: a header `q m n k` with q prime, then k rows of n entries; each
// entry is a length-m digit string of F_q coordinates, constant term first.
RankMetricCode parse_code(std::istream& in, const std::string& source = "<input>");
RankMetricCode read_code_file(const std::string& path);

// Gram file: a header `q n`, then n rows of n digits.
BilinearForm parse_gram(std::istream& in, const std::string& source = "<input>");
BilinearForm read_gram_file(const std::string& path);

// One line per subspace: `<id> <dim> <rank> <basis>`.
void write_rank_table(std::ostream& out, const QMatroid& m);

}  // namespace qdm
