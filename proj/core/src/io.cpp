#include "qdm/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "qdm/error.hpp"

namespace qdm {
namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-blank line with comments stripped, split on whitespace.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream split(line);
      tokens.clear();
      for (std::string t; split >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::kParseError, source_ + ":" + std::to_string(line_no_) + ": " + what);
  }

  template <class Fn>
  auto guarded(Fn&& fn) const {
    try {
      return fn();
    } catch (const Error& e) {
      error(e.message());
    }
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

std::uint32_t parse_count(const LineReader& r, const std::string& token, const char* what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(token, &used);
  } catch (const std::exception&) {
    r.error(std::string("expected ") + what + ", got '" + token + "'");
  }
  if (used != token.size()) r.error(std::string("expected ") + what + ", got '" + token + "'");
  return static_cast<std::uint32_t>(v);
}

FieldPtr text_field(const LineReader& r, std::uint32_t q) {
  if (q < 2 || q > 9) r.error("q = " + std::to_string(q) + " is outside the supported range 2..9");
  return r.guarded([&] { return Field::of_order(q); });
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::kParseError, "cannot open '" + path + "'");
  return in;
}

}  // namespace

FamilyFile parse_family(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> tokens;
  if (!r.next(tokens)) r.error("missing header 'q n'");
  if (tokens.size() != 2) r.error("header must be 'q n'");
  FamilyFile file;
  file.q = parse_count(r, tokens[0], "q");
  file.n = static_cast<int>(parse_count(r, tokens[1], "n"));
  const FieldPtr field = text_field(r, file.q);
  if (file.n < 1) r.error("n must be positive");
  std::set<Subspace> seen;
  while (r.next(tokens)) {
    Subspace s;
    if (tokens.size() == 1 && tokens[0] == "0") {
      s = Subspace(field, file.n);
    } else if (tokens.size() == 1 && tokens[0] == "E") {
      s = Subspace::full(field, file.n);
    } else {
      MatGF rows(field, 0, static_cast<std::size_t>(file.n));
      for (const auto& t : tokens) {
        const auto v = r.guarded([&] { return parse_vector(t, file.q, file.n); });
        rows.append_row(v);
      }
      s = canonicalize(field, file.n, rows);
    }
    if (!seen.insert(s).second) r.error("duplicate subspace <" + s.to_string() + ">");
    file.members.push_back(std::move(s));
  }
  return file;
}

FamilyFile read_family_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_family(in, path);
}

Family to_family(const FamilyFile& file, const LatticePtr& lattice) {
  if (lattice->q() != file.q || lattice->n() != file.n) {
    fail(Errc::kAmbientMismatch, "family file is over F_" + std::to_string(file.q) + "^" + std::to_string(file.n));
  }
  Family f(lattice);
  for (const Subspace& s : file.members) f.insert(lattice->id_of(s));
  return f;
}

void write_family(std::ostream& out, const Family& family) {
  const Lattice& lat = family.lattice();
  out << lat.q() << ' ' << lat.n() << '\n';
  for (SubspaceId id : family.ids()) out << lat.render(id) << '\n';
}

RankMetricCode parse_code(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> tokens;
  if (!r.next(tokens) || tokens.size() != 4) r.error("header must be 'q m n k'");
  const std::uint32_t q = parse_count(r, tokens[0], "q");
  const std::uint32_t m = parse_count(r, tokens[1], "m");
  const std::uint32_t n = parse_count(r, tokens[2], "n");
  const std::uint32_t k = parse_count(r, tokens[3], "k");
  const FieldPtr base = text_field(r, q);
  if (base->degree() != 1) r.error("code files need a prime q");
  if (m < 1) r.error("m must be positive");
  const ExtFieldTower tower = r.guarded([&] { return ExtFieldTower(base, Field::make(q, m)); });
  MatGF gen(tower.top(), 0, n);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!r.next(tokens)) r.error("expected " + std::to_string(k) + " generator rows");
    if (tokens.size() != n) r.error("row must have " + std::to_string(n) + " entries");
    std::vector<Elem> row;
    for (const auto& t : tokens) {
      const auto coords = r.guarded([&] { return parse_vector(t, q, static_cast<int>(m)); });
      row.push_back(tower.recombine(coords));
    }
    gen.append_row(row);
  }
  if (r.next(tokens)) r.error("unexpected content after the generator rows");
  return r.guarded([&] { return RankMetricCode(tower, std::move(gen)); });
}

RankMetricCode read_code_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_code(in, path);
}

BilinearForm parse_gram(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> tokens;
  if (!r.next(tokens) || tokens.size() != 2) r.error("header must be 'q n'");
  const std::uint32_t q = parse_count(r, tokens[0], "q");
  const int n = static_cast<int>(parse_count(r, tokens[1], "n"));
  const FieldPtr field = text_field(r, q);
  MatGF gram(field, 0, static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!r.next(tokens)) r.error("expected " + std::to_string(n) + " rows");
    std::string joined;
    for (const auto& t : tokens) joined += t;
    gram.append_row(r.guarded([&] { return parse_vector(joined, q, n); }));
  }
  if (r.next(tokens)) r.error("unexpected content after the Gram rows");
  return r.guarded([&] { return BilinearForm(std::move(gram)); });
}

BilinearForm read_gram_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_gram(in, path);
}

void write_rank_table(std::ostream& out, const QMatroid& m) {
  const Lattice& lat = m.lattice();
  for (SubspaceId id : lat.all()) {
    out << id << ' ' << lat.dim(id) << ' ' << m.rank(id) << ' ' << lat.render(id) << '\n';
  }
}

}  // namespace qdm
