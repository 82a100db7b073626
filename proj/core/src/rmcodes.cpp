#include "qdm/rmcodes.hpp"

#include "qdm/error.hpp"
#include "qdm/parallel.hpp"

namespace qdm {

ExtFieldTower::ExtFieldTower(FieldPtr base, FieldPtr top) : base_(std::move(base)), top_(std::move(top)) {
  if (base_->degree() != 1) fail(Errc::kInvalidField, "the base field of a tower must be prime");
  if (top_->characteristic() != base_->characteristic()) {
    fail(Errc::kInvalidField, "tower fields have different characteristics");
  }
}

ExtFieldTower ExtFieldTower::make(std::uint32_t p, std::uint32_t m) {
  return ExtFieldTower(Field::make(p, 1), Field::make(p, m));
}

std::vector<Elem> ExtFieldTower::expand(Elem a) const {
  if (!top_->valid(a)) fail(Errc::kInvalidElement, "element outside the extension field");
  const auto c = top_->coeffs(a);
  return {c.begin(), c.end()};
}

Elem ExtFieldTower::recombine(std::span<const Elem> coords) const {
  if (coords.size() != m()) fail(Errc::kLengthMismatch, "expected m coordinates");
  for (Elem c : coords) {
    if (!base_->valid(c)) fail(Errc::kInvalidElement, "coordinate outside the base field");
  }
  const std::vector<std::uint32_t> c(coords.begin(), coords.end());
  return top_->from_coeffs(c);
}

MatGF ExtFieldTower::lift(const MatGF& m) const {
  if (!same_field(m.field(), base_)) fail(Errc::kAmbientMismatch, "matrix is not over the base field");
  MatGF out(top_, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c));
  }
  return out;
}

RankMetricCode::RankMetricCode(ExtFieldTower tower, MatGF generator)
    : tower_(std::move(tower)), generator_(std::move(generator)) {
  if (!same_field(generator_.field(), tower_.top())) {
    fail(Errc::kInvalidField, "generator must be over the extension field");
  }
  if (rank(generator_) != generator_.rows()) fail(Errc::kInvalidDimension, "generator matrix is not of full rank");
}

Subspace rank_support(const RankMetricCode& code, std::span<const Elem> word) {
  if (word.size() != static_cast<std::size_t>(code.n())) fail(Errc::kLengthMismatch, "codeword length differs from n");
  const ExtFieldTower& t = code.tower();
  MatGF expansion(t.base(), t.m(), word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    const auto coords = t.expand(word[j]);
    for (std::size_t i = 0; i < coords.size(); ++i) expansion.set(i, j, coords[i]);
  }
  return Subspace::span(t.base(), code.n(), expansion);
}

int subcode_dim(const RankMetricCode& code, const Subspace& j) {
  const ExtFieldTower& t = code.tower();
  if (!same_field(j.field(), t.base()) || j.ambient_dim() != code.n()) {
    fail(Errc::kAmbientMismatch, "subspace is not in F_q^n for this code");
  }
  // supp(c) inside J iff every expansion row is orthogonal to J's standard
  // complement, i.e. c * H^T = 0 for H a basis of that complement.
  const MatGF h = kernel(j.basis());
  const MatGF constraints = multiply(code.generator(), t.lift(h).transposed());
  return code.k() - static_cast<int>(rank(constraints));
}

std::vector<int> code_rank_oracle(const RankMetricCode& code, const Ambient& ambient) {
  const ExtFieldTower& t = code.tower();
  const Lattice& lat = ambient.lattice();
  const MatGF gram_t = ambient.form().gram().transposed();
  std::vector<int> ranks(lat.size());
  for (SubspaceId x : lat.all()) {
    const MatGF a = multiply(lat.subspace(x).basis(), gram_t);
    ranks[x] = static_cast<int>(rank(multiply(code.generator(), t.lift(a).transposed())));
  }
  return ranks;
}

QMatroid code_qmatroid(const RankMetricCode& code, const AmbientPtr& ambient, unsigned threads) {
  const Lattice& lat = ambient->lattice();
  if (!same_field(lat.field(), code.tower().base()) || lat.n() != code.n()) {
    fail(Errc::kAmbientMismatch, "lattice does not match the code's base field and length");
  }
  std::vector<int> ranks(lat.size());
  parallel_for(lat.size(), threads, [&](std::size_t i) {
    const auto x = static_cast<SubspaceId>(i);
    ranks[x] = code.k() - subcode_dim(code, lat.subspace(ambient->perp(x)));
  });
  const std::vector<int> oracle = code_rank_oracle(code, *ambient);
  for (SubspaceId x : lat.all()) {
    if (ranks[x] != oracle[x]) {
      fail(Errc::kValidationFailed, "support rank " + std::to_string(ranks[x]) + " and matrix rank " +
                                        std::to_string(oracle[x]) + " disagree at <" + lat.render(x) + ">");
    }
  }
  AxiomReport report = validate_ranks(lat, ranks, threads);
  if (!report) fail(Errc::kValidationFailed, "code rank function " + describe(report, lat));
  return QMatroid::unchecked(ambient, std::move(ranks));
}

RankMetricCode dual_code(const RankMetricCode& code) {
  return RankMetricCode(code.tower(), kernel(code.generator()));
}

RankMetricCode gabidulin(const ExtFieldTower& tower, std::span<const Elem> g, int k) {
  const std::size_t n = g.size();
  if (k < 0 || static_cast<std::size_t>(k) > n) fail(Errc::kInvalidDimension, "Gabidulin dimension out of range");
  MatGF expansion(tower.base(), tower.m(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto coords = tower.expand(g[j]);
    for (std::size_t i = 0; i < coords.size(); ++i) expansion.set(i, j, coords[i]);
  }
  if (rank(expansion) != n) fail(Errc::kPreconditionViolated, "evaluation points are not independent over F_q");
  const Field& top = *tower.top();
  const std::uint64_t q = tower.base()->order();
  MatGF gen(tower.top(), static_cast<std::size_t>(k), n);
  std::uint64_t frob = 1;
  for (int i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) gen.set(static_cast<std::size_t>(i), j, top.pow(g[j], frob));
    frob *= q;
  }
  return RankMetricCode(tower, std::move(gen));
}

bool is_subcode(const RankMetricCode& inner, const RankMetricCode& outer) {
  if (!same_field(inner.tower().top(), outer.tower().top()) || inner.n() != outer.n()) {
    fail(Errc::kAmbientMismatch, "codes over different fields or lengths");
  }
  return rank(vstack(outer.generator(), inner.generator())) == static_cast<std::size_t>(outer.k());
}

QGPair nested_pair(const RankMetricCode& c1, const RankMetricCode& c2, const AmbientPtr& ambient, unsigned threads) {
  if (!is_subcode(c2, c1)) fail(Errc::kNotNested, "second code is not contained in the first");
  QMatroid m1 = code_qmatroid(c1, ambient, threads);
  QMatroid m2 = code_qmatroid(c2, ambient, threads);
  try {
    return QGPair::make(std::move(m1), std::move(m2), Certificate::kStrong, threads);
  } catch (const Error& e) {
    if (e.code() != Errc::kCertificateMissing) throw;
    fail(Errc::kInternalInconsistency, std::string("nested codes without a strong map: ") + e.what());
  }
}

RepresentabilityReport representability(const QDeltaMatroid& delta, const RankMetricCode& c1,
                                        const RankMetricCode& c2, unsigned threads) {
  if (!is_subcode(c2, c1)) return {Representability::kNone, "codes are not nested"};
  const UpperLower ul = upper_lower(delta, threads);
  const QMatroid m1 = code_qmatroid(c1, delta.ambient_ptr(), threads);
  const QMatroid m2 = code_qmatroid(c2, delta.ambient_ptr(), threads);
  if (!(ul.upper == m1)) return {Representability::kNone, "upper q-matroid differs from the first code's"};
  if (!(ul.lower == m2)) return {Representability::kNone, "lower q-matroid differs from the second code's"};
  const QGPair pair = nested_pair(c1, c2, delta.ambient_ptr(), threads);
  if (qg_family(pair, threads).feasible() == delta.feasible()) {
    return {Representability::kStrong, "feasible family is the q-g family of the nested pair"};
  }
  return {Representability::kWeak, "upper and lower q-matroids come from the nested pair"};
}

}  // namespace qdm
