#include "qdm/tools/corpus.hpp"

#include "qdm/error.hpp"

namespace qdm::tools {

SubspaceId unit_span(const Lattice& lattice, std::initializer_list<int> units) {
  const VectorCodec codec(lattice.q(), lattice.n());
  std::vector<PackedVec> vectors;
  for (int i : units) {
    if (i < 1 || i > lattice.n()) fail(Errc::kInvalidDimension, "unit index out of range");
    std::vector<Elem> coords(static_cast<std::size_t>(lattice.n()), 0);
    coords[static_cast<std::size_t>(i - 1)] = 1;
    vectors.push_back(codec.encode(coords));
  }
  return lattice.span_of(std::move(vectors));
}

CounterexamplePair counterexample_pair(const AmbientPtr& ambient, unsigned threads) {
  const Lattice& lat = ambient->lattice();
  if (lat.q() != 2 || lat.n() != 4) fail(Errc::kUnsupportedAmbient, "the counterexample lives on F_2^4");
  const SubspaceId e123 = unit_span(lat, {1, 2, 3});
  const SubspaceId e12 = unit_span(lat, {1, 2});
  const SubspaceId e34 = unit_span(lat, {3, 4});
  Family upper(ambient->lattice_ptr());
  Family lower(ambient->lattice_ptr());
  for (SubspaceId id : lat.of_dim(3)) {
    if (id != e123) upper.insert(id);
  }
  for (SubspaceId id : lat.of_dim(2)) {
    if (id != e12 && id != e34) lower.insert(id);
  }
  return {QMatroid::from_bases(ambient, upper, threads), QMatroid::from_bases(ambient, lower, threads)};
}

ExtFieldTower gabidulin_tower() { return ExtFieldTower::make(2, 4); }

RankMetricCode gabidulin_code(int k) {
  const ExtFieldTower tower = gabidulin_tower();
  const Field& top = *tower.top();
  const Elem w = top.root();
  const std::vector<Elem> points{1, w, top.mul(w, w), top.pow(w, 3)};
  return gabidulin(tower, points, k);
}

BilinearForm exchange_form() {
  const FieldPtr f2 = Field::make(2);
  MatGF gram(f2, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) gram.set(i, 3 - i, 1);
  return BilinearForm(std::move(gram));
}

namespace {

std::vector<Named<RankMetricCode>> corpus_codes() {
  const ExtFieldTower tower = gabidulin_tower();
  const Elem w = tower.top()->root();
  std::vector<Named<RankMetricCode>> codes;
  for (int k = 1; k <= 3; ++k) codes.push_back({"gabidulin-" + std::to_string(k), gabidulin_code(k)});
  codes.push_back({"sparse-1", RankMetricCode(tower, MatGF::from_rows(tower.top(), 4, {{1, 1, 0, 0}}))});
  codes.push_back(
      {"sparse-2", RankMetricCode(tower, MatGF::from_rows(tower.top(), 4, {{1, w, 0, 0}, {0, 0, 1, 1}}))});
  codes.push_back({"sparse-3", RankMetricCode(tower, MatGF::from_rows(tower.top(), 4,
                                                                      {{1, 0, 0, 0}, {0, 1, w, 0}, {0, 0, 0, 1}}))});
  return codes;
}

}  // namespace

Corpus build_corpus(const AmbientPtr& ambient, unsigned threads) {
  const Lattice& lat = ambient->lattice();
  if (lat.q() != 2 || lat.n() != 4) fail(Errc::kUnsupportedAmbient, "the corpus lives on F_2^4");
  Corpus c;
  c.ambient = ambient;
  c.codes = corpus_codes();

  for (int k = 0; k <= 4; ++k) c.qmatroids.push_back({"U(" + std::to_string(k) + ",4)", QMatroid::uniform(ambient, k)});
  CounterexamplePair ce = counterexample_pair(ambient, threads);
  c.qmatroids.push_back({"counterexample-upper", ce.upper});
  c.qmatroids.push_back({"counterexample-lower", ce.lower});
  for (const auto& code : c.codes) {
    c.qmatroids.push_back({"code:" + code.name, code_qmatroid(code.value, ambient, threads)});
  }

  const QMatroid& free = c.qmatroids[4].value;
  const QMatroid& zero = c.qmatroids[0].value;
  for (int k = 0; k <= 4; ++k) {
    const QMatroid& u = c.qmatroids[static_cast<std::size_t>(k)].value;
    c.strong_pairs.push_back({"identity " + c.qmatroids[static_cast<std::size_t>(k)].name,
                              QGPair::make(u, u, Certificate::kStrong, threads)});
  }
  for (const auto& m : c.qmatroids) {
    if (m.name.rfind("U(", 0) == 0) continue;
    c.strong_pairs.push_back({"U(4,4) -> " + m.name, QGPair::make(free, m.value, Certificate::kStrong, threads)});
    c.strong_pairs.push_back({m.name + " -> U(0,4)", QGPair::make(m.value, zero, Certificate::kStrong, threads)});
  }
  for (int k = 2; k <= 3; ++k) {
    c.strong_pairs.push_back({"nested gabidulin " + std::to_string(k) + " > " + std::to_string(k - 1),
                              nested_pair(gabidulin_code(k), gabidulin_code(k - 1), ambient, threads)});
  }
  c.strong_pairs.push_back({"from_bases U(3,4) -> U(2,4)",
                            QGPair::make(QMatroid::from_bases(ambient, Family::of_dims(ambient->lattice_ptr(), {3}), threads),
                                         QMatroid::from_bases(ambient, Family::of_dims(ambient->lattice_ptr(), {2}), threads),
                                         Certificate::kStrong, threads)});

  for (const auto& m : c.qmatroids) {
    c.deltas.push_back({"bases " + m.name, from_qmatroid(m.value, FamilyKind::kBases)});
    c.deltas.push_back({"independents " + m.name, from_qmatroid(m.value, FamilyKind::kIndependents)});
    c.deltas.push_back({"spanning " + m.name, from_qmatroid(m.value, FamilyKind::kSpanning)});
  }
  c.deltas.push_back({"spread", spread_delta(ambient)});
  c.deltas.push_back({"even-dims", even_dims_delta(ambient)});
  for (const auto& p : c.strong_pairs) c.deltas.push_back({"qg " + p.name, qg_family(p.value, threads)});
  return c;
}

}  // namespace qdm::tools
