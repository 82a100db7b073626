#pragma once

#include <string>
#include <vector>

#include "qdm/qg.hpp"
#include "qdm/rmcodes.hpp"

namespace qdm::tools {

// span(e_i : i in units), 1-based unit indices.
SubspaceId unit_span(const Lattice& lattice, std::initializer_list<int> units);

// The weak-but-not-strong pair on F_2^4: upper bases are every 3-space but
// <e1,e2,e3>, lower bases every 2-space but <e1,e2> and <e3,e4>.
struct CounterexamplePair {
  QMatroid upper;
  QMatroid lower;
};
CounterexamplePair counterexample_pair(const AmbientPtr& ambient, unsigned threads = 0);

// F_16 over F_2 with evaluation points 1, w, w^2, w^3.
ExtFieldTower gabidulin_tower();
RankMetricCode gabidulin_code(int k);

template <typename T>
struct Named {
  std::string name;
  T value;
};

// The fixed collection of examples the property suites quantify over. Built
// for F_2^4 under the given ambient form.
struct Corpus {
  AmbientPtr ambient;
  std::vector<Named<QMatroid>> qmatroids;
  std::vector<Named<QDeltaMatroid>> deltas;
  std::vector<Named<QGPair>> strong_pairs;
  std::vector<Named<RankMetricCode>> codes;
};

Corpus build_corpus(const AmbientPtr& ambient, unsigned threads = 0);

// A symmetric invertible Gram matrix on F_2^4 other than the identity.
BilinearForm exchange_form();

}  // namespace qdm::tools
