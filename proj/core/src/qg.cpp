#include "qdm/qg.hpp"

#include "qdm/error.hpp"

namespace qdm {

QGPair QGPair::make(QMatroid upper, QMatroid lower, Certificate certificate, unsigned threads) {
  const Lattice& lat = upper.lattice();
  MapReport sandwich = basis_sandwich(upper, lower);
  if (certificate == Certificate::kStrong) {
    MapReport strong = is_strong_rankdiff(upper, lower, threads);
    if (!strong) fail(Errc::kCertificateMissing, "identity is not a strong map: " + describe(strong, lat));
    if (!sandwich) {
      fail(Errc::kInternalInconsistency, "strong map without the basis sandwich: " + describe(sandwich, lat));
    }
  } else if (!sandwich) {
    fail(Errc::kCertificateMissing, "basis sandwich " + describe(sandwich, lat));
  }
  return QGPair(std::move(upper), std::move(lower), certificate);
}

Family weak_qg_family(const QGPair& pair) {
  const Lattice& lat = pair.upper().lattice();
  std::vector<SubspaceId> b1, b2;
  for (SubspaceId id : lat.of_dim(pair.upper().full_rank())) {
    if (pair.upper().is_independent(id)) b1.push_back(id);
  }
  for (SubspaceId id : lat.of_dim(pair.lower().full_rank())) {
    if (pair.lower().is_independent(id)) b2.push_back(id);
  }
  Family out(pair.upper().lattice_ptr());
  for (SubspaceId big : b1) {
    for (SubspaceId small : b2) {
      if (!lat.contains(big, small)) continue;
      if (lat.has_relation_tables()) {
        const Bitset between = lat.up_set(small) & lat.down_set(big);
        for (std::size_t z = between.find_first(); z != Bitset::npos; z = between.find_next(z)) {
          out.insert(static_cast<SubspaceId>(z));
        }
      } else {
        for (SubspaceId z : lat.all()) {
          if (lat.contains(z, small) && lat.contains(big, z)) out.insert(z);
        }
      }
    }
  }
  return out;
}

QDeltaMatroid qg_family(const QGPair& pair, unsigned threads) {
  if (pair.certificate() != Certificate::kStrong) {
    fail(Errc::kCertificateMissing, "the q-g family needs a strong map certificate");
  }
  const QMatroid& m1 = pair.upper();
  const QMatroid& m2 = pair.lower();
  const Lattice& lat = m1.lattice();
  Family f(m1.lattice_ptr());
  for (SubspaceId id : lat.all()) {
    if (m1.is_independent(id) && m2.is_spanning(id)) f.insert(id);
  }
  for (const AxiomReport& r : {check_f3f4(f, threads), check_f1f2(f, threads)}) {
    if (!r) fail(Errc::kInternalInconsistency, "q-g family breaks an exchange axiom: " + describe(r, lat));
  }
  return QDeltaMatroid::unchecked(m1.ambient_ptr(), std::move(f));
}

}  // namespace qdm
