#pragma once

#include "qdm/qdelta.hpp"
#include "qdm/strongmap.hpp"

namespace qdm {

enum class Certificate { kWeak, kStrong };

// An ordered pair (M1, M2) of q-matroids on one ground space together with
// the verified relation between them: kWeak means the basis sandwich holds,
// kStrong that the identity M1 -> M2 is a strong map.
class QGPair {
 public:
  // Throws CertificateMissing, quoting the failing map check.
  static QGPair make(QMatroid upper, QMatroid lower, Certificate certificate, unsigned threads = 0);

  const QMatroid& upper() const { return upper_; }
  const QMatroid& lower() const { return lower_; }
  Certificate certificate() const { return certificate_; }

 private:
  QGPair(QMatroid upper, QMatroid lower, Certificate certificate)
      : upper_(std::move(upper)), lower_(std::move(lower)), certificate_(certificate) {}

  QMatroid upper_;
  QMatroid lower_;
  Certificate certificate_;
};

// All F with B2 inside F inside B1 for some basis B1 of M1 and B2 of M2.
// Not checked against the exchange axioms.
Family weak_qg_family(const QGPair& pair);

// {F : F independent in M1 and spanning in M2}. Needs the strong certificate
// (CertificateMissing); asserts (F1)-(F4) (InternalInconsistency).
QDeltaMatroid qg_family(const QGPair& pair, unsigned threads = 0);

}  // namespace qdm
