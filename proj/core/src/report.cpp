#include "qdm/report.hpp"

namespace qdm {

std::string describe(const AxiomReport& report, const Lattice& lattice) {
  if (report.pass) return "pass";
  std::string out = "fail " + report.axiom;
  const char* sep = ": ";
  for (const auto& [role, id] : report.witness) {
    out += sep + role + " = <" + lattice.render(id) + ">";
    sep = "; ";
  }
  if (!report.detail.empty()) out += " (" + report.detail + ")";
  return out;
}

}  // namespace qdm
