#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qdm::tools {

// A reproduction with a fixed expected outcome. run() writes a readable
// trace and returns whether the expected outcome, witnesses included, was
// observed exactly.
struct Reproduction {
  std::string id;
  std::string expectation;
  std::function<bool(std::ostream&, unsigned threads)> run;
};

const std::vector<Reproduction>& reproductions();
// Throws UnknownCase.
const Reproduction& find_reproduction(std::string_view id);

}  // namespace qdm::tools
