#pragma once

#include "finepoly/io.hpp"

namespace finepoly {

// Named example polytopes, reachable from the command line via `gen`.
// Families: unit-simplex d | scaled-simplex d k | klein d | delpezzo i |
// paper-polygon n. Throws std::invalid_argument on unknown families or bad
// parameters (a usage error at the CLI level).
PolytopeDocument make_fixture(const std::string& family, const std::vector<int>& params);

// One help line per family.
std::vector<std::string> fixture_usage();

}  // namespace finepoly
