#pragma once

#include "finepoly/rat.hpp"

namespace finepoly {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat objective;
  RatVec x;  // witness, valid when status == optimal
};

// Minimize c.x subject to a[i].x >= b[i] over free variables x. Exact rational
// two-phase simplex with Bland's rule, so it terminates and never drifts.
LpResult lp_minimize(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

}  // namespace finepoly
