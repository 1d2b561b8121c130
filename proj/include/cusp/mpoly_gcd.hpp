#pragma once

#include <vector>

#include "cusp/mpoly.hpp"

namespace cusp {

// GCD in at most 3 variables (the pipeline only simplifies homogeneous
// forms in the chart parameters). Content/primitive-part reduction onto a
// subresultant remainder sequence; trivariate homogeneous input enters by
// stripping the shared power of the last variable and dehomogenizing.
// Result is normalized to leading coefficient 1 (graded-lex) and certified:
// it divides both inputs exactly and the cofactors pass a randomized
// coprimality evaluation on lines.
// gcd(p, 0) = normalize(p). More than 3 variables -> Unsupported.
MPoly mpoly_gcd(const MPoly& p, const MPoly& q);

MPoly mpoly_gcd_many(const std::vector<MPoly>& ps);

}  // namespace cusp
