#ifndef SCALECOMPLEX_VERIFICATION_HPP
#define SCALECOMPLEX_VERIFICATION_HPP

#include <string>
#include <vector>

#include "scalecomplex/complex.hpp"

namespace scx {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Small named complexes used throughout the checks and tests.
namespace fixtures {
SimplicialComplex two_components();    ///< {0,1} and {2}
SimplicialComplex hollow_triangle();   ///< edges of {0,1,2}
SimplicialComplex filled_triangle();   ///< {0,1,2}
SimplicialComplex tetrahedron_edges(); ///< all six edges of {0,1,2,3}
/// A filled triangle {1,2,3} attached to the hollow triangle on {0,1,2}
/// along the edge {1,2}.
SimplicialComplex triangle_with_flap();
} // namespace fixtures

/// Every known count and structural claim about the twelve-tone
/// non-chromatic complex, one result per claim, in a fixed order.
std::vector<CheckResult> run_verification();

} // namespace scx

#endif
