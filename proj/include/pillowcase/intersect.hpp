#pragma once

#include <vector>

#include "pillowcase/generator_report.hpp"
#include "pillowcase/perturb.hpp"
#include "pillowcase/pillow.hpp"

namespace pillowcase {

// Minimum |sin(crossing angle)| for a certified transverse crossing.
inline constexpr double kMarginMin = 1e-4;
// Deduplication radius in canonical coordinates.
inline constexpr double kDedupRadius = 10.0 * kTauPoint;

struct IntersectionPoint {
    PillowPoint location;
    double t = 0.0;        // parameter on path a
    double s = 0.0;        // parameter on path b
    int crossing_sign = 0;
    double margin = 0.0;   // |sin(crossing angle)| in the lift
};

struct Intersections {
    std::vector<IntersectionPoint> points;         // transverse interior crossings
    std::vector<IntersectionPoint> corner_points;  // within tau_pt of a corner; not counted
};

// All transverse crossings of the projections of two paths, found by
// enumerating lattice translates +-L + 2pi(m,n) of b's lift against a's,
// with a segment bounding-box prefilter.  Deduplicated under the G-action
// (parameter-space identity).  Throws NonTransverse on a tangency or on
// overlapping (degenerate) arcs.
Intersections intersections(const PillowPath& a, const PillowPath& b);

// A restriction-side curve, optionally marked as the image of an interior
// Z1 fiber stratum (torus pipeline).
struct LabeledPath {
    PillowPath path;
    bool z1_stratum = false;
};

// Intersect the restriction curve(s) with the perturbed circle(s) and
// assemble a GeneratorReport: each crossing is matched (by parameter
// proximity) to an unperturbed intersection with the diagonal arc; crossings
// matched to corner sources form alpha', the rest form pairs.
GeneratorReport count_generators(const std::vector<LabeledPath>& restriction,
                                 const PerturbationData& pert, GeneratorReport::Mode mode);

GeneratorReport count_generators(const PillowPath& restriction, const PerturbationData& pert,
                                 GeneratorReport::Mode mode);

}  // namespace pillowcase
