#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pillowcase/kernels/grid_eval.hpp"
#include "pillowcase/pillow.hpp"
#include "pillowcase/poly.hpp"
#include "pillowcase/quaternion.hpp"

namespace pillowcase {

// |p(x,y)| bound after crossing refinement.
inline constexpr double kTauZero = 1e-10;
// Z0/Z1 classification tolerance.
inline constexpr double kTauClass = 1e-7;

// T(p,q) with the auxiliary pair pr + qs = 1.  The default (r,s) is
// normalized to 0 < r <= q; the cut-out polynomial depends on the choice, so
// callers may override it.
struct TorusKnot {
    long long p = 2, q = 3, r = 2, s = -1;

    TorusKnot(long long p_, long long q_);
    TorusKnot(long long p_, long long q_, long long r_, long long s_);
};

// (r,s) with pr + qs = 1 and 0 < r <= q.  Throws NotCoprime.
std::pair<long long, long long> extended_euclid(long long p, long long q);

// p_{p,q,r,s}(x,y) = T_{s+p}(x) T_{q-r}(y) S_s(x) S_{-r}(y)
//                  - S_{s+p}(x) S_{q-r}(y) T_s(x) T_{-r}(y).
BivariatePoly cutout_poly(const TorusKnot& k);

// tau(x,y): the common ratio T_{s+p}(x)T_{q-r}(y) / (w S_{s+p}(x)S_{q-r}(y))
// = T_s(x)T_{-r}(y) / (w S_s(x)S_{-r}(y)), w = sqrt((1-x^2)(1-y^2)), where
// defined.  Z1 when all four numerators/denominators vanish; undefined when
// a denominator vanishes but its numerator does not.
struct TauZ1 {};
struct TauUndefined {};
using TauResult = std::variant<double, TauZ1, TauUndefined>;
TauResult tau(const TorusKnot& k, double x, double y);

enum class PointClass { z0, z1, outside };

struct ClassifiedPoint {
    double x = 0.0, y = 0.0;
    PointClass cls = PointClass::z0;
    double tau_value = 0.0;  // valid for z0
};

struct ZeroSetComponent {
    enum class Kind { arc, loop };
    Kind kind = Kind::arc;
    std::vector<ClassifiedPoint> points;
    std::vector<std::array<double, 2>> junctions;   // singular points of the curve
    std::vector<std::array<double, 2>> z1_interior; // interior Z1 points (fiber = arc)

    bool has_admissible() const;
};

// Marching squares over [-1,1]^2 at the given resolution (internally an odd
// cell count), bisection refinement of each crossing, junction detection in
// cells with >= 4 crossings (paired by direction through the singular
// point), nearest-neighbor linking.  Components with no Z0/Z1 admissible
// point are dropped.
std::vector<ZeroSetComponent> trace_zero_set(const TorusKnot& k, int grid = 512,
                                             kernels::Backend backend = kernels::Backend::automatic);

// Pillowcase image of one component via
//   cos(gamma)       = -T_{2s+p}(x) T_{q-2r}(y) + w S_{2s+p}(x) S_{q-2r}(y) tau,
//   cos(gamma-theta) =  T_p(x) T_q(y)           - w S_p(x) S_q(y) tau,
// with the arccos branch seeded by quaternion reconstruction at a
// well-conditioned point and continued by minimal angular jump.  One path
// per maximal admissible run (|tau| <= 1).
std::vector<PillowPath> pillowcase_images(const TorusKnot& k, const ZeroSetComponent& comp,
                                          double delta = kDeltaSample);

// Single-path variant for components with exactly one admissible run.
PillowPath pillowcase_image(const TorusKnot& k, const ZeroSetComponent& comp,
                            double delta = kDeltaSample);

// Image of the arc fiber over an interior Z1 point, parameterized by
// t in [0,pi] (Q.R = cos t).
PillowPath z1_fiber_image(const TorusKnot& k, double x, double y, double delta = kDeltaSample);

// Reconstruction oracle: the representation over a Z0 point, with
// M = e^{u i}, N = e^{v R}, R = e^{t k} i, u = arccos x, v = arccos y,
// t = arccos(tau).  Returns the canonical pillowcase coordinates computed by
// conjugating the puncture images to normal form.
struct ReconstructedRep {
    Quaternion M, N;
    double gamma = 0.0, theta = 0.0;
    double residual = 0.0;  // max |Re| of the two traceless conditions
};
ReconstructedRep reconstruct(const TorusKnot& k, double x, double y, double tau_value);

// Binary dihedral cross-section of V -> {i} x I at e^{gamma k} i.  When q is
// even the construction swaps (p,q,r,s) -> (q,p,s,r); the tuple actually
// used is returned for verification.
struct CrossSection {
    Quaternion M, N;
    long long p, q, r, s;
};
CrossSection cross_section(const TorusKnot& k, double gamma);

// chi(S^3, T(p,q)) arc data: one entry per pair (a,b) of equal parity,
// 0 < a < p, 0 < b < q; endpoint indices (c,d), c < d, meaning endpoint
// angles c pi/(pq) and d pi/(pq) on the abelian arc.
struct ArcEntry {
    long long a = 0, b = 0;
    long long c = 0, d = 0;
};
struct ArcData {
    std::vector<ArcEntry> entries;
};
ArcData chi_arc_data(const TorusKnot& k);

// Delta(t) = (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), exact.
IntPoly alexander_poly(const TorusKnot& k);

// (|sigma|/2 via the lattice oracle, #{i : c_i < pq/2 < d_i} via arc data);
// throws OracleMismatch when they disagree.
std::pair<long long, long long> signature_count(const TorusKnot& k);

// sigma(T(p,q)) < 0 by the Brieskorn lattice count for Sigma(2,p,q).
long long signature_lattice(long long p, long long q);

long long abs_alexander_sum(const TorusKnot& k);

}  // namespace pillowcase
