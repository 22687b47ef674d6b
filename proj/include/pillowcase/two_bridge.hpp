#pragma once

#include <array>
#include <vector>

#include "pillowcase/generator_report.hpp"
#include "pillowcase/perturb.hpp"
#include "pillowcase/pillow.hpp"

namespace pillowcase {

// The 2-bridge knot K(p/q) in the Burde-Zieschang convention: the 2-fold
// branched cover of K(p/q) is L(p,q).  p odd keeps it a knot.  Different
// fractions can present the same knot (e.g. the figure eight as K(-5/3) or
// K(5/2)); both are valid inputs with their own tangle curves.
struct TwoBridgeKnot {
    long long p = 0;
    long long q = 0;

    TwoBridgeKnot(long long p_, long long q_);
};

// Odd-length continued fraction a1 + 1/(a2 + 1/(...)), all terms nonzero.
struct ContinuedFraction {
    std::vector<long long> terms;

    // Exact rational value (num, den), den > 0.
    std::pair<long long, long long> eval() const;
};

ContinuedFraction odd_cfe(const TwoBridgeKnot& k);

enum class TwistOrientation { vertical, horizontal };

using Mat3 = std::array<std::array<long long, 3>, 3>;

// M(n) (vertical) acts on the (theta, theta-gamma) pair, N(n) (horizontal)
// on the (gamma, theta) pair; both embed the 2x2 block [[1+n,-n],[n,1-n]].
Mat3 twist_matrix(long long n, TwistOrientation orientation);

Mat3 mat_mul(const Mat3& x, const Mat3& y);
std::array<long long, 3> mat_apply(const Mat3& m, const std::array<long long, 3>& v);

// Slope pair of the tangle restriction line t -> (m t, n t): the twist
// matrix product applied to (t,t,0), equal to +-(q, q-p, -p), sign
// normalized so m >= 0.
struct LineSlope {
    long long m = 0;
    long long n = 0;
};
LineSlope pillowcase_line(const TwoBridgeKnot& k);

// Sampled lift of t -> (q t, (q-p) t), t in [0,pi].
PillowPath restriction_curve(const TwoBridgeKnot& k, std::size_t samples = 2048);

// The (|p|+1)/2 intersections with the diagonal arc,
// x_l = (q 2 pi l / p, (q-p) 2 pi l / p), l = 0..(|p|-1)/2; x_0 is the corner.
std::vector<PillowPoint> unperturbed_intersections(const TwoBridgeKnot& k);

// Intersect the restriction curve with the perturbed circle; |p| generators
// expected (pairs x_{l,1}, x_{l,2} plus alpha').
GeneratorReport perturbed_generators(const TwoBridgeKnot& k, const PerturbationData& pert,
                                     std::size_t samples = 2048);

}  // namespace pillowcase
