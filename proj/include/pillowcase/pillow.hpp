#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <iosfwd>
#include <vector>

#include "pillowcase/quaternion.hpp"

namespace pillowcase {

inline constexpr double kTwoPi = 2.0 * M_PI;

// Point equality tolerance in the quotient.
inline constexpr double kTauPoint = 1e-8;
// Default sampling density contract for paths (sup-norm step bound on lifts).
inline constexpr double kDeltaSample = kTwoPi / 2048.0;

// Canonical representative of a G-orbit: gamma in [0,pi], theta in [0,2pi),
// G generated by (x,y) -> (x+2pi m, y+2pi n) and (x,y) -> (-x,-y).
struct PillowPoint {
    double gamma = 0.0;
    double theta = 0.0;
};

inline double mod_two_pi(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0) y += kTwoPi;
    if (y == kTwoPi) y = 0.0;
    return y;
}

// Reduce mod 2pi into [0,2pi)^2, negate if gamma > pi, resolve fold-line ties
// toward theta in [0,pi].
inline PillowPoint project(double x, double y) {
    double g = mod_two_pi(x);
    double t = mod_two_pi(y);
    if (g > M_PI) {
        g = kTwoPi - g;
        t = (t == 0.0) ? 0.0 : kTwoPi - t;
    }
    if ((g == 0.0 || g == M_PI) && t > M_PI) t = kTwoPi - t;
    return {g, t};
}

// Distance in the quotient metric: min over the G-action.
inline double quotient_distance(const PillowPoint& p, const PillowPoint& q) {
    double best = 1e300;
    for (int sigma = -1; sigma <= 1; sigma += 2) {
        const double qx = sigma * q.gamma, qy = sigma * q.theta;
        for (int m = -2; m <= 2; ++m) {
            for (int n = -2; n <= 2; ++n) {
                const double dx = p.gamma - qx - kTwoPi * m;
                const double dy = p.theta - qy - kTwoPi * n;
                const double d = std::hypot(dx, dy);
                if (d < best) best = d;
            }
        }
    }
    return best;
}

inline bool same_point(const PillowPoint& p, const PillowPoint& q, double tol = kTauPoint) {
    return quotient_distance(p, q) <= tol;
}

// The four orbifold points (pi Z)^2 / G.
inline const std::array<PillowPoint, 4>& corners() {
    static const std::array<PillowPoint, 4> cs = {
        PillowPoint{0, 0}, PillowPoint{0, M_PI}, PillowPoint{M_PI, 0}, PillowPoint{M_PI, M_PI}};
    return cs;
}

inline double corner_distance(const PillowPoint& p) {
    double best = 1e300;
    for (const auto& c : corners()) best = std::min(best, quotient_distance(p, c));
    return best;
}

inline bool is_corner(const PillowPoint& p, double tol = kTauPoint) {
    return corner_distance(p) <= tol;
}

// psi(gamma,theta): a -> i, b -> e^{gamma k} i, c -> e^{theta k} i,
// d -> e^{(theta-gamma) k} i.  Satisfies ba = cd, all values in C(i).
inline std::array<Quaternion, 4> psi(double gamma, double theta) {
    return {kI, exp_axis(gamma, kK) * kI, exp_axis(theta, kK) * kI,
            exp_axis(theta - gamma, kK) * kI};
}

// An immersed curve in the pillowcase, stored as a planar lift.  Consecutive
// lift points obey the sup-norm step bound `delta`.
struct PillowPath {
    std::vector<double> params;
    std::vector<std::array<double, 2>> lift;
    bool closed = false;
    double delta = kDeltaSample;

    std::size_t size() const { return lift.size(); }
    PillowPoint canonical(std::size_t idx) const { return project(lift[idx][0], lift[idx][1]); }
};

// Sample t -> fn(t) on [t0,t1], subdividing until the lift step stays below
// `delta` in sup norm.
PillowPath sample_path(const std::function<std::array<double, 2>(double)>& fn, double t0, double t1,
                       std::size_t min_samples, bool closed, double delta = kDeltaSample);

// The diagonal arc gamma = theta, gamma in [0,pi]; hits corners exactly at
// its endpoints.
PillowPath diagonal_arc(double delta = kDeltaSample);

// Plain-text table "t gamma theta" per line (canonical coordinates).
void write_path(std::ostream& os, const PillowPath& path);

// Unfold a sequence of canonical points into a continuous planar lift,
// choosing at each step the G-image nearest the previous lift point.
std::vector<std::array<double, 2>> unfold_lift(const std::vector<PillowPoint>& pts);

}  // namespace pillowcase
