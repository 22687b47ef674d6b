#include "pillowcase/pillow.hpp"

#include <cstdio>
#include <ostream>

namespace pillowcase {

PillowPath sample_path(const std::function<std::array<double, 2>(double)>& fn, double t0, double t1,
                       std::size_t min_samples, bool closed, double delta) {
    PillowPath path;
    path.closed = closed;
    path.delta = delta;
    if (min_samples < 2) min_samples = 2;

    path.params.push_back(t0);
    path.lift.push_back(fn(t0));
    const double step0 = (t1 - t0) / static_cast<double>(min_samples - 1);

    // Depth-first subdivision keeps the output ordered by parameter.
    const std::function<void(double, std::array<double, 2>, double, std::array<double, 2>, int)>
        refine = [&](double ta, std::array<double, 2> pa, double tb, std::array<double, 2> pb,
                     int depth) {
            const double sup = std::max(std::abs(pb[0] - pa[0]), std::abs(pb[1] - pa[1]));
            if (sup >= delta && depth < 24) {
                const double tm = 0.5 * (ta + tb);
                const auto pm = fn(tm);
                refine(ta, pa, tm, pm, depth + 1);
                refine(tm, pm, tb, pb, depth + 1);
                return;
            }
            path.params.push_back(tb);
            path.lift.push_back(pb);
        };

    for (std::size_t i = 1; i < min_samples; ++i) {
        const double ta = t0 + step0 * static_cast<double>(i - 1);
        const double tb = (i + 1 == min_samples) ? t1 : t0 + step0 * static_cast<double>(i);
        refine(ta, fn(ta), tb, fn(tb), 0);
    }
    return path;
}

PillowPath diagonal_arc(double delta) {
    return sample_path([](double t) { return std::array<double, 2>{t, t}; }, 0.0, M_PI, 64, false,
                       delta);
}

std::vector<std::array<double, 2>> unfold_lift(const std::vector<PillowPoint>& pts) {
    std::vector<std::array<double, 2>> lift;
    lift.reserve(pts.size());
    for (const auto& p : pts) {
        if (lift.empty()) {
            lift.push_back({p.gamma, p.theta});
            continue;
        }
        const auto& prev = lift.back();
        std::array<double, 2> best{p.gamma, p.theta};
        double best_d = 1e300;
        for (int sigma = -1; sigma <= 1; sigma += 2)
            for (int m = -2; m <= 2; ++m)
                for (int n = -2; n <= 2; ++n) {
                    const double gx = sigma * p.gamma + kTwoPi * (m + std::floor((prev[0] + M_PI) / kTwoPi));
                    const double gy = sigma * p.theta + kTwoPi * (n + std::floor((prev[1] + M_PI) / kTwoPi));
                    const double d = std::hypot(gx - prev[0], gy - prev[1]);
                    if (d < best_d) {
                        best_d = d;
                        best = {gx, gy};
                    }
                }
        lift.push_back(best);
    }
    return lift;
}

void write_path(std::ostream& os, const PillowPath& path) {
    char buf[96];
    for (std::size_t i = 0; i < path.size(); ++i) {
        const PillowPoint p = path.canonical(i);
        std::snprintf(buf, sizeof(buf), "%.9f\t%.9f\t%.9f\n", path.params[i], p.gamma, p.theta);
        os << buf;
    }
}

}  // namespace pillowcase
