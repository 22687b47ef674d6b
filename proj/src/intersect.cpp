#include "pillowcase/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <unordered_map>

namespace pillowcase {

namespace {

constexpr double kParallelEps = 1e-12;

struct BBox {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    void grow(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
};

// Uniform hash grid over the segments of one lift.
class SegmentGrid {
  public:
    SegmentGrid(const PillowPath& path, double cell) : path_(path), cell_(cell) {
        for (std::size_t i = 0; i + 1 < path.lift.size(); ++i) {
            const auto& p = path.lift[i];
            const auto& q = path.lift[i + 1];
            for (long long ix = idx(std::min(p[0], q[0])); ix <= idx(std::max(p[0], q[0])); ++ix)
                for (long long iy = idx(std::min(p[1], q[1])); iy <= idx(std::max(p[1], q[1]));
                     ++iy)
                    bins_[key(ix, iy)].push_back(static_cast<int>(i));
        }
    }

    void candidates(double xmin, double xmax, double ymin, double ymax,
                    std::vector<int>& out) const {
        out.clear();
        for (long long ix = idx(xmin); ix <= idx(xmax); ++ix)
            for (long long iy = idx(ymin); iy <= idx(ymax); ++iy) {
                const auto it = bins_.find(key(ix, iy));
                if (it == bins_.end()) continue;
                out.insert(out.end(), it->second.begin(), it->second.end());
            }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

  private:
    long long idx(double v) const { return static_cast<long long>(std::floor(v / cell_)); }
    static long long key(long long ix, long long iy) { return ix * 2000003LL + iy; }

    const PillowPath& path_;
    double cell_;
    std::unordered_map<long long, std::vector<int>> bins_;
};

double max_segment_len(const PillowPath& p) {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < p.lift.size(); ++i) {
        m = std::max(m, std::hypot(p.lift[i + 1][0] - p.lift[i][0], p.lift[i + 1][1] - p.lift[i][1]));
    }
    return m;
}

}  // namespace

Intersections intersections(const PillowPath& a, const PillowPath& b) {
    if (a.size() < 2 || b.size() < 2) throw Error("intersections: paths need at least 2 points");

    const double max_a = max_segment_len(a);
    const double max_b = max_segment_len(b);
    if (max_a == 0.0 || max_b == 0.0) throw Error("intersections: zero-length path");

    const double cell = 2.0 * std::max(max_a, std::max(max_b, 1e-9));
    SegmentGrid grid(a, cell);

    BBox boxa;
    for (const auto& p : a.lift) boxa.grow(p[0], p[1]);

    struct Raw {
        double t, s;
        double x, y;  // in a's lift frame
        int sign;
        double margin;
    };
    std::vector<Raw> raw;
    std::vector<int> cand;

    const double pad = cell;
    for (int sigma = 1; sigma >= -1; sigma -= 2) {
        BBox boxb;
        for (const auto& p : b.lift) boxb.grow(sigma * p[0], sigma * p[1]);
        const long long m_lo = static_cast<long long>(std::floor((boxa.xmin - boxb.xmax - pad) / kTwoPi));
        const long long m_hi = static_cast<long long>(std::ceil((boxa.xmax - boxb.xmin + pad) / kTwoPi));
        const long long n_lo = static_cast<long long>(std::floor((boxa.ymin - boxb.ymax - pad) / kTwoPi));
        const long long n_hi = static_cast<long long>(std::ceil((boxa.ymax - boxb.ymin + pad) / kTwoPi));

        for (long long m = m_lo; m <= m_hi; ++m)
            for (long long n = n_lo; n <= n_hi; ++n) {
                const double ox = kTwoPi * m, oy = kTwoPi * n;
                for (std::size_t j = 0; j + 1 < b.lift.size(); ++j) {
                    const double q1x = sigma * b.lift[j][0] + ox, q1y = sigma * b.lift[j][1] + oy;
                    const double q2x = sigma * b.lift[j + 1][0] + ox, q2y = sigma * b.lift[j + 1][1] + oy;
                    const double bxmin = std::min(q1x, q2x), bxmax = std::max(q1x, q2x);
                    const double bymin = std::min(q1y, q2y), bymax = std::max(q1y, q2y);
                    if (bxmax < boxa.xmin - pad || bxmin > boxa.xmax + pad || bymax < boxa.ymin - pad ||
                        bymin > boxa.ymax + pad)
                        continue;
                    grid.candidates(bxmin, bxmax, bymin, bymax, cand);
                    for (int i : cand) {
                        const double p1x = a.lift[i][0], p1y = a.lift[i][1];
                        const double p2x = a.lift[i + 1][0], p2y = a.lift[i + 1][1];
                        const double d1x = p2x - p1x, d1y = p2y - p1y;
                        const double d2x = q2x - q1x, d2y = q2y - q1y;
                        const double den = d1x * d2y - d1y * d2x;
                        const double len1 = std::hypot(d1x, d1y), len2 = std::hypot(d2x, d2y);
                        if (len1 == 0.0 || len2 == 0.0) continue;
                        const double margin = std::abs(den) / (len1 * len2);
                        const double rx = q1x - p1x, ry = q1y - p1y;
                        const double cr_u = rx * d2y - ry * d2x;
                        const double cr_v = rx * d1y - ry * d1x;

                        if (margin < kParallelEps) {
                            // parallel: reject unless the segments are collinear and overlap
                            const double line_dist = std::abs(cr_v) / len1;
                            if (line_dist > kTauPoint) continue;
                            const double u1 = (rx * d1x + ry * d1y) / (len1 * len1);
                            const double u2 = ((q2x - p1x) * d1x + (q2y - p1y) * d1y) / (len1 * len1);
                            const double lo = std::min(u1, u2), hi = std::max(u1, u2);
                            if (hi > 0.0 && lo < 1.0)
                                throw NonTransverse("intersections: overlapping arcs (degenerate)");
                            continue;
                        }

                        double u = cr_u / den;
                        double v = cr_v / den;
                        const double tol = 1e-12;
                        const bool last_a = !a.closed && (i + 2 == static_cast<int>(a.lift.size()));
                        const bool last_b = !b.closed && (j + 2 == b.lift.size());
                        const double uhi = last_a ? 1.0 + tol : 1.0;
                        const double vhi = last_b ? 1.0 + tol : 1.0;
                        if (u < -tol || u >= uhi || v < -tol || v >= vhi) continue;
                        u = std::clamp(u, 0.0, 1.0);
                        v = std::clamp(v, 0.0, 1.0);

                        if (margin < kMarginMin)
                            throw NonTransverse("intersections: tangency (margin below threshold)");

                        Raw r;
                        r.t = a.params[i] + u * (a.params[i + 1] - a.params[i]);
                        r.s = b.params[j] + v * (b.params[j + 1] - b.params[j]);
                        r.x = p1x + u * d1x;
                        r.y = p1y + u * d1y;
                        r.sign = (den > 0 ? 1 : -1) * sigma;
                        r.margin = margin;
                        raw.push_back(r);
                    }
                }
            }
    }

    std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
        return x.t != y.t ? x.t < y.t : x.s < y.s;
    });

    const double range_a = a.params.back() - a.params.front();
    const double range_b = b.params.back() - b.params.front();
    const double tol_t = 1e-6 * std::max(range_a, 1.0);
    const double tol_s = 1e-6 * std::max(range_b, 1.0);

    Intersections out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool dup = false;
        for (std::size_t k = i; k-- > 0;) {
            if (raw[i].t - raw[k].t > tol_t) break;
            double ds = std::abs(raw[i].s - raw[k].s);
            if (b.closed) ds = std::min(ds, std::abs(range_b - ds));
            double dt = std::abs(raw[i].t - raw[k].t);
            if (a.closed) dt = std::min(dt, std::abs(range_a - dt));
            if (dt <= tol_t && ds <= tol_s) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        IntersectionPoint pt;
        pt.location = project(raw[i].x, raw[i].y);
        pt.t = raw[i].t;
        pt.s = raw[i].s;
        pt.crossing_sign = raw[i].sign;
        pt.margin = raw[i].margin;
        if (is_corner(pt.location))
            out.corner_points.push_back(pt);
        else
            out.points.push_back(pt);
    }
    return out;
}

namespace {

const char* pair_letters = "xyzwvutsrqonml";

}  // namespace

GeneratorReport count_generators(const std::vector<LabeledPath>& restriction,
                                 const PerturbationData& pert, GeneratorReport::Mode mode) {
    pert.validate();
    GeneratorReport rep;
    rep.mode = mode;
    rep.epsilon = pert.epsilon;

    const PillowPath diag = diagonal_arc();

    struct Ref {
        int path;
        double t;
        PillowPoint loc;
        bool corner;
    };
    std::vector<Ref> refs;
    for (std::size_t pi = 0; pi < restriction.size(); ++pi) {
        const auto found = intersections(restriction[pi].path, diag);
        for (const auto& pt : found.points)
            refs.push_back({static_cast<int>(pi), pt.t, pt.location, false});
        for (const auto& pt : found.corner_points)
            refs.push_back({static_cast<int>(pi), pt.t, pt.location, true});
    }
    std::sort(refs.begin(), refs.end(), [](const Ref& x, const Ref& y) {
        return x.path != y.path ? x.path < y.path : x.t < y.t;
    });

    std::vector<std::pair<PillowPath, int>> circles;
    if (mode == GeneratorReport::Mode::reduced) {
        circles.emplace_back(rho_image(pert), 0);
    } else {
        circles.emplace_back(rho_unreduced_image(1, pert), 1);
        circles.emplace_back(rho_unreduced_image(2, pert), 2);
    }

    std::vector<GeneratorPoint> found;
    for (std::size_t pi = 0; pi < restriction.size(); ++pi) {
        for (const auto& [circle, branch] : circles) {
            const auto result = intersections(restriction[pi].path, circle);
            if (!result.corner_points.empty()) rep.regular = false;
            for (const auto& pt : result.points) {
                GeneratorPoint g;
                g.location = pt.location;
                g.t = pt.t;
                g.s = pt.s;
                g.path_index = static_cast<int>(pi);
                g.circle_branch = branch;
                g.margin = pt.margin;
                g.on_z1_stratum = restriction[pi].z1_stratum;
                found.push_back(g);
            }
        }
    }

    // Match each crossing to the closest unperturbed source on its own path.
    std::vector<std::vector<GeneratorPoint>> groups(refs.size());
    for (const auto& g : found) {
        int best = -1;
        double best_d = 1e300;
        for (std::size_t ri = 0; ri < refs.size(); ++ri) {
            if (refs[ri].path != g.path_index) continue;
            const auto& path = restriction[static_cast<std::size_t>(g.path_index)].path;
            double dt = std::abs(g.t - refs[ri].t);
            if (path.closed) {
                const double range = path.params.back() - path.params.front();
                dt = std::min(dt, std::abs(range - dt));
            }
            if (dt < best_d) {
                best_d = dt;
                best = static_cast<int>(ri);
            }
        }
        if (best < 0) {
            rep.regular = false;
            continue;
        }
        groups[static_cast<std::size_t>(best)].push_back(g);
        if (g.on_z1_stratum) ++rep.z1_crossings;
    }

    const std::size_t expected_pair =
        mode == GeneratorReport::Mode::reduced ? 2 : 4;
    const std::size_t expected_alpha =
        mode == GeneratorReport::Mode::reduced ? 1 : 2;

    std::size_t pair_idx = 0;
    for (std::size_t ri = 0; ri < refs.size(); ++ri) {
        auto& grp = groups[ri];
        std::sort(grp.begin(), grp.end(), [](const GeneratorPoint& x, const GeneratorPoint& y) {
            return x.t != y.t ? x.t < y.t : x.s < y.s;
        });
        if (refs[ri].corner) {
            for (std::size_t k = 0; k < grp.size(); ++k) {
                grp[k].label = grp.size() > 1 ? "a'" + std::to_string(k + 1) : "a'";
                rep.alpha.push_back(grp[k]);
            }
        } else {
            if (grp.empty()) {
                rep.regular = false;
                continue;
            }
            const char letter = pair_idx < std::strlen(pair_letters)
                                    ? pair_letters[pair_idx]
                                    : 'g';
            for (std::size_t k = 0; k < grp.size(); ++k)
                grp[k].label = std::string(1, letter) + std::to_string(k + 1);
            if (grp.size() != expected_pair) rep.regular = false;
            rep.unperturbed.push_back(refs[ri].loc);
            rep.pairs.push_back(grp);
            ++pair_idx;
        }
    }
    if (rep.alpha.size() != expected_alpha) rep.regular = false;
    return rep;
}

GeneratorReport count_generators(const PillowPath& restriction, const PerturbationData& pert,
                                 GeneratorReport::Mode mode) {
    return count_generators(std::vector<LabeledPath>{{restriction, false}}, pert, mode);
}

std::vector<const GeneratorPoint*> GeneratorReport::all_points() const {
    std::vector<const GeneratorPoint*> out;
    for (const auto& g : alpha) out.push_back(&g);
    for (const auto& grp : pairs)
        for (const auto& g : grp) out.push_back(&g);
    return out;
}

std::string KnotSpec::name() const {
    if (family == Family::two_bridge)
        return "K(" + std::to_string(p) + "/" + std::to_string(q) + ")";
    return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace pillowcase
