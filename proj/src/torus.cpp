#include "pillowcase/torus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace pillowcase {

namespace {

long long mod_pos(long long v, long long m) {
    long long r = v % m;
    if (r < 0) r += m;
    return r;
}

// Evaluation context: the Chebyshev data of one (p,q,r,s) tuple.
struct TorusContext {
    TorusKnot k;
    BivariatePoly poly, px, py;
    IntPoly Tsp, Tqr, Ts, Tmr;   // tau numerators
    IntPoly Ssp, Sqr, Ss, Smr;   // tau denominators (without the w factor)
    IntPoly T2sp, Tq2r, S2sp, Sq2r;  // cos(gamma) data
    IntPoly Tp, Tq, Sp, Sq;          // cos(gamma-theta) data

    explicit TorusContext(const TorusKnot& knot) : k(knot) {
        const long long p = k.p, q = k.q, r = k.r, s = k.s;
        Tsp = chebyshev_T(static_cast<int>(s + p));
        Tqr = chebyshev_T(static_cast<int>(q - r));
        Ts = chebyshev_T(static_cast<int>(s));
        Tmr = chebyshev_T(static_cast<int>(-r));
        Ssp = chebyshev_S(static_cast<int>(s + p));
        Sqr = chebyshev_S(static_cast<int>(q - r));
        Ss = chebyshev_S(static_cast<int>(s));
        Smr = chebyshev_S(static_cast<int>(-r));
        poly = outer(Tsp * Ss, Tqr * Smr) - outer(Ssp * Ts, Sqr * Tmr);
        px = poly.dx();
        py = poly.dy();
        T2sp = chebyshev_T(static_cast<int>(2 * s + p));
        Tq2r = chebyshev_T(static_cast<int>(q - 2 * r));
        S2sp = chebyshev_S(static_cast<int>(2 * s + p));
        Sq2r = chebyshev_S(static_cast<int>(q - 2 * r));
        Tp = chebyshev_T(static_cast<int>(p));
        Tq = chebyshev_T(static_cast<int>(q));
        Sp = chebyshev_S(static_cast<int>(p));
        Sq = chebyshev_S(static_cast<int>(q));
    }

    static double wfac(double x, double y) {
        return std::sqrt(std::max(0.0, 1.0 - x * x) * std::max(0.0, 1.0 - y * y));
    }

    TauResult tau(double x, double y) const {
        if (std::abs(x) > 1 + 1e-12 || std::abs(y) > 1 + 1e-12)
            throw OutOfDomain("tau: point outside [-1,1]^2");
        const double w = wfac(x, y);
        const double n1 = Tsp.eval(x) * Tqr.eval(y);
        const double n2 = Ts.eval(x) * Tmr.eval(y);
        const double d1 = w * Ssp.eval(x) * Sqr.eval(y);
        const double d2 = w * Ss.eval(x) * Smr.eval(y);
        const bool d1z = std::abs(d1) <= kTauClass;
        const bool d2z = std::abs(d2) <= kTauClass;
        const bool n1z = std::abs(n1) <= kTauClass;
        const bool n2z = std::abs(n2) <= kTauClass;
        if (!d1z && !d2z) return std::abs(d1) >= std::abs(d2) ? n1 / d1 : n2 / d2;
        if (!d1z) {
            if (!n2z) return TauUndefined{};
            return n1 / d1;
        }
        if (!d2z) {
            if (!n1z) return TauUndefined{};
            return n2 / d2;
        }
        if (n1z && n2z) return TauZ1{};
        return TauUndefined{};
    }

    // cos(gamma) and cos(gamma - theta) at a point with fiber datum tau.
    std::array<double, 2> image_cosines(double x, double y, double tau_value) const {
        const double w = wfac(x, y);
        const double cg = -T2sp.eval(x) * Tq2r.eval(y) + w * S2sp.eval(x) * Sq2r.eval(y) * tau_value;
        const double cd = Tp.eval(x) * Tq.eval(y) - w * Sp.eval(x) * Sq.eval(y) * tau_value;
        return {cg, cd};
    }
};

}  // namespace

std::pair<long long, long long> extended_euclid(long long p, long long q) {
    if (std::gcd(p, q) != 1) throw NotCoprime("extended_euclid: gcd(p,q) != 1");
    // inverse of p mod q
    long long t = 0, newt = 1, rr = q, newr = mod_pos(p, q);
    while (newr != 0) {
        const long long quot = rr / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(rr -= quot * newr, newr);
    }
    long long r = mod_pos(t, q);
    if (r == 0) r = q;
    const long long s = (1 - p * r) / q;
    if (p * r + q * s != 1) throw InternalInconsistency("extended_euclid: pr+qs != 1");
    return {r, s};
}

TorusKnot::TorusKnot(long long p_, long long q_) : p(p_), q(q_) {
    if (p < 2 || q < 2) throw OutOfDomain("TorusKnot: p,q must be >= 2");
    if (std::gcd(p, q) != 1) throw NotCoprime("TorusKnot: gcd(p,q) != 1");
    std::tie(r, s) = extended_euclid(p, q);
}

TorusKnot::TorusKnot(long long p_, long long q_, long long r_, long long s_)
    : p(p_), q(q_), r(r_), s(s_) {
    if (p < 2 || q < 2) throw OutOfDomain("TorusKnot: p,q must be >= 2");
    if (std::gcd(p, q) != 1) throw NotCoprime("TorusKnot: gcd(p,q) != 1");
    if (p * r + q * s != 1) throw OutOfDomain("TorusKnot: pr + qs must equal 1");
}

BivariatePoly cutout_poly(const TorusKnot& k) { return TorusContext(k).poly; }

TauResult tau(const TorusKnot& k, double x, double y) { return TorusContext(k).tau(x, y); }

bool ZeroSetComponent::has_admissible() const {
    for (const auto& pt : points) {
        if (pt.cls == PointClass::z1) return true;
        if (pt.cls == PointClass::z0 && std::abs(pt.tau_value) <= 1 + kTauClass) return true;
    }
    return false;
}

namespace {

struct Crossing {
    double x, y;
};

// Edge key: horizontal (between x-nodes i,i+1 at y-node j) or vertical.
struct EdgeKey {
    bool horizontal;
    int i, j;
    bool operator<(const EdgeKey& o) const {
        if (horizontal != o.horizontal) return horizontal < o.horizontal;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

double bisect_edge(const TorusContext& ctx, double ax, double ay, double bx, double by,
                   bool vary_x) {
    // sign convention: value >= 0 counts as positive
    double fa = ctx.poly.eval(ax, ay);
    bool sa = fa >= 0;
    double lo = vary_x ? ax : ay;
    double hi = vary_x ? bx : by;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = vary_x ? ctx.poly.eval(mid, ay) : ctx.poly.eval(ax, mid);
        if ((f >= 0) == sa)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Newton iteration for the singular point grad p = 0 near (x0, y0).
std::array<double, 2> refine_junction(const TorusContext& ctx, double x0, double y0, double cell) {
    const BivariatePoly pxx = ctx.px.dx(), pxy = ctx.px.dy(), pyy = ctx.py.dy();
    double x = x0, y = y0;
    for (int it = 0; it < 40; ++it) {
        const double fx = ctx.px.eval(x, y), fy = ctx.py.eval(x, y);
        const double a = pxx.eval(x, y), b = pxy.eval(x, y), d = pyy.eval(x, y);
        const double det = a * d - b * b;
        if (std::abs(det) < 1e-18) break;
        const double sx = (d * fx - b * fy) / det;
        const double sy = (a * fy - b * fx) / det;
        x -= sx;
        y -= sy;
        if (std::abs(sx) + std::abs(sy) < 1e-15) break;
    }
    if (std::abs(x - x0) > 2 * cell || std::abs(y - y0) > 2 * cell ||
        std::abs(ctx.poly.eval(x, y)) > 1e-6) {
        return {x0, y0};  // keep the crossing centroid
    }
    return {x, y};
}

// Singular points of the curve (p = 0, grad p = 0), by quadtree sign
// subdivision on the gradient components with Newton polish.  Cell-based
// junction detection misses nodes whose branches cross a cell edge twice, so
// this scan runs independently.
std::vector<std::array<double, 2>> find_singular_points(const TorusContext& ctx) {
    std::vector<std::array<double, 2>> out;
    struct Box {
        double x0, y0, size;
        int depth;
    };
    std::vector<Box> stack{{-1.0, -1.0, 2.0, 0}};
    while (!stack.empty()) {
        const Box b = stack.back();
        stack.pop_back();
        bool px_pos = false, px_neg = false, py_pos = false, py_neg = false;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double x = b.x0 + b.size * i / 3.0;
                const double y = b.y0 + b.size * j / 3.0;
                ((ctx.px.eval(x, y) >= 0) ? px_pos : px_neg) = true;
                ((ctx.py.eval(x, y) >= 0) ? py_pos : py_neg) = true;
            }
        if (!(px_pos && px_neg) || !(py_pos && py_neg)) continue;
        if (b.depth < 9) {
            const double h = b.size / 2;
            stack.push_back({b.x0, b.y0, h, b.depth + 1});
            stack.push_back({b.x0 + h, b.y0, h, b.depth + 1});
            stack.push_back({b.x0, b.y0 + h, h, b.depth + 1});
            stack.push_back({b.x0 + h, b.y0 + h, h, b.depth + 1});
            continue;
        }
        const auto cand = refine_junction(ctx, b.x0 + b.size / 2, b.y0 + b.size / 2, b.size);
        if (std::abs(ctx.poly.eval(cand[0], cand[1])) > 1e-8) continue;
        if (std::abs(ctx.px.eval(cand[0], cand[1])) > 1e-6) continue;
        if (std::abs(ctx.py.eval(cand[0], cand[1])) > 1e-6) continue;
        if (std::abs(cand[0]) > 1 + 1e-9 || std::abs(cand[1]) > 1 + 1e-9) continue;
        bool seen = false;
        for (const auto& s : out)
            if (std::hypot(s[0] - cand[0], s[1] - cand[1]) < 1e-6) seen = true;
        if (!seen) out.push_back(cand);
    }
    return out;
}

// Project a point onto the zero set along the gradient.
std::array<double, 2> project_to_curve(const TorusContext& ctx, double x, double y) {
    for (int it = 0; it < 4; ++it) {
        const double f = ctx.poly.eval(x, y);
        const double gx = ctx.px.eval(x, y), gy = ctx.py.eval(x, y);
        const double g2 = gx * gx + gy * gy;
        if (g2 < 1e-18) break;
        x -= f * gx / g2;
        y -= f * gy / g2;
    }
    x = std::clamp(x, -1.0, 1.0);
    y = std::clamp(y, -1.0, 1.0);
    return {x, y};
}

ClassifiedPoint classify_point(const TorusContext& ctx, double x, double y) {
    ClassifiedPoint cp;
    cp.x = x;
    cp.y = y;
    const TauResult t = ctx.tau(x, y);
    if (std::holds_alternative<double>(t)) {
        cp.tau_value = std::get<double>(t);
        cp.cls = std::abs(cp.tau_value) <= 1 + kTauClass ? PointClass::z0 : PointClass::outside;
    } else if (std::holds_alternative<TauZ1>(t)) {
        cp.cls = PointClass::z1;
    } else {
        cp.cls = PointClass::outside;
    }
    return cp;
}

}  // namespace

std::vector<ZeroSetComponent> trace_zero_set(const TorusKnot& k, int grid,
                                             kernels::Backend backend) {
    if (grid < 64) throw OutOfDomain("trace_zero_set: grid must be >= 64");
    const TorusContext ctx(k);

    // Odd cell count keeps the axes x=0, y=0 (which carry whole strata for
    // small knots) off the node lattice.
    const int ncells = (grid % 2 == 1) ? grid : grid + 1;
    const int nnodes = ncells + 1;
    const double h = 2.0 / ncells;

    kernels::GridSpec spec;
    spec.nx = nnodes;
    spec.ny = nnodes;
    spec.x0 = -1.0;
    spec.dx = h;
    spec.y0 = -1.0;
    spec.dy = h;
    std::vector<double> values(static_cast<std::size_t>(nnodes) * nnodes);
    kernels::eval_poly_grid(ctx.poly, spec, values.data(), backend);

    const auto node = [&](int i, int j) { return values[static_cast<std::size_t>(j) * nnodes + i]; };
    const auto xs = [&](int i) { return -1.0 + h * i; };
    const auto pos = [&](double v) { return v >= 0.0; };

    // crossing per sign-changing edge
    std::map<EdgeKey, Crossing> crossings;
    for (int j = 0; j < nnodes; ++j)
        for (int i = 0; i + 1 < nnodes; ++i)
            if (pos(node(i, j)) != pos(node(i + 1, j))) {
                const double cx = bisect_edge(ctx, xs(i), xs(j), xs(i + 1), xs(j), true);
                crossings[{true, i, j}] = {cx, xs(j)};
            }
    for (int i = 0; i < nnodes; ++i)
        for (int j = 0; j + 1 < nnodes; ++j)
            if (pos(node(i, j)) != pos(node(i, j + 1))) {
                const double cy = bisect_edge(ctx, xs(i), xs(j), xs(i), xs(j + 1), false);
                crossings[{false, i, j}] = {xs(i), cy};
            }

    // graph edges between crossings; junction cells pass pairs through the
    // refined singular point
    struct Link {
        EdgeKey other;
        bool via = false;
        std::array<double, 2> via_pt{0, 0};
    };
    std::map<EdgeKey, std::vector<Link>> adj;
    std::vector<std::array<double, 2>> junctions_all;

    for (int cj = 0; cj < ncells; ++cj)
        for (int ci = 0; ci < ncells; ++ci) {
            std::vector<EdgeKey> keys;
            const EdgeKey bottom{true, ci, cj}, top{true, ci, cj + 1}, left{false, ci, cj},
                right{false, ci + 1, cj};
            for (const EdgeKey& e : {bottom, top, left, right})
                if (crossings.count(e)) keys.push_back(e);
            if (keys.size() < 2) continue;
            if (keys.size() == 2) {
                adj[keys[0]].push_back({keys[1], false, {}});
                adj[keys[1]].push_back({keys[0], false, {}});
                continue;
            }
            // degenerate node: pair crossings by direction through the
            // singular point
            double cx = 0, cy = 0;
            for (const auto& e : keys) {
                cx += crossings[e].x;
                cy += crossings[e].y;
            }
            cx /= static_cast<double>(keys.size());
            cy /= static_cast<double>(keys.size());
            const auto jpt = refine_junction(ctx, cx, cy, h);
            junctions_all.push_back(jpt);
            std::sort(keys.begin(), keys.end(), [&](const EdgeKey& a, const EdgeKey& b) {
                const auto& ca = crossings[a];
                const auto& cb = crossings[b];
                return std::atan2(ca.y - jpt[1], ca.x - jpt[0]) <
                       std::atan2(cb.y - jpt[1], cb.x - jpt[0]);
            });
            const std::size_t half = keys.size() / 2;
            for (std::size_t a = 0; a < half; ++a) {
                const EdgeKey& e1 = keys[a];
                const EdgeKey& e2 = keys[a + half];
                adj[e1].push_back({e2, true, jpt});
                adj[e2].push_back({e1, true, jpt});
            }
        }

    // walk components
    std::map<EdgeKey, bool> used;
    std::vector<ZeroSetComponent> comps;

    const auto walk = [&](const EdgeKey& start) {
        ZeroSetComponent comp;
        std::vector<std::array<double, 2>> pts;
        std::vector<bool> is_junction;
        EdgeKey cur = start;
        EdgeKey prev = start;
        bool first = true;
        bool closed = false;
        while (true) {
            used[cur] = true;
            pts.push_back({crossings[cur].x, crossings[cur].y});
            is_junction.push_back(false);
            const auto& links = adj[cur];
            const Link* next = nullptr;
            for (const auto& l : links) {
                if (!first && !(prev < l.other) && !(l.other < prev)) continue;
                if (used.count(l.other) && used[l.other]) {
                    if (!(l.other < start) && !(start < l.other) && !first) {
                        // closing the loop
                        if (l.via) {
                            pts.push_back(l.via_pt);
                            is_junction.push_back(true);
                        }
                        closed = true;
                    }
                    continue;
                }
                next = &l;
                break;
            }
            if (closed || next == nullptr) break;
            if (next->via) {
                pts.push_back(next->via_pt);
                is_junction.push_back(true);
            }
            prev = cur;
            cur = next->other;
            first = false;
        }
        comp.kind = closed ? ZeroSetComponent::Kind::loop : ZeroSetComponent::Kind::arc;
        for (std::size_t idx = 0; idx < pts.size(); ++idx) {
            ClassifiedPoint cp = classify_point(ctx, pts[idx][0], pts[idx][1]);
            comp.points.push_back(cp);
            if (is_junction[idx]) {
                bool seen = false;
                for (const auto& jj : comp.junctions)
                    if (std::hypot(jj[0] - pts[idx][0], jj[1] - pts[idx][1]) < 1e-6) seen = true;
                if (!seen) comp.junctions.push_back(pts[idx]);
                if (cp.cls == PointClass::z1 && std::abs(cp.x) < 1 - 1e-9 &&
                    std::abs(cp.y) < 1 - 1e-9) {
                    bool seenz = false;
                    for (const auto& zz : comp.z1_interior)
                        if (std::hypot(zz[0] - cp.x, zz[1] - cp.y) < 1e-6) seenz = true;
                    if (!seenz) comp.z1_interior.push_back({cp.x, cp.y});
                }
            } else if (cp.cls == PointClass::z1 && std::abs(cp.x) < 1 - 1e-9 &&
                       std::abs(cp.y) < 1 - 1e-9) {
                bool seenz = false;
                for (const auto& zz : comp.z1_interior)
                    if (std::hypot(zz[0] - cp.x, zz[1] - cp.y) < 1e-6) seenz = true;
                if (!seenz) comp.z1_interior.push_back({cp.x, cp.y});
            }
        }
        return comp;
    };

    // degree-1 starts first (open arcs), then remaining cycles
    for (const auto& [key, links] : adj) {
        if (used.count(key) && used[key]) continue;
        if (links.size() == 1) comps.push_back(walk(key));
    }
    for (const auto& [key, links] : adj) {
        if (used.count(key) && used[key]) continue;
        if (!links.empty()) comps.push_back(walk(key));
    }

    // merge independently found singular points into the components
    for (const auto& s : find_singular_points(ctx)) {
        ZeroSetComponent* nearest = nullptr;
        double best = 1e300;
        for (auto& comp : comps)
            for (const auto& pt : comp.points) {
                const double d = std::hypot(pt.x - s[0], pt.y - s[1]);
                if (d < best) {
                    best = d;
                    nearest = &comp;
                }
            }
        if (!nearest || best > 4 * h) continue;
        bool seen = false;
        for (const auto& jj : nearest->junctions)
            if (std::hypot(jj[0] - s[0], jj[1] - s[1]) < 1e-5) seen = true;
        if (!seen) nearest->junctions.push_back(s);
        const ClassifiedPoint cp = classify_point(ctx, s[0], s[1]);
        if (cp.cls == PointClass::z1 && std::abs(s[0]) < 1 - 1e-9 && std::abs(s[1]) < 1 - 1e-9) {
            bool seenz = false;
            for (const auto& zz : nearest->z1_interior)
                if (std::hypot(zz[0] - s[0], zz[1] - s[1]) < 1e-5) seenz = true;
            if (!seenz) nearest->z1_interior.push_back(s);
        }
    }

    // Components with no Z0/Z1 point have empty fibers throughout and do not
    // meet V; an interior Z1 singular point alone keeps a component (its
    // fiber is an arc even when every traced neighbor is inadmissible).
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const ZeroSetComponent& comp) {
                                   return comp.points.size() < 2 ||
                                          (!comp.has_admissible() && comp.z1_interior.empty());
                               }),
                comps.end());
    return comps;
}

ReconstructedRep reconstruct(const TorusKnot& k, double x, double y, double tau_value) {
    const double u = std::acos(std::clamp(x, -1.0, 1.0));
    const double v = std::acos(std::clamp(y, -1.0, 1.0));
    const double t = std::acos(std::clamp(tau_value, -1.0, 1.0));
    const Quaternion R = exp_axis(t, kK) * kI;
    ReconstructedRep rep;
    rep.M = exp_axis(u, kI);
    rep.N = exp_axis(v, R);

    const Quaternion a0 = pow_unit(rep.M, k.s + k.p) * pow_unit(rep.N, k.q - k.r);
    const Quaternion b0 = pow_unit(rep.N, -k.r) * pow_unit(rep.M, k.s);
    const Quaternion c0 = pow_unit(rep.N, -k.r) * pow_unit(rep.M, k.s + k.p) * pow_unit(rep.N, k.q);
    rep.residual = std::max(std::abs(a0.re()), std::abs(b0.re()));

    Quaternion ima{0, a0.b, a0.c, a0.d};
    const double n = ima.norm();
    if (n < 1e-9) throw BranchAmbiguity("reconstruct: degenerate puncture image");
    ima = {0, ima.b / n, ima.c / n, ima.d / n};
    const Quaternion g1 = rotation_taking(ima, kI);

    const Quaternion b1 = conjugate_by(g1, b0);
    const double phi = std::atan2(b1.d, b1.c);
    const Quaternion g2 = exp_axis(-phi / 2.0, kI);
    const Quaternion g = g2 * g1;

    const Quaternion b2 = conjugate_by(g, b0);
    const Quaternion c2 = conjugate_by(g, c0);
    rep.residual = std::max(rep.residual, std::abs(c2.d));
    rep.gamma = std::atan2(std::max(0.0, b2.c), b2.b);
    double theta = std::atan2(c2.c, c2.b);
    if (theta < 0) theta += kTwoPi;
    rep.theta = theta;
    return rep;
}

namespace {

// One maximal admissible run of a component.
struct Run {
    std::vector<ClassifiedPoint> pts;
    bool closed = false;
};

std::vector<Run> admissible_runs(const TorusContext& ctx, const ZeroSetComponent& comp) {
    const auto admissible = [](const ClassifiedPoint& cp) {
        return cp.cls == PointClass::z1 ||
               (cp.cls == PointClass::z0 && std::abs(cp.tau_value) <= 1 + kTauClass);
    };

    const std::size_t n = comp.points.size();
    std::vector<ClassifiedPoint> pts = comp.points;
    const bool loop = comp.kind == ZeroSetComponent::Kind::loop;

    bool all = true;
    for (const auto& cp : pts)
        if (!admissible(cp)) all = false;

    std::vector<Run> runs;
    if (all) {
        Run run;
        run.pts = pts;
        run.closed = loop;
        if (loop) run.pts.push_back(pts.front());  // explicit wrap point
        runs.push_back(std::move(run));
        return runs;
    }

    // rotate a loop so it starts at an inadmissible point
    if (loop) {
        std::size_t start = 0;
        while (start < n && admissible(pts[start])) ++start;
        std::rotate(pts.begin(), pts.begin() + static_cast<long>(start), pts.end());
    }

    // refine the |tau| = 1 boundary between an admissible point and its
    // inadmissible neighbor
    const auto boundary_point = [&](const ClassifiedPoint& in, const ClassifiedPoint& out) {
        double ax = in.x, ay = in.y, bx = out.x, by = out.y;
        for (int it = 0; it < 40; ++it) {
            auto mid = project_to_curve(ctx, 0.5 * (ax + bx), 0.5 * (ay + by));
            const ClassifiedPoint cp = classify_point(ctx, mid[0], mid[1]);
            const bool adm = admissible(cp);
            if (adm) {
                ax = mid[0];
                ay = mid[1];
            } else {
                bx = mid[0];
                by = mid[1];
            }
        }
        return classify_point(ctx, ax, ay);
    };

    Run cur;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (admissible(pts[i])) {
            if (cur.pts.empty() && i > 0) cur.pts.push_back(boundary_point(pts[i], pts[i - 1]));
            cur.pts.push_back(pts[i]);
        } else if (!cur.pts.empty()) {
            cur.pts.push_back(boundary_point(pts[i - 1], pts[i]));
            if (cur.pts.size() >= 2) runs.push_back(std::move(cur));
            cur = Run{};
        }
    }
    if (cur.pts.size() >= 2) runs.push_back(std::move(cur));
    return runs;
}

}  // namespace

std::vector<PillowPath> pillowcase_images(const TorusKnot& k, const ZeroSetComponent& comp,
                                          double delta) {
    const TorusContext ctx(k);
    std::vector<PillowPath> out;

    for (const Run& run : admissible_runs(ctx, comp)) {
        // densify in (x,y), patching tau through ill-defined points by
        // continuation
        struct Node {
            double x, y, tau, arclen;
        };
        std::vector<Node> nodes;
        double arclen = 0.0;
        double tau_hint = 0.0;
        bool have_hint = false;
        const auto tau_at = [&](double x, double y) {
            const ClassifiedPoint cp = classify_point(ctx, x, y);
            if (cp.cls == PointClass::z0) {
                tau_hint = cp.tau_value;
                have_hint = true;
                return cp.tau_value;
            }
            return have_hint ? tau_hint : 0.0;
        };
        // first pass to set the hint for a leading z1 point
        for (const auto& cp : run.pts)
            if (cp.cls == PointClass::z0) {
                tau_hint = cp.tau_value;
                have_hint = true;
                break;
            }

        // Image-step bound: the arccos differences catch the steepening
        // towards gamma (or gamma-theta) folds, where the cosine increments
        // alone under-measure the lift step; a fold crossing inside one
        // segment still under-measures by at most 2x, hence the delta/2
        // target.
        const auto image_step = [&](const std::array<double, 2>& c0,
                                    const std::array<double, 2>& c1) {
            double est = 0.0;
            for (int w = 0; w < 2; ++w) {
                const double a0 = std::acos(std::clamp(c0[w], -1.0, 1.0));
                const double a1 = std::acos(std::clamp(c1[w], -1.0, 1.0));
                est = std::max(est, std::abs(a1 - a0));
                const double sin_floor =
                    std::max(0.2, std::sqrt(std::max(0.0, 1 - c0[w] * c0[w])));
                est = std::max(est, std::abs(c1[w] - c0[w]) / sin_floor);
            }
            return est;
        };
        const std::function<void(const Node&, double, double, int)> extend =
            [&](const Node& from, double x, double y, int depth) {
                const double tv = tau_at(x, y);
                const auto c0 = ctx.image_cosines(from.x, from.y, from.tau);
                const auto c1 = ctx.image_cosines(x, y, tv);
                if (image_step(c0, c1) > 0.5 * delta && depth < 20) {
                    const auto mid = project_to_curve(ctx, 0.5 * (from.x + x), 0.5 * (from.y + y));
                    extend(from, mid[0], mid[1], depth + 1);
                    extend(nodes.back(), x, y, depth + 1);
                    return;
                }
                arclen += std::hypot(x - from.x, y - from.y);
                nodes.push_back({x, y, tv, arclen});
            };

        nodes.push_back({run.pts[0].x, run.pts[0].y, tau_at(run.pts[0].x, run.pts[0].y), 0.0});
        for (std::size_t i = 1; i < run.pts.size(); ++i)
            extend(nodes.back(), run.pts[i].x, run.pts[i].y, 0);

        // seed at the best-conditioned point
        int seed = -1;
        double best = -1.0;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            if (std::abs(nodes[i].tau) > 1 - 1e-3) continue;
            const auto c0 = ctx.image_cosines(nodes[i].x, nodes[i].y, nodes[i].tau);
            const auto c1 = ctx.image_cosines(nodes[i + 1].x, nodes[i + 1].y, nodes[i + 1].tau);
            const double ds = std::max(1e-300, nodes[i + 1].arclen - nodes[i].arclen);
            const double rate = std::abs(c1[0] - c0[0]) / ds;
            if (std::abs(c0[0]) > 1 - 1e-6) continue;
            if (rate > best) {
                best = rate;
                seed = static_cast<int>(i);
            }
        }
        if (seed < 0) throw BranchAmbiguity("pillowcase_images: no well-conditioned seed point");

        const ReconstructedRep rec = reconstruct(k, nodes[seed].x, nodes[seed].y, nodes[seed].tau);
        const auto cs = ctx.image_cosines(nodes[seed].x, nodes[seed].y, nodes[seed].tau);
        const double g_f = std::acos(std::clamp(cs[0], -1.0, 1.0));
        if (std::abs(g_f - rec.gamma) > 1e-5)
            throw BranchAmbiguity("pillowcase_images: seed gamma mismatch");
        const double d_f = std::acos(std::clamp(cs[1], -1.0, 1.0));
        double delta_seed;
        const double d_raw = rec.gamma - rec.theta;
        const auto mod_diff = [](double a, double b) {
            double d = std::fmod(a - b, kTwoPi);
            if (d > M_PI) d -= kTwoPi;
            if (d < -M_PI) d += kTwoPi;
            return std::abs(d);
        };
        if (mod_diff(d_f, d_raw) < 1e-5)
            delta_seed = d_f;
        else if (mod_diff(-d_f, d_raw) < 1e-5)
            delta_seed = -d_f;
        else
            throw BranchAmbiguity("pillowcase_images: seed theta branch unresolved");

        // Continue by minimal angular jump; the cosine data alone cannot
        // tell a fold bounce from a pass-through, so each step keeps only
        // the candidates consistent with the quaternion reconstruction of
        // that point.
        const std::size_t n = nodes.size();
        std::vector<double> gs(n), ds_(n);
        gs[static_cast<std::size_t>(seed)] = rec.gamma;
        ds_[static_cast<std::size_t>(seed)] = delta_seed;
        const auto step = [&](std::size_t from, std::size_t to) {
            const auto c = ctx.image_cosines(nodes[to].x, nodes[to].y, nodes[to].tau);
            const double g0 = std::acos(std::clamp(c[0], -1.0, 1.0));
            const double d0 = std::acos(std::clamp(c[1], -1.0, 1.0));
            const auto nearest = [](double cand_base, double prev) {
                return cand_base + kTwoPi * std::round((prev - cand_base) / kTwoPi);
            };
            const std::array<double, 2> gcands = {nearest(g0, gs[from]), nearest(-g0, gs[from])};
            const std::array<double, 2> dcands = {nearest(d0, ds_[from]), nearest(-d0, ds_[from])};

            bool have_rec = false;
            PillowPoint target{};
            try {
                const ReconstructedRep r =
                    reconstruct(k, nodes[to].x, nodes[to].y, nodes[to].tau);
                target = project(r.gamma, r.theta);
                have_rec = true;
            } catch (const BranchAmbiguity&) {
            }

            double best_cost = 1e300;
            double pick_g = gcands[0], pick_d = dcands[0];
            for (const double gc : gcands)
                for (const double dc : dcands) {
                    if (have_rec && !same_point(project(gc, gc - dc), target, 1e-6)) continue;
                    const double cost =
                        std::max(std::abs(gc - gs[from]), std::abs(dc - ds_[from]));
                    if (cost < best_cost) {
                        best_cost = cost;
                        pick_g = gc;
                        pick_d = dc;
                    }
                }
            if (best_cost == 1e300) {
                // no candidate matched the reconstruction; fall back to the
                // minimal jump
                for (const double gc : gcands)
                    for (const double dc : dcands) {
                        const double cost =
                            std::max(std::abs(gc - gs[from]), std::abs(dc - ds_[from]));
                        if (cost < best_cost) {
                            best_cost = cost;
                            pick_g = gc;
                            pick_d = dc;
                        }
                    }
            }
            gs[to] = pick_g;
            ds_[to] = pick_d;
        };
        for (std::size_t i = static_cast<std::size_t>(seed); i + 1 < n; ++i) step(i, i + 1);
        for (std::size_t i = static_cast<std::size_t>(seed); i-- > 0;) step(i + 1, i);

        PillowPath path;
        path.closed = run.closed;
        path.delta = delta;
        for (std::size_t i = 0; i < n; ++i) {
            path.params.push_back(nodes[i].arclen);
            path.lift.push_back({gs[i], gs[i] - ds_[i]});
        }
        out.push_back(std::move(path));
    }
    return out;
}

PillowPath pillowcase_image(const TorusKnot& k, const ZeroSetComponent& comp, double delta) {
    auto paths = pillowcase_images(k, comp, delta);
    if (paths.size() != 1)
        throw InternalInconsistency("pillowcase_image: component has multiple admissible runs");
    return std::move(paths.front());
}

PillowPath z1_fiber_image(const TorusKnot& k, double x, double y, double delta) {
    std::vector<PillowPoint> canon;
    const std::size_t n = std::max<std::size_t>(64, static_cast<std::size_t>(2 * M_PI / delta));
    std::vector<double> params;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = M_PI * static_cast<double>(i) / static_cast<double>(n);
        const ReconstructedRep rec = reconstruct(k, x, y, std::cos(t));
        canon.push_back(project(rec.gamma, rec.theta));
        params.push_back(t);
    }
    PillowPath path;
    path.params = std::move(params);
    path.lift = unfold_lift(canon);
    path.closed = false;
    path.delta = delta;
    return path;
}

CrossSection cross_section(const TorusKnot& k, double gamma) {
    const long long P = k.p, Q = k.q, R = k.r, S = k.s;
    const auto msign = [](long long e) { return (mod_pos(e, 2) == 0) ? 1.0 : -1.0; };

    CrossSection cs;
    cs.p = P;
    cs.q = Q;
    cs.r = R;
    cs.s = S;
    const Quaternion egk_i = exp_axis(gamma, kK) * kI;
    if (Q % 2 == 0) {
        // q even (p odd, r odd): M on the circle {e^{psi k}}, N traceless
        // e^{tau k} i.  With the sign parities a = (1 - (-1)^{(q-r-1)/2})/2
        // and b = (1 - (-1)^{(-r-1)/2})/2 the section solves
        //   (s+p) psi + tau = a pi,   tau - s psi = gamma + b pi,
        // so psi = ((a-b) pi - gamma)/(p+2s); p odd keeps p+2s nonzero.
        const long long a = (msign((Q - R - 1) / 2) > 0) ? 0 : 1;
        const long long b = (msign((-R - 1) / 2) > 0) ? 0 : 1;
        const double denom = static_cast<double>(P + 2 * S);
        const double psi_ = (static_cast<double>(a - b) * M_PI - gamma) / denom;
        const double tau_ = gamma + static_cast<double>(b) * M_PI + static_cast<double>(S) * psi_;
        cs.M = exp_axis(psi_, kK);
        cs.N = exp_axis(tau_, kK) * kI;
    } else if (P % 2 != 0 && R % 2 != 0) {
        cs.M = msign((P + S + Q - R - 1) / 2) * kI;
        cs.N = msign((S - R - 1) / 2) * egk_i;
    } else if (P % 2 != 0) {
        cs.M = msign((R - S + 1) / 2) * egk_i;
        cs.N = msign((P + S + Q - R - 1) / 2) * kI;
    } else {
        const double qr = static_cast<double>(Q - 2 * R);
        const double tau_ = static_cast<double>(Q - R) / qr * gamma +
                            M_PI * static_cast<double>(R * P - Q * S + 2 * R * S + Q - 2 * R) /
                                (2.0 * qr);
        const double psi_ = gamma / qr + M_PI * static_cast<double>(P) / (2.0 * qr);
        cs.M = exp_axis(tau_, kK) * kI;
        cs.N = exp_axis(psi_, kK);
    }
    return cs;
}

ArcData chi_arc_data(const TorusKnot& k) {
    const long long p = k.p, q = k.q, r = k.r, s = k.s;
    const long long two_pq = 2 * p * q;
    const auto fold = [&](long long e) {
        long long f = mod_pos(e, two_pq);
        if (f > p * q) f = two_pq - f;
        return f;
    };

    ArcData data;
    for (long long a = 1; a < p; ++a)
        for (long long b = 1; b < q; ++b) {
            if ((a + b) % 2 != 0) continue;
            const long long e0 = fold(a * s * q + b * r * p);
            const long long e1 = fold(a * s * q - b * r * p);
            ArcEntry entry;
            entry.a = a;
            entry.b = b;
            entry.c = std::min(e0, e1);
            entry.d = std::max(e0, e1);
            if (entry.c <= 0 || entry.d >= p * q || entry.c == entry.d)
                throw InternalInconsistency("chi_arc_data: endpoint not strictly inside (0, pq)");
            data.entries.push_back(entry);
        }

    if (static_cast<long long>(data.entries.size()) != (p - 1) * (q - 1) / 2)
        throw InternalInconsistency("chi_arc_data: wrong arc count");
    std::vector<long long> all;
    for (const auto& e : data.entries) {
        all.push_back(e.c);
        all.push_back(e.d);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw InternalInconsistency("chi_arc_data: endpoints not pairwise distinct");
    return data;
}

IntPoly alexander_poly(const TorusKnot& k) {
    const IntPoly num = cyclotomic_like(static_cast<int>(k.p * k.q)) * cyclotomic_like(1);
    return num.divide_exact(cyclotomic_like(static_cast<int>(k.p)))
        .divide_exact(cyclotomic_like(static_cast<int>(k.q)));
}

long long signature_lattice(long long p, long long q) {
    // Brieskorn count for the double branched cover Sigma(2,p,q):
    // sign of the (b,c) eigenvalue is + when 1/2 + b/p + c/q mod 2 lies in
    // (0,1), - when in (1,2).
    long long sigma = 0;
    const long long four_pq = 4 * p * q;
    for (long long b = 1; b < p; ++b)
        for (long long c = 1; c < q; ++c) {
            const long long v = mod_pos(p * q + 2 * b * q + 2 * c * p, four_pq);
            sigma += (v < 2 * p * q) ? 1 : -1;
        }
    return sigma;
}

std::pair<long long, long long> signature_count(const TorusKnot& k) {
    const ArcData data = chi_arc_data(k);
    long long spanning = 0;
    for (const auto& e : data.entries)
        if (2 * e.c < k.p * k.q && 2 * e.d > k.p * k.q) ++spanning;

    const long long sigma = signature_lattice(k.p, k.q);
    if (sigma >= 0 || sigma % 2 != 0)
        throw InternalInconsistency("signature_count: torus-knot signature must be negative even");
    const long long half = -sigma / 2;
    if (half != spanning)
        throw OracleMismatch("signature_count: arc-data count " + std::to_string(spanning) +
                             " vs lattice oracle " + std::to_string(half));
    return {half, spanning};
}

long long abs_alexander_sum(const TorusKnot& k) {
    const IntPoly delta = alexander_poly(k);
    long long sum = 0;
    for (const auto c : delta.coeffs) sum += std::abs(c);
    return sum;
}

}  // namespace pillowcase
