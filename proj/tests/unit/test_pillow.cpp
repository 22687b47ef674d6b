#include <doctest.h>

#include <random>
#include <sstream>

#include "pillowcase/pillow.hpp"

using namespace pillowcase;

namespace {
std::mt19937_64 rng(77001);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
}  // namespace

TEST_CASE("project canonical representatives") {
    const PillowPoint a = project(3 * M_PI / 2, M_PI / 2);
    CHECK(a.gamma == doctest::Approx(M_PI / 2));
    CHECK(a.theta == doctest::Approx(3 * M_PI / 2));

    const PillowPoint b = project(M_PI / 2, M_PI / 2);
    CHECK(b.gamma == doctest::Approx(M_PI / 2));
    CHECK(b.theta == doctest::Approx(M_PI / 2));

    // the trefoil point x_1
    const PillowPoint c = project(-2 * M_PI / 3, -8 * M_PI / 3);
    CHECK(c.gamma == doctest::Approx(2 * M_PI / 3));
    CHECK(c.theta == doctest::Approx(2 * M_PI / 3));
}

TEST_CASE("project is G-invariant and idempotent") {
    for (int it = 0; it < 10000; ++it) {
        const double x = uniform(-20, 20), y = uniform(-20, 20);
        const PillowPoint p = project(x, y);
        CHECK(quotient_distance(p, project(-x, -y)) < kTauPoint);
        CHECK(quotient_distance(p, project(x + kTwoPi, y)) < kTauPoint);
        CHECK(quotient_distance(p, project(x, y + kTwoPi)) < kTauPoint);
        const PillowPoint pp = project(p.gamma, p.theta);
        CHECK(std::abs(pp.gamma - p.gamma) < 1e-12);
        CHECK(std::abs(pp.theta - p.theta) < 1e-12);
    }
}

TEST_CASE("same_point honors the boundary identifications") {
    CHECK(same_point(project(0, M_PI / 3), project(0, 5 * M_PI / 3)));
    CHECK(same_point(project(M_PI / 2, 0), project(M_PI / 2, kTwoPi)));
    CHECK(same_point(project(M_PI, 0.7), project(M_PI, kTwoPi - 0.7)));
    CHECK(!same_point(project(M_PI / 3, M_PI / 3), project(M_PI / 3, M_PI / 2)));
}

TEST_CASE("is_corner") {
    CHECK(is_corner(project(0, 0)));
    CHECK(is_corner(project(M_PI, M_PI)));
    CHECK(is_corner(project(M_PI, 0)));
    CHECK(is_corner(project(0, M_PI)));
    CHECK(is_corner(project(3 * M_PI, 7 * M_PI)));
    CHECK(!is_corner(project(M_PI / 2, M_PI / 2)));
}

TEST_CASE("psi quadruple: values, relation, special points") {
    {
        const auto v = psi(0, 0);
        for (const auto& q : v) CHECK(dist(q, kI) < 1e-15);
    }
    {
        const auto v = psi(M_PI / 2, M_PI / 2);
        CHECK(dist(v[0], kI) < 1e-15);
        CHECK(dist(v[1], kJ) < 1e-15);
        CHECK(dist(v[2], kJ) < 1e-15);
        CHECK(dist(v[3], kI) < 1e-15);
    }
    for (int it = 0; it < 2000; ++it) {
        const double g = uniform(-10, 10), t = uniform(-10, 10);
        const auto v = psi(g, t);
        for (const auto& q : v) CHECK(q.is_pure_unit(1e-12));
        CHECK(dist(v[1] * v[0], v[2] * v[3]) < 1e-12);  // ba = cd
    }
}

TEST_CASE("psi conjugacy matches pillowcase orbits (forward direction)") {
    // psi(g,t) and psi(-g,-t) are conjugate by e^{c i} fixing a = i; the
    // lattice translates give equal quadruples.
    for (int it = 0; it < 500; ++it) {
        const double g = uniform(-5, 5), t = uniform(-5, 5);
        const auto v1 = psi(g, t);
        const auto v2 = psi(-g, -t);
        // conjugating by i: e^{gk}i -> i e^{gk} i (-i) = e^{-gk} i
        const Quaternion conj = kI;
        for (int idx = 0; idx < 4; ++idx)
            CHECK(dist(conjugate_by(conj, v2[idx]), v1[idx]) < 1e-12);
        const auto v3 = psi(g + kTwoPi, t);
        const auto v4 = psi(g, t + kTwoPi);
        for (int idx = 0; idx < 4; ++idx) {
            CHECK(dist(v3[idx], v1[idx]) < 1e-12);
            CHECK(dist(v4[idx], v1[idx]) < 1e-12);
        }
    }
}

TEST_CASE("diagonal arc endpoints and density") {
    const PillowPath arc = diagonal_arc();
    REQUIRE(arc.size() >= 2);
    CHECK(same_point(arc.canonical(0), PillowPoint{0, 0}));
    CHECK(same_point(arc.canonical(arc.size() - 1), PillowPoint{M_PI, M_PI}));
    bool mid_found = false;
    std::size_t corner_hits = 0;
    for (std::size_t i = 0; i < arc.size(); ++i) {
        const PillowPoint p = arc.canonical(i);
        CHECK(same_point(p, project(arc.params[i], arc.params[i])));
        if (same_point(p, PillowPoint{M_PI / 2, M_PI / 2}, 1e-2)) mid_found = true;
        if (is_corner(p, 1e-9)) ++corner_hits;
    }
    CHECK(mid_found);
    CHECK(corner_hits == 2);  // corners exactly at the endpoints
    for (std::size_t i = 1; i < arc.size(); ++i) {
        const double step = std::max(std::abs(arc.lift[i][0] - arc.lift[i - 1][0]),
                                     std::abs(arc.lift[i][1] - arc.lift[i - 1][1]));
        CHECK(step < arc.delta);
    }
}

TEST_CASE("sample_path densifies steep parameterizations") {
    const auto path = sample_path(
        [](double t) {
            return std::array<double, 2>{5 * t, 16 * t};
        },
        0.0, M_PI, 64, false);
    for (std::size_t i = 1; i < path.size(); ++i) {
        const double step = std::max(std::abs(path.lift[i][0] - path.lift[i - 1][0]),
                                     std::abs(path.lift[i][1] - path.lift[i - 1][1]));
        CHECK(step < path.delta);
    }
}

TEST_CASE("path serialization format") {
    const PillowPath arc = diagonal_arc();
    std::ostringstream os;
    write_path(os, arc);
    const std::string text = os.str();
    CHECK(text.find('\t') != std::string::npos);
    std::istringstream in(text);
    double t, g, th;
    std::size_t rows = 0;
    while (in >> t >> g >> th) ++rows;
    CHECK(rows == arc.size());
}

TEST_CASE("unfold_lift reverses canonical folding") {
    // canonical points of a straight line re-unfold into a straight line
    std::vector<PillowPoint> canon;
    for (int i = 0; i <= 400; ++i) {
        const double t = M_PI * i / 400.0;
        canon.push_back(project(t, 4 * t));
    }
    const auto lift = unfold_lift(canon);
    for (std::size_t i = 0; i < lift.size(); ++i) {
        const double t = M_PI * static_cast<double>(i) / 400.0;
        CHECK(quotient_distance(project(lift[i][0], lift[i][1]), project(t, 4 * t)) < 1e-9);
        if (i >= 2) {
            // straightness: collinearity of consecutive unfolded points
            const double ax = lift[i - 1][0] - lift[i - 2][0];
            const double ay = lift[i - 1][1] - lift[i - 2][1];
            const double bx = lift[i][0] - lift[i - 1][0];
            const double by = lift[i][1] - lift[i - 1][1];
            CHECK(std::abs(ax * by - ay * bx) < 1e-9);
        }
    }
}
