#include <doctest.h>

#include <numeric>
#include <random>

#include "pillowcase/two_bridge.hpp"

using namespace pillowcase;

namespace {
std::mt19937_64 rng(31337);
}

TEST_CASE("knot validation") {
    CHECK_NOTHROW(TwoBridgeKnot(-3, 1));
    CHECK_THROWS_AS(TwoBridgeKnot(4, 1), OutOfDomain);   // even p
    CHECK_THROWS_AS(TwoBridgeKnot(0, 1), OutOfDomain);
    CHECK_THROWS_AS(TwoBridgeKnot(9, 3), NotCoprime);
}

TEST_CASE("odd continued fraction expansions") {
    {
        const auto cf = odd_cfe(TwoBridgeKnot(-3, 1));
        CHECK(cf.terms == std::vector<long long>{-3});
    }
    {
        const auto cf = odd_cfe(TwoBridgeKnot(-5, 3));
        CHECK(cf.terms == std::vector<long long>{-2, 2, 1});
        const auto [num, den] = cf.eval();
        CHECK(num == -5);
        CHECK(den == 3);
    }
    {
        const auto cf = odd_cfe(TwoBridgeKnot(-11, 5));
        CHECK(cf.terms.size() % 2 == 1);
        for (long long t : cf.terms) CHECK(t != 0);
        const auto [num, den] = cf.eval();
        CHECK(num == -11);
        CHECK(den == 5);
    }
    // exactness on random coprime inputs, both signs, p/q inside (0,1) too
    std::uniform_int_distribution<long long> pick(-199, 199);
    int done = 0;
    while (done < 300) {
        const long long p = pick(rng) | 1;
        const long long q = pick(rng);
        if (p == 0 || q == 0 || std::gcd(std::abs(p), std::abs(q)) != 1) continue;
        ++done;
        const auto cf = odd_cfe(TwoBridgeKnot(p, q));
        CHECK(cf.terms.size() % 2 == 1);
        for (long long t : cf.terms) CHECK(t != 0);
        const auto [num, den] = cf.eval();
        long long pn = p, pd = q;
        if (pd < 0) {
            pn = -pn;
            pd = -pd;
        }
        CHECK(num == pn);
        CHECK(den == pd);
    }
}

TEST_CASE("twist matrices") {
    const Mat3 id = twist_matrix(0, TwistOrientation::vertical);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));

    // M(a) M(-a) = 1 and M(m) M(n) = M(m+n)
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            for (auto orient : {TwistOrientation::vertical, TwistOrientation::horizontal}) {
                const Mat3 prod = mat_mul(twist_matrix(a, orient), twist_matrix(b, orient));
                CHECK(prod == twist_matrix(a + b, orient));
            }
        }

    // M(3) applied to (t,t,0) -> (t, 4t, 3t)
    const auto v = mat_apply(twist_matrix(3, TwistOrientation::vertical), {1, 1, 0});
    CHECK(v == std::array<long long, 3>{1, 4, 3});
}

TEST_CASE("pillowcase_line reproduces the stated curves") {
    const LineSlope tref = pillowcase_line(TwoBridgeKnot(-3, 1));
    CHECK(tref.m == 1);
    CHECK(tref.n == 4);
    const LineSlope fig8 = pillowcase_line(TwoBridgeKnot(-5, 3));
    CHECK(fig8.m == 3);
    CHECK(fig8.n == 8);
    const LineSlope k72 = pillowcase_line(TwoBridgeKnot(-11, 5));
    CHECK(k72.m == 5);
    CHECK(k72.n == 16);
}

TEST_CASE("pillowcase_line = +-(q, q-p) on random knots (Lemma-level oracle)") {
    std::uniform_int_distribution<long long> pick(-199, 199);
    int done = 0;
    while (done < 200) {
        const long long p = pick(rng) | 1;
        const long long q = pick(rng);
        if (p == 0 || q == 0 || std::gcd(std::abs(p), std::abs(q)) != 1) continue;
        ++done;
        const LineSlope slope = pillowcase_line(TwoBridgeKnot(p, q));
        const bool plus = slope.m == q && slope.n == q - p;
        const bool minus = slope.m == -q && slope.n == -(q - p);
        CHECK((plus || minus));
        CHECK(slope.m >= 0);
    }
}

TEST_CASE("restriction curve endpoints and embedding") {
    const PillowPath tref = restriction_curve(TwoBridgeKnot(-3, 1), 256);
    CHECK(std::abs(tref.lift.front()[0]) < 1e-15);
    CHECK(std::abs(tref.lift.front()[1]) < 1e-15);
    CHECK(std::abs(tref.lift.back()[0] - M_PI) < 1e-12);
    CHECK(std::abs(tref.lift.back()[1] - 4 * M_PI) < 1e-12);
    CHECK(is_corner(tref.canonical(0)));

    // embedding: pairwise distinct projected samples for K(-5/3)
    const PillowPath fig8 = restriction_curve(TwoBridgeKnot(-5, 3), 128);
    for (std::size_t i = 0; i < fig8.size(); i += 3)
        for (std::size_t j = i + 3; j < fig8.size(); j += 3) {
            const double dt = fig8.params[j] - fig8.params[i];
            if (dt < 0.05) continue;
            CHECK(quotient_distance(fig8.canonical(i), fig8.canonical(j)) > 1e-6);
        }
}

TEST_CASE("unperturbed intersections") {
    {
        const auto pts = unperturbed_intersections(TwoBridgeKnot(-3, 1));
        REQUIRE(pts.size() == 2);
        CHECK(same_point(pts[0], PillowPoint{0, 0}));
        CHECK(same_point(pts[1], project(2 * M_PI / 3, 2 * M_PI / 3)));
    }
    CHECK(unperturbed_intersections(TwoBridgeKnot(-11, 5)).size() == 6);
    for (const auto& p : unperturbed_intersections(TwoBridgeKnot(-11, 5))) {
        bool on_diag = false;
        for (int i = 0; i <= 4096; ++i) {
            const double t = M_PI * i / 4096.0;
            if (quotient_distance(p, project(t, t)) < 2e-3) on_diag = true;
        }
        CHECK(on_diag);
    }
}
