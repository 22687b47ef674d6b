#include <doctest.h>

#include <cstring>
#include <random>

#include "pillowcase/kernels/grid_eval.hpp"
#include "pillowcase/torus.hpp"

using namespace pillowcase;
using namespace pillowcase::kernels;

namespace {
std::mt19937_64 rng(90210);
}

TEST_CASE("grid kernel matches direct polynomial evaluation") {
    const BivariatePoly poly = cutout_poly(TorusKnot(4, 5));
    GridSpec spec;
    spec.nx = 97;
    spec.ny = 113;
    spec.x0 = -1.0;
    spec.dx = 2.0 / 96;
    spec.y0 = -1.0;
    spec.dy = 2.0 / 112;
    std::vector<double> out(static_cast<std::size_t>(spec.nx) * spec.ny);
    eval_poly_grid(poly, spec, out.data(), Backend::scalar);
    for (int j = 0; j < spec.ny; j += 7)
        for (int i = 0; i < spec.nx; i += 5) {
            const double x = spec.x0 + spec.dx * i;
            const double y = spec.y0 + spec.dy * j;
            CHECK(out[static_cast<std::size_t>(j) * spec.nx + i] ==
                  doctest::Approx(poly.eval(x, y)).epsilon(1e-12));
        }
}

TEST_CASE("scalar and AVX2 variants are bitwise equivalent") {
    if (!avx2_supported()) {
        MESSAGE("AVX2 not available; dispatch resolves to scalar");
        CHECK(std::strcmp(dispatched_backend(), "scalar") == 0);
        return;
    }
    CHECK(std::strcmp(dispatched_backend(), "avx2") == 0);

    std::uniform_int_distribution<int> dim(1, 9);
    std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
    for (int trial = 0; trial < 40; ++trial) {
        BivariatePoly poly(dim(rng), dim(rng));
        for (auto& c : poly.c) c = coeff(rng);
        GridSpec spec;
        spec.nx = 1 + static_cast<int>(rng() % 260);  // exercise the vector tail
        spec.ny = 1 + static_cast<int>(rng() % 40);
        spec.x0 = -1.3;
        spec.dx = 2.6 / std::max(1, spec.nx - 1);
        spec.y0 = -0.9;
        spec.dy = 1.8 / std::max(1, spec.ny - 1);
        std::vector<double> a(static_cast<std::size_t>(spec.nx) * spec.ny);
        std::vector<double> b(a.size());
        eval_poly_grid(poly, spec, a.data(), Backend::scalar);
        eval_poly_grid(poly, spec, b.data(), Backend::avx2);
        CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
    }

    // the runtime-dispatched path agrees as well
    const BivariatePoly poly = cutout_poly(TorusKnot(3, 5));
    GridSpec spec;
    spec.nx = 513;
    spec.ny = 257;
    spec.x0 = -1;
    spec.dx = 2.0 / 512;
    spec.y0 = -1;
    spec.dy = 2.0 / 256;
    std::vector<double> a(static_cast<std::size_t>(spec.nx) * spec.ny), b(a.size());
    eval_poly_grid(poly, spec, a.data(), Backend::scalar);
    eval_poly_grid(poly, spec, b.data(), Backend::automatic);
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("zero polynomial fills zeros") {
    BivariatePoly zero;
    GridSpec spec;
    spec.nx = 8;
    spec.ny = 3;
    spec.x0 = 0;
    spec.dx = 0.1;
    spec.y0 = 0;
    spec.dy = 0.1;
    std::vector<double> out(24, 7.0);
    eval_poly_grid(zero, spec, out.data(), Backend::automatic);
    for (double v : out) CHECK(v == 0.0);
}
