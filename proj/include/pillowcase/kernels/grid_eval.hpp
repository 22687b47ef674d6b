#pragma once

#include <cstddef>
#include <vector>

#include "pillowcase/poly.hpp"

namespace pillowcase::kernels {

// Uniform evaluation grid: point (col i, row j) is (x0 + i*dx, y0 + j*dy).
// Output layout is row major in y: out[j * nx + i].
struct GridSpec {
    int nx = 0, ny = 0;
    double x0 = 0.0, dx = 0.0;
    double y0 = 0.0, dy = 0.0;
};

enum class Backend { automatic, scalar, avx2 };

// Dense evaluation of a bivariate polynomial over the grid.  Per row the
// polynomial collapses to a univariate in x (exact in the scalar reference
// sense); the row fill is the data-parallel inner loop, dispatched at
// runtime to AVX2 when the CPU supports it.  The scalar and AVX2 variants
// perform the identical IEEE operation sequence per point and produce
// bitwise-equal output.
void eval_poly_grid(const BivariatePoly& poly, const GridSpec& grid, double* out,
                    Backend backend = Backend::automatic);

// Name of the backend `automatic` resolves to ("avx2" or "scalar").
const char* dispatched_backend();

bool avx2_supported();

namespace detail {
// Horner evaluation of one row: out[i] = sum_k coeffs[k] * xs[i]^k.
void horner_row_scalar(const double* coeffs, int ncoeffs, const double* xs, double* out,
                       std::size_t n);
void horner_row_avx2(const double* coeffs, int ncoeffs, const double* xs, double* out,
                     std::size_t n);
}  // namespace detail

}  // namespace pillowcase::kernels
