#include "pillowcase/kernels/grid_eval.hpp"

#include <stdexcept>

namespace pillowcase::kernels {

namespace detail {

void horner_row_scalar(const double* coeffs, int ncoeffs, const double* xs, double* out,
                       std::size_t n) {
    if (ncoeffs == 0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double x = xs[i];
        double acc = coeffs[ncoeffs - 1];
        for (int k = ncoeffs - 2; k >= 0; --k) acc = acc * x + coeffs[k];
        out[i] = acc;
    }
}

}  // namespace detail

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

using RowFn = void (*)(const double*, int, const double*, double*, std::size_t);

RowFn pick_row_fn() {
#if defined(__x86_64__) || defined(__i386__)
    if (avx2_supported()) return &detail::horner_row_avx2;
#endif
    return &detail::horner_row_scalar;
}

RowFn dispatched_row_fn() {
    static const RowFn fn = pick_row_fn();
    return fn;
}

}  // namespace

const char* dispatched_backend() {
    return dispatched_row_fn() == &detail::horner_row_scalar ? "scalar" : "avx2";
}

void eval_poly_grid(const BivariatePoly& poly, const GridSpec& grid, double* out,
                    Backend backend) {
    RowFn row = nullptr;
    switch (backend) {
        case Backend::automatic:
            row = dispatched_row_fn();
            break;
        case Backend::scalar:
            row = &detail::horner_row_scalar;
            break;
        case Backend::avx2:
            if (!avx2_supported()) throw std::runtime_error("AVX2 not supported on this CPU");
            row = &detail::horner_row_avx2;
            break;
    }

    std::vector<double> xs(static_cast<std::size_t>(grid.nx));
    for (int i = 0; i < grid.nx; ++i) xs[static_cast<std::size_t>(i)] = grid.x0 + grid.dx * i;

    std::vector<double> xcoeffs;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y0 + grid.dy * j;
        poly.collapse_y(y, xcoeffs);
        row(xcoeffs.data(), static_cast<int>(xcoeffs.size()), xs.data(),
            out + static_cast<std::size_t>(j) * grid.nx, static_cast<std::size_t>(grid.nx));
    }
}

}  // namespace pillowcase::kernels
