// AVX2 variant of the grid row fill.  This translation unit is the only one
// compiled with -mavx2; the caller dispatches at runtime.  Uses explicit
// mul/add intrinsics (no FMA) so each lane performs the exact operation
// sequence of the scalar reference and the outputs match bitwise.

#include "pillowcase/kernels/grid_eval.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace pillowcase::kernels::detail {

void horner_row_avx2(const double* coeffs, int ncoeffs, const double* xs, double* out,
                     std::size_t n) {
    if (ncoeffs == 0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
        return;
    }
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        __m256d acc = _mm256_set1_pd(coeffs[ncoeffs - 1]);
        for (int k = ncoeffs - 2; k >= 0; --k) {
            acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coeffs[k]));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < n) horner_row_scalar(coeffs, ncoeffs, xs + i, out + i, n - i);
}

}  // namespace pillowcase::kernels::detail

#else

namespace pillowcase::kernels::detail {

void horner_row_avx2(const double* coeffs, int ncoeffs, const double* xs, double* out,
                     std::size_t n) {
    horner_row_scalar(coeffs, ncoeffs, xs, out, n);
}

}  // namespace pillowcase::kernels::detail

#endif
