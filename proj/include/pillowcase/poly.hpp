#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pillowcase/errors.hpp"

namespace pillowcase {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw IntegerOverflow("integer overflow in add");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw IntegerOverflow("integer overflow in mul");
    return r;
}

// Univariate polynomial with exact integer coefficients, coeffs[i] on t^i.
struct IntPoly {
    std::vector<std::int64_t> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : 0;
    }

    friend IntPoly operator+(const IntPoly& x, const IntPoly& y);
    friend IntPoly operator-(const IntPoly& x, const IntPoly& y);
    friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
    IntPoly operator-() const;

    // Exact division; throws InternalInconsistency on a nonzero remainder.
    IntPoly divide_exact(const IntPoly& divisor) const;

    double eval(double t) const;
    // Evaluation at e^{i phi} (for unit-circle root checks).
    void eval_unit_circle(double phi, double& re, double& im) const;

    bool operator==(const IntPoly&) const = default;
};

// t^n - 1.
IntPoly cyclotomic_like(int n);

// Bivariate polynomial with exact integer coefficients, coeff(i,j) on x^i y^j.
struct BivariatePoly {
    int nx = 0, ny = 0;  // array dims: degrees + 1 (0 x 0 encodes the zero polynomial)
    std::vector<std::int64_t> c;

    BivariatePoly() = default;
    BivariatePoly(int nx_, int ny_) : nx(nx_), ny(ny_), c(static_cast<std::size_t>(nx_) * ny_, 0) {}

    std::int64_t coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= nx || j >= ny) return 0;
        return c[static_cast<std::size_t>(i) * ny + j];
    }
    std::int64_t& at(int i, int j) { return c[static_cast<std::size_t>(i) * ny + j]; }

    void trim();
    bool is_zero() const;

    friend BivariatePoly operator+(const BivariatePoly& x, const BivariatePoly& y);
    friend BivariatePoly operator-(const BivariatePoly& x, const BivariatePoly& y);
    friend BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y);

    double eval(double x, double y) const;
    // d/dx and d/dy (exact).
    BivariatePoly dx() const;
    BivariatePoly dy() const;

    // Row view used by the grid kernels: coefficients of x^i after collapsing
    // y at a fixed value, a_i = sum_j c(i,j) y^j.
    void collapse_y(double y, std::vector<double>& xcoeffs) const;

    std::string to_string() const;
    bool operator==(const BivariatePoly&) const = default;
};

// u(x) * v(y) as a bivariate polynomial.
BivariatePoly outer(const IntPoly& u, const IntPoly& v);

// Chebyshev T_n with cos(n u) = T_n(cos u); T_{-n} = T_n.
IntPoly chebyshev_T(int n);
// Chebyshev S_n with sin(n u) = sin(u) S_n(cos u); S_{-n} = -S_n, S_0 = 0.
IntPoly chebyshev_S(int n);

// True when x = lambda * y for a nonzero rational lambda (exact integer
// cross-multiplication).
bool proportional(const BivariatePoly& x, const BivariatePoly& y);

}  // namespace pillowcase
