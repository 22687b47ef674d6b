#include "pillowcase/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pillowcase {

IntPoly operator+(const IntPoly& x, const IntPoly& y) {
    IntPoly r;
    r.coeffs.resize(std::max(x.coeffs.size(), y.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = checked_add(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.coeffs) v = -v;
    return r;
}

IntPoly operator-(const IntPoly& x, const IntPoly& y) { return x + (-y); }

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    IntPoly r;
    r.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
            r.coeffs[i + j] = checked_add(r.coeffs[i + j], checked_mul(x.coeffs[i], y.coeffs[j]));
        }
    }
    r.trim();
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw InternalInconsistency("division by zero polynomial");
    IntPoly rem = *this;
    IntPoly quot;
    const int dd = divisor.degree();
    const std::int64_t lead = divisor.coeffs.back();
    if (rem.degree() >= dd) quot.coeffs.assign(rem.degree() - dd + 1, 0);
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const std::int64_t top = rem.coeffs.back();
        if (top % lead != 0) throw InternalInconsistency("inexact polynomial division");
        const std::int64_t q = top / lead;
        quot.coeffs[shift] = q;
        for (int i = 0; i <= dd; ++i) {
            rem.coeffs[shift + i] =
                checked_add(rem.coeffs[shift + i], -checked_mul(q, divisor.coeffs[i]));
        }
        rem.trim();
    }
    if (!rem.is_zero()) throw InternalInconsistency("nonzero remainder in exact division");
    quot.trim();
    return quot;
}

double IntPoly::eval(double t) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + static_cast<double>(coeffs[i]);
    return acc;
}

void IntPoly::eval_unit_circle(double phi, double& re, double& im) const {
    re = 0.0;
    im = 0.0;
    const double cr = std::cos(phi), ci = std::sin(phi);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const double nr = re * cr - im * ci + static_cast<double>(coeffs[i]);
        const double ni = re * ci + im * cr;
        re = nr;
        im = ni;
    }
}

IntPoly cyclotomic_like(int n) {
    IntPoly p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[0] = -1;
    p.coeffs[n] = 1;
    return p;
}

void BivariatePoly::trim() {
    int mx = 0, my = 0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (coeff(i, j) != 0) {
                mx = std::max(mx, i + 1);
                my = std::max(my, j + 1);
            }
    if (mx == nx && my == ny) return;
    BivariatePoly t(mx, my);
    for (int i = 0; i < mx; ++i)
        for (int j = 0; j < my; ++j) t.at(i, j) = coeff(i, j);
    *this = std::move(t);
}

bool BivariatePoly::is_zero() const {
    for (auto v : c)
        if (v != 0) return false;
    return true;
}

BivariatePoly operator+(const BivariatePoly& x, const BivariatePoly& y) {
    BivariatePoly r(std::max(x.nx, y.nx), std::max(x.ny, y.ny));
    for (int i = 0; i < r.nx; ++i)
        for (int j = 0; j < r.ny; ++j) r.at(i, j) = checked_add(x.coeff(i, j), y.coeff(i, j));
    r.trim();
    return r;
}

BivariatePoly operator-(const BivariatePoly& x, const BivariatePoly& y) {
    BivariatePoly r(std::max(x.nx, y.nx), std::max(x.ny, y.ny));
    for (int i = 0; i < r.nx; ++i)
        for (int j = 0; j < r.ny; ++j) r.at(i, j) = checked_add(x.coeff(i, j), -y.coeff(i, j));
    r.trim();
    return r;
}

BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    BivariatePoly r(x.nx + y.nx - 1, x.ny + y.ny - 1);
    for (int i = 0; i < x.nx; ++i)
        for (int j = 0; j < x.ny; ++j) {
            const std::int64_t xv = x.coeff(i, j);
            if (xv == 0) continue;
            for (int k = 0; k < y.nx; ++k)
                for (int l = 0; l < y.ny; ++l) {
                    const std::int64_t yv = y.coeff(k, l);
                    if (yv == 0) continue;
                    r.at(i + k, j + l) = checked_add(r.at(i + k, j + l), checked_mul(xv, yv));
                }
        }
    r.trim();
    return r;
}

double BivariatePoly::eval(double x, double y) const {
    double acc = 0.0;
    for (int i = nx; i-- > 0;) {
        double row = 0.0;
        for (int j = ny; j-- > 0;) row = row * y + static_cast<double>(coeff(i, j));
        acc = acc * x + row;
    }
    return acc;
}

BivariatePoly BivariatePoly::dx() const {
    if (nx <= 1) return {};
    BivariatePoly r(nx - 1, ny);
    for (int i = 1; i < nx; ++i)
        for (int j = 0; j < ny; ++j) r.at(i - 1, j) = checked_mul(coeff(i, j), i);
    r.trim();
    return r;
}

BivariatePoly BivariatePoly::dy() const {
    if (ny <= 1) return {};
    BivariatePoly r(nx, ny - 1);
    for (int i = 0; i < nx; ++i)
        for (int j = 1; j < ny; ++j) r.at(i, j - 1) = checked_mul(coeff(i, j), j);
    r.trim();
    return r;
}

void BivariatePoly::collapse_y(double y, std::vector<double>& xcoeffs) const {
    xcoeffs.assign(std::max(nx, 1), 0.0);
    for (int i = 0; i < nx; ++i) {
        double row = 0.0;
        for (int j = ny; j-- > 0;) row = row * y + static_cast<double>(coeff(i, j));
        xcoeffs[i] = row;
    }
}

std::string BivariatePoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = nx; i-- > 0;)
        for (int j = ny; j-- > 0;) {
            const std::int64_t v = coeff(i, j);
            if (v == 0) continue;
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0)
                os << "-";
            first = false;
            const std::int64_t av = std::abs(v);
            const bool unit = (av == 1) && (i > 0 || j > 0);
            if (!unit) os << av;
            if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
            if (j > 0) os << "y" << (j > 1 ? "^" + std::to_string(j) : "");
        }
    if (first) os << "0";
    return os.str();
}

BivariatePoly outer(const IntPoly& u, const IntPoly& v) {
    if (u.is_zero() || v.is_zero()) return {};
    BivariatePoly r(u.degree() + 1, v.degree() + 1);
    for (int i = 0; i <= u.degree(); ++i)
        for (int j = 0; j <= v.degree(); ++j) r.at(i, j) = checked_mul(u.coeff(i), v.coeff(j));
    return r;
}

IntPoly chebyshev_T(int n) {
    n = std::abs(n);
    IntPoly prev({1});
    if (n == 0) return prev;
    IntPoly cur({0, 1});
    const IntPoly two_x({0, 2});
    for (int i = 1; i < n; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly chebyshev_S(int n) {
    const bool neg = n < 0;
    n = std::abs(n);
    IntPoly prev;  // S_0 = 0
    if (n == 0) return prev;
    IntPoly cur({1});  // S_1 = 1
    const IntPoly two_x({0, 2});
    for (int i = 1; i < n; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return neg ? -cur : cur;
}

bool proportional(const BivariatePoly& x, const BivariatePoly& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    if (x.nx != y.nx || x.ny != y.ny) {
        BivariatePoly xt = x, yt = y;
        xt.trim();
        yt.trim();
        if (xt.nx != yt.nx || xt.ny != yt.ny) return false;
        return proportional(xt, yt);
    }
    std::int64_t xl = 0, yl = 0;
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        if ((x.c[i] == 0) != (y.c[i] == 0)) return false;
        if (x.c[i] != 0 && xl == 0) {
            xl = x.c[i];
            yl = y.c[i];
        }
    }
    if (xl == 0) return true;
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        if (checked_mul(x.c[i], yl) != checked_mul(y.c[i], xl)) return false;
    }
    return true;
}

}  // namespace pillowcase
