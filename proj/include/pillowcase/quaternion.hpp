#pragma once

#include <cmath>
#include <ostream>

#include "pillowcase/errors.hpp"

namespace pillowcase {

// Membership tolerance for "unit" and "pure" predicates.  Double precision
// with O(10^3) composed products stays well inside this.
inline constexpr double kTauUnit = 1e-9;

// Quaternion a + b*i + c*j + d*k.  SU(2) is the unit sphere, su(2) the pure
// (a = 0) part, and C(i) the pure unit 2-sphere of traceless elements.
struct Quaternion {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    friend constexpr Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend constexpr Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) {
        return {s * q.a, s * q.b, s * q.c, s * q.d};
    }

    // Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
    }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    constexpr double re() const { return a; }
    constexpr double norm_sq() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm_sq()); }

    // Inverse of a unit quaternion.
    constexpr Quaternion inv_unit() const { return conj(); }

    Quaternion normalized() const {
        const double n = norm();
        return {a / n, b / n, c / n, d / n};
    }

    bool is_unit(double tol = kTauUnit) const { return std::abs(norm() - 1.0) <= tol; }
    bool is_pure_unit(double tol = kTauUnit) const { return is_unit(tol) && std::abs(a) <= tol; }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << q.a << (q.b < 0 ? "" : "+") << q.b << "i" << (q.c < 0 ? "" : "+") << q.c << "j"
                  << (q.d < 0 ? "" : "+") << q.d << "k";
    }
};

inline constexpr Quaternion kOne{1, 0, 0, 0};
inline constexpr Quaternion kI{0, 1, 0, 0};
inline constexpr Quaternion kJ{0, 0, 1, 0};
inline constexpr Quaternion kK{0, 0, 0, 1};

inline double dist(const Quaternion& x, const Quaternion& y) { return (x - y).norm(); }

// Euclidean dot product of the imaginary parts (Q1.Q2 on C(i)).
inline constexpr double im_dot(const Quaternion& x, const Quaternion& y) {
    return x.b * y.b + x.c * y.c + x.d * y.d;
}

inline void require_pure_unit(const Quaternion& q, const char* who) {
    if (!q.is_pure_unit()) throw NotPureUnit(std::string(who) + ": argument is not in C(i)");
}

// e^{tQ} = cos(t) + sin(t) Q for Q in C(i).
inline Quaternion exp_axis(double t, const Quaternion& axis) {
    require_pure_unit(axis, "exp_axis");
    const double c = std::cos(t), s = std::sin(t);
    return {c, s * axis.b, s * axis.c, s * axis.d};
}

// Re(e^{t1 Q1} e^{t2 Q2}) = cos t1 cos t2 - sin t1 sin t2 (Q1.Q2).
inline double re_product(double t1, const Quaternion& q1, double t2, const Quaternion& q2) {
    require_pure_unit(q1, "re_product");
    require_pure_unit(q2, "re_product");
    return std::cos(t1) * std::cos(t2) - std::sin(t1) * std::sin(t2) * im_dot(q1, q2);
}

// g q g^{-1} for unit g; preserves Re and norm.
inline Quaternion conjugate_by(const Quaternion& g, const Quaternion& q) {
    return g * q * g.conj();
}

inline Quaternion commutator(const Quaternion& x, const Quaternion& y) {
    return x * y * x.conj() * y.conj();
}

// Integer power of a unit quaternion by repeated squaring.
inline Quaternion pow_unit(Quaternion q, long long n) {
    if (n < 0) {
        q = q.conj();
        n = -n;
    }
    Quaternion acc = kOne;
    while (n > 0) {
        if (n & 1) acc = acc * q;
        q = q * q;
        n >>= 1;
    }
    return acc;
}

// Unit g with g p g^{-1} = q for pure unit p, q: rotate along the great
// circle from p to q (any choice works when p = -q).
inline Quaternion rotation_taking(const Quaternion& p, const Quaternion& q) {
    const double cosang = im_dot(p, q);
    if (cosang < -1.0 + 1e-14) {
        // p = -q: pick any axis perpendicular to p.
        Quaternion axis{0, -p.c, p.b, 0};
        if (axis.norm() < 1e-7) axis = Quaternion{0, -p.d, 0, p.b};
        return exp_axis(M_PI / 2.0, axis.normalized());
    }
    // axis = p x q (imaginary cross product), half the angle between them.
    Quaternion axis{0, p.c * q.d - p.d * q.c, p.d * q.b - p.b * q.d, p.b * q.c - p.c * q.b};
    const double n = axis.norm();
    if (n < 1e-14) return kOne;
    const double ang = std::atan2(n, cosang);
    return exp_axis(ang / 2.0, {0, axis.b / n, axis.c / n, axis.d / n});
}

}  // namespace pillowcase
