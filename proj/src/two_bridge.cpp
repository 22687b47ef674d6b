#include "pillowcase/two_bridge.hpp"

#include <numeric>

#include "pillowcase/intersect.hpp"
#include "pillowcase/poly.hpp"

namespace pillowcase {

TwoBridgeKnot::TwoBridgeKnot(long long p_, long long q_) : p(p_), q(q_) {
    if (p == 0 || p % 2 == 0) throw OutOfDomain("TwoBridgeKnot: p must be odd and nonzero");
    if (q == 0) throw OutOfDomain("TwoBridgeKnot: q must be nonzero");
    if (std::gcd(std::abs(p), std::abs(q)) != 1) throw NotCoprime("TwoBridgeKnot: gcd(p,q) != 1");
}

std::pair<long long, long long> ContinuedFraction::eval() const {
    if (terms.empty()) throw InternalInconsistency("empty continued fraction");
    long long num = terms.back(), den = 1;
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        // a_i + den/num
        const long long nnum = checked_add(checked_mul(terms[i], num), den);
        den = num;
        num = nnum;
    }
    if (den < 0) {
        den = -den;
        num = -num;
    }
    const long long g = std::gcd(std::abs(num), den);
    return {num / g, den / g};
}

namespace {

long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

}  // namespace

ContinuedFraction odd_cfe(const TwoBridgeKnot& k) {
    long long num = k.p, den = k.q;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    ContinuedFraction cf;
    while (true) {
        long long a = floor_div(num, den);
        long long rem = num - a * den;
        if (a == 0) {
            // keep terms nonzero; continue with a negative remainder
            a = 1;
            rem = num - den;
        }
        cf.terms.push_back(a);
        if (rem == 0) break;
        num = den;
        den = rem;
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }

    if (cf.terms.size() % 2 == 0) {
        long long& last = cf.terms.back();
        if (last > 1) {
            last -= 1;
            cf.terms.push_back(1);
        } else if (last < -1) {
            last += 1;
            cf.terms.push_back(-1);
        } else {
            // a_m = +-1: fold into the previous term
            const long long am = cf.terms.back();
            cf.terms.pop_back();
            cf.terms.back() += am;
            if (cf.terms.back() == 0)
                throw InternalInconsistency("odd_cfe: folding produced a zero term");
        }
    }

    const auto [num2, den2] = cf.eval();
    long long pn = k.p, pd = k.q;
    if (pd < 0) {
        pn = -pn;
        pd = -pd;
    }
    if (num2 != pn || den2 != pd) throw InternalInconsistency("odd_cfe: expansion mismatch");
    return cf;
}

Mat3 twist_matrix(long long n, TwistOrientation orientation) {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = 1;
    if (orientation == TwistOrientation::vertical) {
        m[1][1] = 1 + n;
        m[1][2] = -n;
        m[2][1] = n;
        m[2][2] = 1 - n;
    } else {
        m[0][0] = 1 + n;
        m[0][1] = -n;
        m[1][0] = n;
        m[1][1] = 1 - n;
    }
    return m;
}

Mat3 mat_mul(const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long long acc = 0;
            for (int k = 0; k < 3; ++k) acc = checked_add(acc, checked_mul(x[i][k], y[k][j]));
            r[i][j] = acc;
        }
    return r;
}

std::array<long long, 3> mat_apply(const Mat3& m, const std::array<long long, 3>& v) {
    std::array<long long, 3> r{};
    for (int i = 0; i < 3; ++i) {
        long long acc = 0;
        for (int k = 0; k < 3; ++k) acc = checked_add(acc, checked_mul(m[i][k], v[k]));
        r[i] = acc;
    }
    return r;
}

LineSlope pillowcase_line(const TwoBridgeKnot& k) {
    const ContinuedFraction cf = odd_cfe(k);
    Mat3 prod = twist_matrix(-cf.terms[0], TwistOrientation::vertical);
    for (std::size_t i = 1; i < cf.terms.size(); ++i) {
        const auto orientation =
            (i % 2 == 1) ? TwistOrientation::horizontal : TwistOrientation::vertical;
        const long long term = (i % 2 == 1) ? cf.terms[i] : -cf.terms[i];
        prod = mat_mul(prod, twist_matrix(term, orientation));
    }
    auto v = mat_apply(prod, {1, 1, 0});
    if (v[2] != v[1] - v[0])
        throw InternalInconsistency("pillowcase_line: matrix product lost the theta-gamma slot");
    if (v[0] < 0) {
        v = {-v[0], -v[1], -v[2]};
    }
    return {v[0], v[1]};
}

PillowPath restriction_curve(const TwoBridgeKnot& k, std::size_t samples) {
    const LineSlope slope = pillowcase_line(k);
    const double m = static_cast<double>(slope.m);
    const double n = static_cast<double>(slope.n);
    if (samples < 2) samples = 2;
    return sample_path(
        [m, n](double t) {
            return std::array<double, 2>{m * t, n * t};
        },
        0.0, M_PI, samples, false);
}

std::vector<PillowPoint> unperturbed_intersections(const TwoBridgeKnot& k) {
    std::vector<PillowPoint> pts;
    const long long half = (std::abs(k.p) - 1) / 2;
    for (long long l = 0; l <= half; ++l) {
        const double step = kTwoPi * static_cast<double>(l) / static_cast<double>(k.p);
        pts.push_back(project(static_cast<double>(k.q) * step,
                              static_cast<double>(k.q - k.p) * step));
    }
    return pts;
}

GeneratorReport perturbed_generators(const TwoBridgeKnot& k, const PerturbationData& pert,
                                     std::size_t samples) {
    GeneratorReport rep =
        count_generators(restriction_curve(k, samples), pert, GeneratorReport::Mode::reduced);
    rep.knot = KnotSpec::two_bridge(k.p, k.q);
    return rep;
}

}  // namespace pillowcase
