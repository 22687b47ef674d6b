#include "pillowcase/perturb.hpp"

#include <algorithm>
#include <cmath>

namespace pillowcase {

namespace {
constexpr int kProbeGrid = 4096;
}

double PerturbationData::sup_f() const {
    double m = 0.0;
    for (int i = 0; i < kProbeGrid; ++i) {
        m = std::max(m, std::abs(f(kTwoPi * i / kProbeGrid)));
    }
    return m;
}

double PerturbationData::sup_f_prime() const {
    double m = 0.0;
    const double h = kTwoPi / kProbeGrid;
    for (int i = 0; i < kProbeGrid; ++i) {
        const double x = h * i;
        m = std::max(m, std::abs((f(x + h) - f(x - h)) / (2 * h)));
    }
    return m;
}

void PerturbationData::validate() const {
    if (epsilon < 0) throw PerturbationTooLarge("epsilon must be nonnegative");
    const double h = kTwoPi / kProbeGrid;
    for (int i = 0; i < kProbeGrid; ++i) {
        const double x = h * i;
        if (std::abs(f(-x) + f(x)) > 1e-10)
            throw UnsupportedPerturbationFunction("f is not odd");
        if (std::abs(f(x + kTwoPi) - f(x)) > 1e-10)
            throw UnsupportedPerturbationFunction("f is not 2pi-periodic");
        const double dpi = std::min(std::abs(x), std::min(std::abs(x - M_PI), std::abs(x - kTwoPi)));
        if (dpi > 0.05 && std::abs(f(x)) == 0.0)
            throw UnsupportedPerturbationFunction("f vanishes away from multiples of pi");
    }
    if (epsilon * sup_f() >= M_PI / 2.0)
        throw PerturbationTooLarge("epsilon * sup|f| must be < pi/2");
}

bool PerturbationData::f_is_sin(double tol) const {
    for (int i = 0; i < kProbeGrid; ++i) {
        const double x = kTwoPi * i / kProbeGrid;
        if (std::abs(f(x) - std::sin(x)) > tol) return false;
    }
    return true;
}

PerturbedRep rho(double beta, const PerturbationData& pert) {
    pert.validate();
    const double nu = pert.epsilon * pert.f(beta);
    PerturbedRep rep;
    rep.beta = beta;
    rep.which = Circle::reduced;
    rep.a = kI;
    rep.b = exp_axis(M_PI / 2 + beta + nu, kK) * kI;
    rep.c = exp_axis(M_PI / 2 + beta - nu, kK) * kI;
    rep.d = exp_axis(-2 * nu, kK) * kI;
    rep.h = -(kJ * exp_axis(-nu, kK));
    rep.p = exp_axis(nu, kK);
    rep.w = -kOne;
    return rep;
}

PillowPath rho_image(const PerturbationData& pert, std::size_t samples) {
    pert.validate();
    if (samples < 16) samples = 16;
    const double eps = pert.epsilon;
    const auto& f = pert.f;
    return sample_path(
        [eps, &f](double beta) {
            const double nu = eps * f(beta);
            return std::array<double, 2>{beta + nu + M_PI / 2, beta - nu + M_PI / 2};
        },
        0.0, kTwoPi, samples, true);
}

double verify_relations(const PerturbedRep& rep) {
    const Quaternion& a = rep.a;
    const Quaternion& b = rep.b;
    const Quaternion& c = rep.c;
    const Quaternion& d = rep.d;
    const Quaternion& h = rep.h;
    const Quaternion& p = rep.p;
    const Quaternion& w = rep.w;

    const double r1 = dist(c, p.conj() * b * p);
    const double r2 = dist(d, c.conj() * b * a);
    const double r3 = dist(commutator(b * h, p), kOne);
    const Quaternion lhs = commutator(a * p.conj(), h);
    const Quaternion rhs = (h * a) * w * (a.conj() * h.conj());
    const double r4 = dist(lhs, rhs);
    return std::max(std::max(r1, r2), std::max(r3, r4));
}

double tau_branch(double beta, int branch) {
    const double t1 = std::asin(-0.5 * std::sin(beta));
    if (branch == 1) return t1;
    if (branch == 2) return M_PI - t1;
    throw OutOfDomain("tau_branch: branch must be 1 or 2");
}

PerturbedRep rho_unreduced(double beta, int branch, const PerturbationData& pert) {
    pert.validate();
    if (!pert.f_is_sin())
        throw UnsupportedPerturbationFunction("the unreduced circles require f = sin");
    if (branch != 1 && branch != 2) throw OutOfDomain("rho_unreduced: branch must be 1 or 2");

    const double eps = pert.epsilon;
    const double nu = eps * std::sin(beta);
    const double tau = tau_branch(beta, branch);

    PerturbedRep rep;
    rep.beta = beta;
    rep.which = branch == 1 ? Circle::unreduced1 : Circle::unreduced2;
    const Quaternion pre = exp_axis(-tau, kK);
    rep.m = kI;
    rep.a = pre * kI;
    rep.b = pre * exp_axis(M_PI / 2 + beta + nu, kK) * kI;
    rep.c = pre * exp_axis(M_PI / 2 + beta - nu, kK) * kI;
    rep.d = exp_axis(-tau - 2 * nu, kK) * kI;
    rep.n = exp_axis(-2 * nu, kK) * kI;
    // h and p are the conjugated images from the reduced normal form; the
    // relation set is conjugation invariant.
    rep.h = -(kJ * exp_axis(tau - nu, kK));
    rep.p = exp_axis(nu, kK);
    rep.w = -kOne;
    return rep;
}

PillowPath rho_unreduced_image(int branch, const PerturbationData& pert, std::size_t samples) {
    pert.validate();
    if (!pert.f_is_sin())
        throw UnsupportedPerturbationFunction("the unreduced circles require f = sin");
    if (branch != 1 && branch != 2) throw OutOfDomain("rho_unreduced_image: branch must be 1 or 2");
    if (samples < 16) samples = 16;
    const double eps = pert.epsilon;
    return sample_path(
        [eps, branch](double beta) {
            const double nu = eps * std::sin(beta);
            const double tau = tau_branch(beta, branch);
            return std::array<double, 2>{-tau + M_PI / 2 + beta + nu, -tau + M_PI / 2 + beta - nu};
        },
        0.0, kTwoPi, samples, true);
}

}  // namespace pillowcase
