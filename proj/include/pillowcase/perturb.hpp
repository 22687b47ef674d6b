#pragma once

#include <functional>
#include <optional>

#include "pillowcase/pillow.hpp"
#include "pillowcase/quaternion.hpp"

namespace pillowcase {

// Holonomy perturbation data (epsilon, f) with f odd and 2pi-periodic,
// vanishing exactly at multiples of pi.  Drives the circles rho, rho_1,
// rho_2.  The meridian/longitude constraint imposed on the perturbation
// solid torus is nu = epsilon * f(beta).
struct PerturbationData {
    double epsilon = 0.1;
    std::function<double(double)> f = [](double x) { return std::sin(x); };

    // Grid estimates over one period (4096 samples).
    double sup_f() const;
    double sup_f_prime() const;

    // Checks oddness, periodicity, nonvanishing off pi-multiples, and the
    // smallness condition epsilon * sup|f| < pi/2.  Throws on failure.
    void validate() const;

    bool f_is_sin(double tol = 1e-10) const;
};

enum class Circle { reduced, unreduced1, unreduced2 };

// One perturbed traceless representation in conjugation normal form.  The
// meridian images a,b,c,d,h live in C(i), w is the central -1, p is the
// perturbation-curve meridian image.  Unreduced representations additionally
// carry the Hopf-meridian images m,n (the four punctures of the relevant
// Conway sphere are then m,b,c,n).
//
// The derivation of the reduced circle produces a second circle rho' with
// b,c,h negated; it is conjugate (by i, after beta -> 2pi - beta) to rho and
// is therefore not represented here.
struct PerturbedRep {
    double beta = 0.0;
    Circle which = Circle::reduced;
    Quaternion a, b, c, d, h, p, w;
    std::optional<Quaternion> m, n;

    // The four punctures used for the pillowcase restriction.
    std::array<Quaternion, 4> punctures() const {
        if (which == Circle::reduced) return {a, b, c, d};
        return {*m, b, c, *n};
    }
};

// The reduced perturbed circle rho(beta):
//   a -> i, b -> e^{(pi/2+beta+eps f) k} i, c -> e^{(pi/2+beta-eps f) k} i,
//   d -> e^{-2 eps f k} i, h -> -j e^{-eps f k}, p -> e^{eps f k}, w -> -1.
PerturbedRep rho(double beta, const PerturbationData& pert);

// Lift beta -> (beta + eps f(beta) + pi/2, beta - eps f(beta) + pi/2); a
// closed immersed circle avoiding the branch points for epsilon > 0.
PillowPath rho_image(const PerturbationData& pert, std::size_t samples = 2048);

// Maximum quaternion-norm residual of the relations
//   c = p^-1 b p,  d = c^-1 b a,  [bh, p] = 1,  [a p^-1, h] = (ha) w (a h)^-1.
double verify_relations(const PerturbedRep& rep);

// tau_1(beta) = arcsin(-sin(beta)/2) in [-pi/6,pi/6]; tau_2 = pi - tau_1.
double tau_branch(double beta, int branch);

// The two unreduced circles (perturbation functions eps*sin on P1 and
// 2*eps*sin on P2, as fixed by the construction; f must be sin).
PerturbedRep rho_unreduced(double beta, int branch, const PerturbationData& pert);

// Lift beta -> (-tau_i + pi/2 + beta + eps sin beta, -tau_i + pi/2 + beta - eps sin beta).
PillowPath rho_unreduced_image(int branch, const PerturbationData& pert,
                               std::size_t samples = 2048);

}  // namespace pillowcase
