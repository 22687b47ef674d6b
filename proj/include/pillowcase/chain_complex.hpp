#pragma once

#include <optional>

#include "pillowcase/generator_report.hpp"
#include "pillowcase/intersect.hpp"
#include "pillowcase/perturb.hpp"
#include "pillowcase/torus.hpp"
#include "pillowcase/two_bridge.hpp"

namespace pillowcase {

// Run the matching pipeline and assemble the generator report; graded
// patterns attached for the T(2,2k+1) and T(3,n) families.
GeneratorReport summarize(const KnotSpec& k, const PerturbationData& pert);

// Torus pipeline with the intermediate curves exposed.  The restriction side
// is the union of the Z0-stratum images and (separately flagged) interior-Z1
// fiber images; the perturbed circle is intersected with all of them.
GeneratorReport summarize_torus(const TorusKnot& k, const PerturbationData& pert,
                                std::vector<LabeledPath>* paths_out = nullptr,
                                std::vector<ZeroSetComponent>* comps_out = nullptr,
                                int grid = 512);

// CI^nat(T(2,2k+1)) = (1,0,0,0)_a + ((k+1)/2,(k+1)/2,(k-1)/2,(k-1)/2)_b for
// odd k, (1,0,0,0)_a + (k/2,k/2,k/2,k/2) for even k.  Shifts a,b symbolic.
GradedPattern graded_pattern_2n(long long k);

// CI^nat(T(3,n)) by n mod 6 (stated for n <= 38; computed but flagged
// unverified beyond).
GradedPattern graded_pattern_3n(long long n);

struct TableRow {
    long long p = 0, q = 0;
    long long sigma = 0;      // torus knots have sigma < 0
    long long abs_delta = 0;  // sum |a_i| of the Alexander polynomial
    long long ci_total = 0;   // |sigma| + 1
    std::optional<GradedPattern> ci_graded;
    std::optional<std::array<int, 4>> kh;  // reference data, never computed
    long long inat_lo = 0, inat_hi = 0;    // |Delta| <= rank I <= min(|sigma|+1, rank Kh)
    bool zero_differential = false;        // |sigma|+1 == |Delta|
};

TableRow table_row(const TorusKnot& k);

// Unproven shift hypothesis for the alpha' summand: sigma(K) mod 4.  Never
// substituted into the graded patterns; reported only as labeled hypothesis
// data (the companion hypothesis, that torus-knot complexes carry at most
// one non-trivial differential, is likewise recorded and never asserted).
long long hypothesis_alpha_shift_mod4(const TorusKnot& k);

// Transcribed reference rows (sigma, |Delta|, CI total and the stated Kh
// ranks) for the 30 tabulated torus knots.
struct ReferenceRow {
    long long p, q, sigma, abs_delta, ci_total;
    std::optional<std::array<int, 4>> kh;
};
const std::vector<ReferenceRow>& reference_table();

std::optional<std::array<int, 4>> kh_reference(long long p, long long q);

}  // namespace pillowcase
