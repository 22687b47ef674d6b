#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pillowcase/pillow.hpp"

namespace pillowcase {

// Knot selector for the two supported pipelines.
struct KnotSpec {
    enum class Family { two_bridge, torus };
    Family family = Family::two_bridge;
    long long p = 0, q = 0;
    std::optional<long long> r, s;  // torus-only override of pr + qs = 1

    static KnotSpec two_bridge(long long p, long long q) {
        return {Family::two_bridge, p, q, std::nullopt, std::nullopt};
    }
    static KnotSpec torus(long long p, long long q) {
        return {Family::torus, p, q, std::nullopt, std::nullopt};
    }
    std::string name() const;
};

// Z/4-graded rank tuple (a,b,c,d)_shift; the shift stays symbolic when
// nothing pins it.
struct GradedRanks {
    std::array<int, 4> ranks{0, 0, 0, 0};
    std::optional<int> shift;  // known shift mod 4; nullopt = symbolic
    char symbol = 0;           // 'a', 'b', ... for symbolic shifts

    int total() const { return ranks[0] + ranks[1] + ranks[2] + ranks[3]; }
    std::string to_string() const;
};

struct GradedPattern {
    std::vector<GradedRanks> summands;
    bool verified = true;  // false beyond the stated verification range

    int total() const {
        int t = 0;
        for (const auto& s : summands) t += s.total();
        return t;
    }
    std::string to_string() const;
};

// One generator of the perturbed chain complex: a transverse intersection in
// the pillowcase.
struct GeneratorPoint {
    PillowPoint location;
    double t = 0.0;  // parameter on the restriction-side path
    double s = 0.0;  // parameter on the perturbed circle
    int path_index = 0;
    int circle_branch = 0;  // 0 reduced; 1,2 unreduced branches
    double margin = 0.0;
    bool on_z1_stratum = false;
    std::string label;
};

// Counts (and where known, gradings) of the instanton chain-complex
// generators for one knot and perturbation.
struct GeneratorReport {
    enum class Mode { reduced, unreduced };

    KnotSpec knot;
    Mode mode = Mode::reduced;
    double epsilon = 0.0;

    std::vector<GeneratorPoint> alpha;                // alpha' (two points when unreduced)
    std::vector<std::vector<GeneratorPoint>> pairs;   // grouped by unperturbed source point
    std::vector<PillowPoint> unperturbed;             // source points on the diagonal

    std::optional<GradedPattern> graded;
    bool grading_known = false;

    int z1_crossings = 0;                 // generators found on interior Z1 fiber images
    std::vector<PillowPoint> z1_points;   // flagged interior Z1 locus (torus pipeline)
    bool regular = true;                  // alpha/pair multiplicities as expected

    int total() const {
        int t = static_cast<int>(alpha.size());
        for (const auto& g : pairs) t += static_cast<int>(g.size());
        return t;
    }
    std::vector<const GeneratorPoint*> all_points() const;
};

}  // namespace pillowcase
