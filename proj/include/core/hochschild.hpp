#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/bimodule.hpp"

namespace bhf {

// Truncated cyclic complex of the honest bimodule attached to a DA bimodule
// over one algebra. Basis elements are (a (x) x; a1,...,ak): a left-algebra
// coefficient, a bimodule generator and a bar word of non-idempotent chords,
// with idempotents matching around the cycle x -> a1 -> ... -> ak -> a -> x.
struct F2Complex {
    std::vector<int> level_of;                // bar length per basis element
    std::vector<std::string> names;           // printable basis labels
    std::vector<std::vector<int>> boundary;   // sorted target ids per element
    int dim() const { return (int)boundary.size(); }
    int level_size(int k) const;
    void assert_d2() const; // fails with Internal if d*d != 0
};

F2Complex bar_truncation(const DABimodule& m, int K);

struct HHOptions {
    int k_start = 2;
    int k_max = 12;
    bool sandwich = false;
    bool graded = false;
};

struct HHStage {
    int K = -1;
    int truncation_rank = -1; // rank of H(C_{<=K}) itself
    int stable1 = -1;         // rank of H(C_{<=K}) -> H(C_{<=K+1})
    int stable2 = -1;         // rank of H(C_{<=K}) -> H(C_{<=K+2})
};

struct HHResult {
    int total = 0;
    int stabilized_at = -1;
    std::vector<HHStage> stages;
    bool graded_valid = false;
    std::array<int, 2> graded_ranks{{0, 0}};
    std::string grading_note;
    bool sandwiched = false;
};

// Homology rank of the truncated cyclic complex with stabilization detection.
// Truncation homology carries transient classes at the top bar levels, so the
// reported rank is the stable one: the rank of the inclusion-induced map
// H(C_{<=K}) -> H(C_{<=K+1}). Stabilization at K means the one-step ranks at
// K, K+1, K+2 agree and the two-step ranks confirm the image towers map
// isomorphically (no class born at K dies by K+2). Throws NonStabilized with
// the rank trajectory when K_max is hit first.
HHResult hh_rank(const DABimodule& m, const HHOptions& opts = {});

} // namespace bhf
