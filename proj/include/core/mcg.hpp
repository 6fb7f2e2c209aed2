#pragma once

#include <string>
#include <vector>

#include "core/bimodule.hpp"
#include "core/hochschild.hpp"

namespace bhf {

// A word in the five Dehn twist generators A..E of the genus-2 mapping class
// group; g1 g2 ... gm denotes the composition g1 o g2 o ... o gm.
struct MCGWord {
    struct Letter {
        char curve; // 'A'..'E'
        int sign;   // +1 or -1
    };
    std::vector<Letter> letters;

    std::string str() const;
};

// Grammar: whitespace-separated letters A-E, optional ' or ^-1 for the
// inverse, ^k for k-fold repetition (k may be negative).
MCGWord parse_word(const std::string& text);
MCGWord invert_word(const MCGWord& w);
MCGWord concat(const MCGWord& a, const MCGWord& b);
MCGWord power(const MCGWord& w, int n);

// Fold of the seed bimodules with reduction interleaved:
// N(g_m) (x) ( ... (x) (N(g_2) (x) N(g_1))), the identity word giving [I].
// Generator names are compacted after each step.
DABimodule bimodule_of(const MCGWord& w);

struct RelationCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Inverse relations (both orders), braid relations for adjacent pairs,
// commuting relations for non-adjacent pairs, unit relations against [I],
// and the arc-slide factorization of the inverse C twist.
std::vector<RelationCheck> verify_relations(int jobs = 1);

struct Classification {
    std::vector<int> ranks; // rank HH(N((w^n)^-1)) for n = 1..max_power
    std::string verdict;    // bounded / linear / exponential / inconclusive
};

// Rank-growth classification of w^n; the verdict thresholds are heuristics.
Classification classify(const MCGWord& w, int max_power, int jobs = 1);

} // namespace bhf
