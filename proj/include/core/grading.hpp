#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/bimodule.hpp"

namespace bhf {

// Mod-2 grading data: one grade per algebra basis element (idempotents are
// 0 by convention) shared across bimodules, plus one grade per generator of
// each bimodule in the solve.
struct GradingAssignment {
    std::map<const PointedMatchedCircle*, std::vector<int>> elem_grades;
    std::map<const DABimodule*, std::vector<int>> gen_grades;
};

struct GradingSolveResult {
    bool consistent = false;
    GradingAssignment assignment;
    std::string witness; // description of an unsatisfiable constraint when inconsistent
};

// Solves the F2 system given by: multiplicativity gr(ab)=gr(a)+gr(b) on every
// nonzero chord product, the degree convention gr(out)+gr(tgt) =
// gr(src)+sum gr(in)+(n-1) for every action of every bimodule, and grade 0
// for all generators of `normalization` (pass nullptr to skip). Free
// variables are set to 0, in circle-name/element-id order then bimodule
// order/generator order.
GradingSolveResult solve_gradings(const std::vector<const DABimodule*>& ms,
                                  const DABimodule* normalization);

} // namespace bhf
