#pragma once

#include <optional>

#include "core/bimodule.hpp"

namespace bhf {

// Box tensor product of m over (A,B) with n over (B,C); result over (A,C).
// Generator names are dotted pairs "x.y".
DABimodule box_tensor(const DABimodule& m, const DABimodule& n);

// Gaussian elimination of unit differentials down to a minimal model.
// Candidates are processed in lexicographic (source name, target name) order;
// reverse_order flips that (used by the order-robustness tests).
DABimodule reduce(const DABimodule& m, bool reverse_order = false);

// Generator bijection preserving idempotents, grades (when both sides are
// fully graded and ignore_grades is false) and the exact action multiset;
// nullopt when none exists.
std::optional<std::vector<int>> is_isomorphic(const DABimodule& m, const DABimodule& n,
                                              bool ignore_grades = false);

// Renames generators to g0..gN (in lexicographic order of the old names).
// Keeps long tensor pipelines from accumulating unbounded dotted names.
DABimodule compact_names(const DABimodule& m);

} // namespace bhf
