#pragma once

#include <string>
#include <vector>

#include "core/bimodule.hpp"

namespace bhf {

// Parses a seed-format document containing one bimodule (and optionally
// circle declarations, which are registered globally):
//   circle <name> points <n> pairs (a,b)(c,d)...
//   bimodule <name> left <circle> right <circle>
//   gen <gname> <left-idem> <right-idem> [grade <0|1>]
//   act <gname> | <in1>, <in2>, ... -> <out> | <gname>
// Element tokens: i<k>, r<digits> (consecutive digits), [a,b], |(a -> b)|.
// Comments start with '#'. Toggling semantics: a repeated act line removes
// the action again (mod-2 multisets).
DABimodule parse_bimodule(const std::string& text);

// Canonical text: header, generators sorted by name, action lines sorted.
// parse(serialize(m)) reproduces the same data.
std::string serialize_bimodule(const DABimodule& m);

// The embedded corpus: ten Dehn twist bimodules N_tauA..N_tauE_inv, six
// arc-slide bimodules N_eta, N_mu1..N_mu4, N_eta_inv, the bounded identity
// I_bounded and the generated identity I. Circles Z2 and Zslide1..Zslide4
// are registered on first use.
const DABimodule& seed_builtin(const std::string& name);
std::vector<std::string> seed_names();

// Chord grades for a registered circle from the one session-wide grading
// solve over the whole corpus (normalized so the identity generators and all
// idempotents have grade 0). Empty when the solve failed or the circle is
// not covered.
std::vector<int> session_chord_grades(const PointedMatchedCircle* z);
bool session_grading_ok(std::string* witness = nullptr);

// Inert companion document: the DD-type bimodule data for the E twist, kept
// for reference only (never parsed into a typed object).
const std::string& dd_tauE_document();

} // namespace bhf
