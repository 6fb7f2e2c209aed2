#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/algebra.hpp"

namespace bhf {

// One DA action x (x) (a1,...,an) -> b (x) y. Inputs are non-idempotent
// chords of the right algebra; the output is any basis element (chord or
// idempotent) of the left algebra.
struct Action {
    int src = -1;
    std::vector<int16_t> inputs;
    int out = -1;
    int tgt = -1;

    friend bool operator<(const Action& a, const Action& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.inputs != b.inputs) return a.inputs < b.inputs;
        if (a.out != b.out) return a.out < b.out;
        return a.tgt < b.tgt;
    }
    friend bool operator==(const Action& a, const Action& b) {
        return a.src == b.src && a.inputs == b.inputs && a.out == b.out && a.tgt == b.tgt;
    }
};

struct Generator {
    std::string name;
    int l_idem = -1;
    int r_idem = -1;
    int grade = -1; // mod-2 grade, -1 when unset
};

struct RelationViolation {
    int src;
    std::vector<int16_t> inputs;
    int out;
    int tgt;
    std::string describe(const class DABimodule& m) const;
};

struct BoundednessReport {
    bool bounded = false;
    std::vector<int> topo_order; // when bounded
    std::vector<int> cycle;      // generator ids of a cycle otherwise
};

// Type-DA bimodule with mod-2 multiset action semantics: toggling the same
// action twice removes it.
class DABimodule {
  public:
    std::string label = "m";

    DABimodule(const PointedMatchedCircle* left, const PointedMatchedCircle* right)
        : left_(left), right_(right) {}

    const PointedMatchedCircle* left_algebra() const { return left_; }
    const PointedMatchedCircle* right_algebra() const { return right_; }

    int add_generator(const std::string& name, int l_idem, int r_idem, int grade = -1);
    void toggle_action(const Action& a); // validates invariants
    bool has_action(const Action& a) const { return actions_.count(a) != 0; }

    int num_generators() const { return (int)gens_.size(); }
    const Generator& gen(int i) const { return gens_[i]; }
    int gen_index(const std::string& name) const; // -1 if absent
    const std::set<Action>& actions() const { return actions_; }
    int max_arity() const;

    void set_grade(int gen, int grade) { gens_[gen].grade = grade; }
    bool fully_graded() const;

    // Identity bimodule over one algebra: one generator per idempotent, one
    // action per chord.
    static DABimodule make_identity(const PointedMatchedCircle* z);

    // A-infinity structure equation check; max_len must be at least twice the
    // maximal input arity. Returns all odd-count witnesses.
    std::vector<RelationViolation> check_relations(int max_len) const;

    // Acyclicity of the action graph (every action is an edge source->target).
    BoundednessReport is_bounded() const;

  private:
    void validate_action(const Action& a) const;

    const PointedMatchedCircle* left_;
    const PointedMatchedCircle* right_;
    std::vector<Generator> gens_;
    std::map<std::string, int> gen_index_;
    std::set<Action> actions_;
};

} // namespace bhf
