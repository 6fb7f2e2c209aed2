#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace bhf {

// A pointed matched circle: 4g marked points listed 0..4g-1 in the linear
// order obtained by cutting the circle at the basepoint z, partitioned into
// 2g pairs. Validity means that surgery on all 2g pairs yields one circle.
//
// Basis elements of the one-moving-strand algebra B(Z) are interned per
// circle: ids 0..2g-1 are the idempotents (pairs sorted by smaller point),
// followed by the chords [a,b], a<b, in lexicographic order. Multiplication
// is chord concatenation ([p,q]*[q,r] = [p,r], everything else zero) with
// idempotents acting as partial units; a full product table is precomputed.
class PointedMatchedCircle {
  public:
    static const PointedMatchedCircle* build(int points, std::vector<std::pair<int, int>> matching,
                                             const std::string& name);
    // Returns a previously built circle, or fails with UnknownName.
    static const PointedMatchedCircle* named(const std::string& name);
    static std::vector<std::string> registered_names();

    const std::string& name() const { return name_; }
    int points() const { return points_; }
    int num_idempotents() const { return points_ / 2; }
    int num_elements() const { return static_cast<int>(left_idem_.size()); }
    int num_chords() const { return num_elements() - num_idempotents(); }

    bool is_idempotent(int e) const { return e < num_idempotents(); }
    bool is_chord(int e) const { return e >= num_idempotents(); }

    // Pair index of a marked point.
    int pair_of_point(int p) const { return pair_of_point_[p]; }
    const std::pair<int, int>& pair(int k) const { return pairs_[k]; }

    int chord(int a, int b) const; // element id of [a,b]; fails if invalid
    std::pair<int, int> chord_ends(int e) const;

    int left_idem(int e) const { return left_idem_[e]; }
    int right_idem(int e) const { return right_idem_[e]; }

    // Product of basis elements; -1 means zero.
    int mul(int x, int y) const { return mul_[x * num_elements() + y]; }

    // All basis element ids: idempotents first, then chords lexicographically.
    std::vector<int> basis() const;

    const std::string& elem_name(int e) const { return names_[e]; }
    // Parses "i<k>", "r<digits>", "[a,b]" or "|(a -> b)|"; fails with
    // UnknownElement if the token does not denote a basis element here.
    int parse_elem(const std::string& token) const;

  private:
    PointedMatchedCircle() = default;

    std::string name_;
    int points_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> pair_of_point_;
    std::vector<int> left_idem_, right_idem_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<int16_t> mul_;
    std::vector<std::string> names_;
    std::map<std::pair<int, int>, int> chord_id_;
};

// Number of circles performing surgery on all pairs yields; 1 means valid.
int surgery_circle_count(int points, const std::vector<std::pair<int, int>>& matching);

} // namespace bhf
