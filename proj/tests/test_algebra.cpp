#include <algorithm>
#include <map>
#include <set>

#include "core/algebra.hpp"
#include "doctest.h"

using namespace bhf;

namespace {

const PointedMatchedCircle* z2() {
    return PointedMatchedCircle::build(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}, "Z2");
}

const PointedMatchedCircle* z1() {
    return PointedMatchedCircle::build(4, {{0, 2}, {1, 3}}, "Z1");
}

// Independent path-algebra oracle for B(Z2): basis elements are the quiver
// paths (sequences of short chords r1..r7 with consecutive circle positions);
// concatenation of non-consecutive chords is zero. A chord [a,b] corresponds
// to the run a+1,...,b.
struct PathOracle {
    // path = run of short-chord indices [first..last], or an idempotent.
    struct Elem {
        bool idem;
        int idx_or_first;
        int last;
    };
    const PointedMatchedCircle* z;

    Elem of(int e) const {
        if (z->is_idempotent(e)) return {true, e, -1};
        auto [a, b] = z->chord_ends(e);
        return {false, a + 1, b};
    }
    // Vertex (idempotent) at the start/end of short chord r_k: r_k runs from
    // point k-1 to point k.
    int start_vertex(int k) const { return z->pair_of_point(k - 1); }
    int end_vertex(int k) const { return z->pair_of_point(k); }

    // Returns element id or -1 for zero.
    int mul(int x, int y) const {
        Elem a = of(x), b = of(y);
        if (a.idem && b.idem) return x == y ? x : -1;
        if (a.idem) return (a.idx_or_first == start_vertex(b.idx_or_first)) ? y : -1;
        if (b.idem) return (b.idx_or_first == end_vertex(a.last)) ? x : -1;
        // Paths concatenate when the runs are consecutive on the circle.
        if (b.idx_or_first != a.last + 1) return -1;
        return z->chord(a.idx_or_first - 1, b.last);
    }
};

} // namespace

TEST_CASE("pointed matched circle validity") {
    CHECK(z2()->points() == 8);
    CHECK(z1()->num_idempotents() == 2);
    CHECK_THROWS_AS(PointedMatchedCircle::build(4, {{0, 1}, {2, 3}}, "bad"), Error);
    try {
        PointedMatchedCircle::build(4, {{0, 1}, {2, 3}}, "bad");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::SurgeryDisconnected);
    }
    CHECK(surgery_circle_count(4, {{0, 1}, {2, 3}}) > 1);
    CHECK(surgery_circle_count(4, {{0, 2}, {1, 3}}) == 1);
    // Partition violations.
    CHECK_THROWS_AS(PointedMatchedCircle::build(4, {{0, 1}, {1, 3}}, "bad2"), Error);
    CHECK_THROWS_AS(PointedMatchedCircle::build(3, {{0, 1}}, "bad3"), Error);
}

TEST_CASE("basis enumeration") {
    const auto* z = z2();
    CHECK(z->num_elements() == 32);
    CHECK(z->num_chords() == 28);
    CHECK(z->num_idempotents() == 4);

    const auto* t = z1();
    CHECK(t->num_elements() == 8);
    CHECK(t->num_chords() == 6);
    // Torus algebra names.
    CHECK(t->elem_name(t->parse_elem("r1")) == "r1");
    CHECK(t->parse_elem("r123") == t->chord(0, 3));
}

TEST_CASE("quiver structure of B(Z2)") {
    const auto* z = z2();
    auto r = [&](const std::string& s) { return z->parse_elem(s); };
    // rho_4 runs from i1 to i2 (the arrow of the middle of the quiver).
    CHECK(z->left_idem(r("r4")) == 1);
    CHECK(z->right_idem(r("r4")) == 2);
    // r56 = [4,6] begins and ends on the pair (4,6).
    CHECK(z->left_idem(r("r56")) == 2);
    CHECK(z->right_idem(r("r56")) == 2);
    // Idempotent of an idempotent is itself.
    CHECK(z->left_idem(3) == 3);
    CHECK(z->right_idem(3) == 3);

    // Products.
    CHECK(z->mul(r("r4"), r("r5")) == r("r45"));
    CHECK(z->mul(r("r3"), r("r2")) == -1);
    CHECK(z->mul(r("i0"), r("r1")) == r("r1"));
    CHECK(z->mul(r("i1"), r("r1")) == -1);

    // Figure-6 quiver relations.
    CHECK(z->mul(r("r1"), r("r4")) == -1);
    CHECK(z->mul(r("r4"), r("r7")) == -1);
    CHECK(z->mul(r("r2"), r("r1")) == -1);
    CHECK(z->mul(r("r3"), r("r2")) == -1);
    CHECK(z->mul(r("r6"), r("r5")) == -1);
    CHECK(z->mul(r("r7"), r("r6")) == -1);
}

TEST_CASE("multiplication matches the path-algebra oracle on all of B(Z2)") {
    const auto* z = z2();
    PathOracle oracle{z};
    for (int x = 0; x < 32; ++x)
        for (int y = 0; y < 32; ++y) CHECK(z->mul(x, y) == oracle.mul(x, y));
}

TEST_CASE("associativity on all basis triples of B(Z2)") {
    const auto* z = z2();
    for (int x = 0; x < 32; ++x) {
        for (int y = 0; y < 32; ++y) {
            for (int w = 0; w < 32; ++w) {
                int xy = z->mul(x, y);
                int yw = z->mul(y, w);
                int lhs = xy < 0 ? -1 : z->mul(xy, w);
                int rhs = yw < 0 ? -1 : z->mul(x, yw);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("sum of idempotents is a two-sided unit") {
    const auto* z = z2();
    for (int x = 0; x < z->num_elements(); ++x) {
        int left = -1, right = -1, lcount = 0, rcount = 0;
        for (int e = 0; e < z->num_idempotents(); ++e) {
            if (z->mul(e, x) >= 0) {
                left = z->mul(e, x);
                ++lcount;
            }
            if (z->mul(x, e) >= 0) {
                right = z->mul(x, e);
                ++rcount;
            }
        }
        CHECK(lcount == 1);
        CHECK(rcount == 1);
        CHECK(left == x);
        CHECK(right == x);
    }
}

TEST_CASE("chord products are never idempotents") {
    const auto* z = z2();
    for (int x = z->num_idempotents(); x < 32; ++x)
        for (int y = z->num_idempotents(); y < 32; ++y) {
            int p = z->mul(x, y);
            if (p >= 0) CHECK(z->is_chord(p));
        }
}

TEST_CASE("element token parsing") {
    const auto* z = z2();
    CHECK(z->parse_elem("i2") == 2);
    CHECK(z->parse_elem("r23") == z->chord(1, 3));
    CHECK(z->parse_elem("[1,3]") == z->chord(1, 3));
    CHECK(z->parse_elem("|(1 -> 3)|") == z->chord(1, 3));
    CHECK_THROWS_AS(z->parse_elem("r24"), Error);   // non-consecutive digits
    CHECK_THROWS_AS(z->parse_elem("i9"), Error);
    CHECK_THROWS_AS(z->parse_elem("x"), Error);
}
