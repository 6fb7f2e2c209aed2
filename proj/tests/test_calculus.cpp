#include "core/calculus.hpp"
#include "core/seeddata.hpp"
#include "doctest.h"

using namespace bhf;

namespace {

int check_len(const DABimodule& m) { return 2 * std::max(m.max_arity(), 1); }

} // namespace

TEST_CASE("toy box tensor: differential feeding an input") {
    const auto* z = PointedMatchedCircle::named("Z2");
    // m = { x (x) (r12) -> r12 (x) x' }, n = { y -> r12 (x) y' }.
    DABimodule m(z, z);
    m.add_generator("x", 0, 0);
    m.add_generator("xp", 0, 0);
    Action ma;
    ma.src = 0;
    ma.inputs = {(int16_t)z->parse_elem("r12")};
    ma.out = z->parse_elem("r12");
    ma.tgt = 1;
    m.toggle_action(ma);

    DABimodule n(z, z);
    n.add_generator("y", 0, 0);
    n.add_generator("yp", 0, 0);
    Action na;
    na.src = 0;
    na.out = z->parse_elem("r12");
    na.tgt = 1;
    n.toggle_action(na);

    DABimodule t = box_tensor(m, n);
    CHECK(t.num_generators() == 4);
    // Expect exactly (x,y) -> r12 (x) (xp,yp) plus nothing else.
    REQUIRE(t.actions().size() == 1);
    const Action& a = *t.actions().begin();
    CHECK(t.gen(a.src).name == "x.y");
    CHECK(t.gen(a.tgt).name == "xp.yp");
    CHECK(a.inputs.empty());
    CHECK(a.out == z->parse_elem("r12"));
}

TEST_CASE("identity absorbs under box tensor") {
    const DABimodule& id = seed_builtin("I");
    DABimodule both = box_tensor(id, id);
    CHECK(both.num_generators() == 4);
    CHECK(both.actions().size() == 28);
    CHECK(is_isomorphic(reduce(both), id).has_value());

    for (const char* nm : {"N_tauA", "N_tauB", "N_tauC", "N_tauD", "N_tauE"}) {
        const DABimodule& m = seed_builtin(nm);
        CHECK(is_isomorphic(reduce(box_tensor(m, id)), reduce(m)).has_value());
        CHECK(is_isomorphic(reduce(box_tensor(id, m)), reduce(m)).has_value());
    }
}

TEST_CASE("reduce cancels unit differentials") {
    // Two-generator bimodule with a unit arrow reduces to nothing.
    const auto* z = PointedMatchedCircle::named("Z2");
    DABimodule m(z, z);
    m.add_generator("x", 1, 1);
    m.add_generator("y", 1, 1);
    Action d;
    d.src = 0;
    d.out = 1; // idempotent i1
    d.tgt = 1;
    m.toggle_action(d);
    DABimodule r = reduce(m);
    CHECK(r.num_generators() == 0);
    CHECK(r.actions().empty());

    // The 16-generator seed reduces to 14 generators (one unit arrow).
    DABimodule rc = reduce(seed_builtin("N_tauC_inv"));
    CHECK(rc.num_generators() == 14);
    CHECK(rc.check_relations(check_len(rc)).empty());
    DABimodule rc2 = reduce(seed_builtin("N_tauC"));
    CHECK(rc2.num_generators() == 14);

    // Already-reduced input is returned unchanged.
    DABimodule rcrc = reduce(rc);
    CHECK(rc.num_generators() == rcrc.num_generators());
    CHECK(rc.actions() == rcrc.actions());
}

TEST_CASE("bounded identity reduces to the identity") {
    const DABimodule& ib = seed_builtin("I_bounded");
    DABimodule r = reduce(ib);
    auto iso = is_isomorphic(r, seed_builtin("I"));
    CHECK(iso.has_value());
}

TEST_CASE("inverse twists tensor to the identity") {
    const DABimodule& id = seed_builtin("I");
    DABimodule p = reduce(box_tensor(seed_builtin("N_tauE_inv"), seed_builtin("N_tauE")));
    CHECK(is_isomorphic(p, id).has_value());
    DABimodule q = reduce(box_tensor(seed_builtin("N_tauE"), seed_builtin("N_tauE_inv")));
    CHECK(is_isomorphic(q, id).has_value());
}

TEST_CASE("box tensor closure under the structure equations") {
    DABimodule t = box_tensor(seed_builtin("N_tauA"), seed_builtin("N_tauB"));
    CHECK(t.check_relations(check_len(t)).empty());
    DABimodule r = reduce(t);
    CHECK(r.check_relations(check_len(r)).empty());
    DABimodule s = box_tensor(seed_builtin("N_tauE"), seed_builtin("N_tauE_inv"));
    CHECK(s.check_relations(check_len(s)).empty());
}

TEST_CASE("braid relation ABA = BAB") {
    auto word = [&](const char* a, const char* b, const char* c) {
        DABimodule t = reduce(box_tensor(seed_builtin(a), seed_builtin(b)));
        return reduce(box_tensor(t, seed_builtin(c)));
    };
    DABimodule aba = word("N_tauA", "N_tauB", "N_tauA");
    DABimodule bab = word("N_tauB", "N_tauA", "N_tauB");
    CHECK(is_isomorphic(aba, bab).has_value());
}

TEST_CASE("associativity of box tensor up to isomorphism") {
    const DABimodule& a = seed_builtin("N_tauA");
    const DABimodule& b = seed_builtin("N_tauB");
    const DABimodule& e = seed_builtin("N_tauE");
    DABimodule left = reduce(box_tensor(box_tensor(a, b), e));
    DABimodule right = reduce(box_tensor(a, box_tensor(b, e)));
    CHECK(is_isomorphic(left, right).has_value());
}

TEST_CASE("cancellation order does not matter up to isomorphism") {
    for (const char* nm : {"N_tauC_inv", "I_bounded"}) {
        DABimodule fwd = reduce(seed_builtin(nm), false);
        DABimodule rev = reduce(seed_builtin(nm), true);
        CHECK(is_isomorphic(fwd, rev).has_value());
    }
    DABimodule t = box_tensor(seed_builtin("N_tauE_inv"), seed_builtin("N_tauE"));
    CHECK(is_isomorphic(reduce(t, false), reduce(t, true)).has_value());
}

TEST_CASE("arc-slide factorization of the C twist") {
    DABimodule acc = seed_builtin("N_eta");
    for (const char* nm : {"N_mu1", "N_mu2", "N_mu3", "N_mu4", "N_eta_inv"})
        acc = reduce(box_tensor(acc, seed_builtin(nm)));
    DABimodule direct = reduce(seed_builtin("N_tauC_inv"));
    CHECK(acc.num_generators() == direct.num_generators());
    CHECK(is_isomorphic(acc, direct).has_value());
}

TEST_CASE("isomorphism finds witnesses and rejects non-isomorphic pairs") {
    const DABimodule& id = seed_builtin("I");
    // Renamed identity.
    const auto* z = PointedMatchedCircle::named("Z2");
    DABimodule renamed(z, z);
    for (int k = 3; k >= 0; --k) renamed.add_generator("gen" + std::to_string(k), k, k, 0);
    for (const Action& a : id.actions()) {
        Action b = a;
        b.src = renamed.gen_index("gen" + std::to_string(a.src));
        b.tgt = renamed.gen_index("gen" + std::to_string(a.tgt));
        renamed.toggle_action(b);
    }
    auto iso = is_isomorphic(id, renamed);
    REQUIRE(iso.has_value());
    for (int i = 0; i < 4; ++i) CHECK(renamed.gen((*iso)[i]).name == "gen" + std::to_string(i));

    // Different sizes: no witness.
    CHECK(!is_isomorphic(id, reduce(seed_builtin("N_tauE"))).has_value());
}

TEST_CASE("algebra mismatch is reported") {
    CHECK_THROWS_AS(box_tensor(seed_builtin("N_tauA"), seed_builtin("N_mu1")), Error);
    CHECK_THROWS_AS(is_isomorphic(seed_builtin("N_eta"), seed_builtin("N_tauA")), Error);
}
