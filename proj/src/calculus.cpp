#include "core/calculus.hpp"

#include <algorithm>
#include <map>

namespace bhf {

namespace {

// Cycle detection on the graph of input-less actions of n. With finite
// action sets the chain sums below are always finite, but a cycle here is
// the situation the pairing precondition rules out, so it is reported.
void check_terminating(const DABimodule& m, const DABimodule& n) {
    if (m.max_arity() == 0) return;
    int N = n.num_generators();
    std::vector<std::vector<int>> succ(N);
    for (const Action& a : n.actions())
        if (a.inputs.empty()) succ[a.src].push_back(a.tgt);
    std::vector<int> state(N, 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<int> stack, pos(N, -1);
    for (int s = 0; s < N; ++s) {
        if (state[s]) continue;
        // Iterative DFS.
        std::vector<std::pair<int, size_t>> frames{{s, 0}};
        state[s] = 1;
        pos[s] = 0;
        stack = {s};
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            if (i == succ[v].size()) {
                state[v] = 2;
                pos[v] = -1;
                stack.pop_back();
                frames.pop_back();
                continue;
            }
            int w = succ[v][i++];
            if (state[w] == 1) {
                std::string cyc;
                for (size_t k = pos[w]; k < stack.size(); ++k) cyc += n.gen(stack[k]).name + " -> ";
                cyc += n.gen(w).name;
                fail(ErrKind::NonTerminating, "cycle of input-less actions in right factor: " + cyc);
            }
            if (state[w] == 0) {
                state[w] = 1;
                pos[w] = (int)stack.size();
                stack.push_back(w);
                frames.push_back({w, 0});
            }
        }
    }
}

} // namespace

DABimodule box_tensor(const DABimodule& m, const DABimodule& n) {
    if (m.right_algebra() != n.left_algebra())
        fail(ErrKind::AlgebraMismatch, "box tensor needs m.right == n.left (got " +
                                           m.right_algebra()->name() + " vs " + n.left_algebra()->name() + ")");
    check_terminating(m, n);

    const auto* B = m.right_algebra();
    DABimodule out(m.left_algebra(), n.right_algebra());

    std::vector<std::vector<int>> pair_id(m.num_generators(), std::vector<int>(n.num_generators(), -1));
    for (int x = 0; x < m.num_generators(); ++x) {
        for (int y = 0; y < n.num_generators(); ++y) {
            if (m.gen(x).r_idem != n.gen(y).l_idem) continue;
            int grade = -1;
            if (m.gen(x).grade >= 0 && n.gen(y).grade >= 0) grade = (m.gen(x).grade + n.gen(y).grade) & 1;
            pair_id[x][y] =
                out.add_generator(m.gen(x).name + "." + n.gen(y).name, m.gen(x).l_idem, n.gen(y).r_idem, grade);
        }
    }

    // n's actions with chord output, indexed by (source, output).
    std::map<std::pair<int, int>, std::vector<const Action*>> n_by_src_out;
    for (const Action& a : n.actions())
        if (B->is_chord(a.out)) n_by_src_out[{a.src, a.out}].push_back(&a);

    // Rule (a): one m-action driven by a chain of n-actions producing its
    // inputs in order.
    for (const Action& ma : m.actions()) {
        int k = (int)ma.inputs.size();
        for (int y0 = 0; y0 < n.num_generators(); ++y0) {
            if (pair_id[ma.src][y0] < 0) continue;
            // DFS over chain positions.
            struct Frame {
                int y;
                size_t next = 0;
            };
            std::vector<const Action*> chain;
            std::vector<Frame> st{{y0, 0}};
            while (!st.empty()) {
                int depth = (int)st.size() - 1;
                if (depth == k) {
                    int yk = st.back().y;
                    Action na;
                    na.src = pair_id[ma.src][y0];
                    na.out = ma.out;
                    na.tgt = pair_id[ma.tgt][yk];
                    for (const Action* c : chain)
                        na.inputs.insert(na.inputs.end(), c->inputs.begin(), c->inputs.end());
                    out.toggle_action(na);
                    st.pop_back();
                    if (!chain.empty()) chain.pop_back();
                    continue;
                }
                auto it = n_by_src_out.find({st.back().y, ma.inputs[depth]});
                const std::vector<const Action*>* opts = (it == n_by_src_out.end()) ? nullptr : &it->second;
                if (!opts || st.back().next >= opts->size()) {
                    st.pop_back();
                    if (!chain.empty()) chain.pop_back();
                    continue;
                }
                const Action* c = (*opts)[st.back().next++];
                chain.push_back(c);
                st.push_back({c->tgt, 0});
            }
        }
    }

    // Rule (b): n-actions with idempotent output, paired with the implicit
    // unit action of m.
    for (const Action& na : n.actions()) {
        if (!B->is_idempotent(na.out)) continue;
        for (int x = 0; x < m.num_generators(); ++x) {
            if (m.gen(x).r_idem != na.out) continue;
            Action a;
            a.src = pair_id[x][na.src];
            a.inputs = na.inputs;
            a.out = m.gen(x).l_idem; // idempotent of the left algebra
            a.tgt = pair_id[x][na.tgt];
            out.toggle_action(a);
        }
    }
    return out;
}

namespace {

struct MutableBimodule {
    const PointedMatchedCircle* left;
    const PointedMatchedCircle* right;
    std::vector<Generator> gens;
    std::vector<char> alive;
    std::set<Action> actions;

    explicit MutableBimodule(const DABimodule& m)
        : left(m.left_algebra()), right(m.right_algebra()) {
        for (int i = 0; i < m.num_generators(); ++i) gens.push_back(m.gen(i));
        alive.assign(gens.size(), 1);
        actions = m.actions();
    }

    void toggle(const Action& a) {
        auto it = actions.find(a);
        if (it == actions.end())
            actions.insert(a);
        else
            actions.erase(it);
    }
};

} // namespace

DABimodule reduce(const DABimodule& m, bool reverse_order) {
    MutableBimodule w(m);
    const auto* zl = w.left;

    for (;;) {
        // Cancellable: input-less, idempotent output, distinct endpoints.
        const Action* best = nullptr;
        for (const Action& a : w.actions) {
            if (!a.inputs.empty() || a.src == a.tgt) continue;
            if (!zl->is_idempotent(a.out)) continue;
            if (!best) {
                best = &a;
                continue;
            }
            auto key = std::make_pair(w.gens[a.src].name, w.gens[a.tgt].name);
            auto bkey = std::make_pair(w.gens[best->src].name, w.gens[best->tgt].name);
            if ((key < bkey) != reverse_order) best = &a;
        }
        if (!best) break;

        Action cancel = *best;
        int x = cancel.src, y = cancel.tgt;
        std::vector<Action> into_y, out_of_x, incident;
        for (const Action& a : w.actions) {
            bool inc = (a.src == x || a.src == y || a.tgt == x || a.tgt == y);
            if (inc) incident.push_back(a);
            if (a.tgt == y && a.src != x && a.src != y) into_y.push_back(a);
            if (a.src == x && a.tgt != x && a.tgt != y) out_of_x.push_back(a);
        }
        for (const Action& a : incident) w.actions.erase(a);
        for (const Action& p : into_y) {
            for (const Action& q : out_of_x) {
                int prod = zl->mul(p.out, q.out);
                if (prod < 0) continue;
                Action c;
                c.src = p.src;
                c.inputs = p.inputs;
                c.inputs.insert(c.inputs.end(), q.inputs.begin(), q.inputs.end());
                c.out = prod;
                c.tgt = q.tgt;
                w.toggle(c);
            }
        }
        w.alive[x] = w.alive[y] = 0;
    }

    DABimodule out(w.left, w.right);
    std::vector<int> remap(w.gens.size(), -1);
    for (int i = 0; i < (int)w.gens.size(); ++i) {
        if (w.alive[i])
            remap[i] = out.add_generator(w.gens[i].name, w.gens[i].l_idem, w.gens[i].r_idem, w.gens[i].grade);
    }
    for (const Action& a : w.actions) {
        Action b = a;
        b.src = remap[a.src];
        b.tgt = remap[a.tgt];
        out.toggle_action(b);
    }
    return out;
}

DABimodule compact_names(const DABimodule& m) {
    std::vector<int> order(m.num_generators());
    for (int i = 0; i < m.num_generators(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return m.gen(a).name < m.gen(b).name; });
    std::vector<int> remap(m.num_generators());
    DABimodule out(m.left_algebra(), m.right_algebra());
    for (int rank = 0; rank < (int)order.size(); ++rank) {
        const Generator& g = m.gen(order[rank]);
        remap[order[rank]] = out.add_generator("g" + std::to_string(rank), g.l_idem, g.r_idem, g.grade);
    }
    for (const Action& a : m.actions()) {
        Action b = a;
        b.src = remap[a.src];
        b.tgt = remap[a.tgt];
        out.toggle_action(b);
    }
    return out;
}

namespace {

struct IsoSearch {
    const DABimodule& m;
    const DABimodule& n;
    bool use_grades;
    std::vector<int> map_mn, map_nm;
    std::map<std::pair<int, int>, std::vector<Action>> m_between, n_between; // (src,tgt) -> sorted actions

    IsoSearch(const DABimodule& m_, const DABimodule& n_, bool ignore_grades) : m(m_), n(n_) {
        use_grades = !ignore_grades && m.fully_graded() && n.fully_graded();
        map_mn.assign(m.num_generators(), -1);
        map_nm.assign(n.num_generators(), -1);
        for (const Action& a : m.actions()) m_between[{a.src, a.tgt}].push_back(a);
        for (const Action& a : n.actions()) n_between[{a.src, a.tgt}].push_back(a);
    }

    // Name-free signature of a generator.
    std::string signature(const DABimodule& mod, int g) const {
        const Generator& gen = mod.gen(g);
        std::string s = std::to_string(gen.l_idem) + "/" + std::to_string(gen.r_idem);
        if (use_grades) s += "g" + std::to_string(gen.grade);
        std::vector<std::string> outs, ins;
        for (const Action& a : mod.actions()) {
            std::string shape;
            for (int16_t in : a.inputs) shape += std::to_string(in) + ",";
            shape += "|" + std::to_string(a.out);
            if (a.src == g) outs.push_back(shape + (a.tgt == g ? "L" : ""));
            if (a.tgt == g && a.src != g) ins.push_back(shape);
        }
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        for (auto& t : outs) s += ">" + t;
        for (auto& t : ins) s += "<" + t;
        return s;
    }

    bool compatible(int x, int y) {
        // All actions between x and already-mapped generators must match.
        auto same = [&](int ms, int mt, int ns, int nt) {
            auto itm = m_between.find({ms, mt});
            auto itn = n_between.find({ns, nt});
            size_t cm = itm == m_between.end() ? 0 : itm->second.size();
            size_t cn = itn == n_between.end() ? 0 : itn->second.size();
            if (cm != cn) return false;
            if (cm == 0) return true;
            // Compare (inputs, out) multisets.
            std::vector<std::pair<std::vector<int16_t>, int>> am, an;
            for (const Action& a : itm->second) am.push_back({a.inputs, a.out});
            for (const Action& a : itn->second) an.push_back({a.inputs, a.out});
            std::sort(am.begin(), am.end());
            std::sort(an.begin(), an.end());
            return am == an;
        };
        if (!same(x, x, y, y)) return false;
        for (int w = 0; w < m.num_generators(); ++w) {
            if (w == x || map_mn[w] < 0) continue;
            if (!same(x, w, y, map_mn[w])) return false;
            if (!same(w, x, map_mn[w], y)) return false;
        }
        return true;
    }

    bool search(const std::vector<int>& order, size_t i, const std::map<std::string, std::vector<int>>& n_classes,
                const std::vector<std::string>& m_sig) {
        if (i == order.size()) return true;
        int x = order[i];
        auto it = n_classes.find(m_sig[x]);
        if (it == n_classes.end()) return false;
        for (int y : it->second) {
            if (map_nm[y] >= 0) continue;
            const Generator& gx = m.gen(x);
            const Generator& gy = n.gen(y);
            if (gx.l_idem != gy.l_idem || gx.r_idem != gy.r_idem) continue;
            if (use_grades && gx.grade != gy.grade) continue;
            if (!compatible(x, y)) continue;
            map_mn[x] = y;
            map_nm[y] = x;
            if (search(order, i + 1, n_classes, m_sig)) return true;
            map_mn[x] = -1;
            map_nm[y] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> is_isomorphic(const DABimodule& m, const DABimodule& n,
                                              bool ignore_grades) {
    if (m.left_algebra() != n.left_algebra() || m.right_algebra() != n.right_algebra())
        fail(ErrKind::AlgebraMismatch, "isomorphism test across different algebras");
    if (m.num_generators() != n.num_generators()) return std::nullopt;
    if (m.actions().size() != n.actions().size()) return std::nullopt;

    IsoSearch s(m, n, ignore_grades);
    std::vector<std::string> m_sig(m.num_generators()), n_sig(n.num_generators());
    std::map<std::string, std::vector<int>> m_classes, n_classes;
    for (int g = 0; g < m.num_generators(); ++g) {
        m_sig[g] = s.signature(m, g);
        m_classes[m_sig[g]].push_back(g);
    }
    for (int g = 0; g < n.num_generators(); ++g) {
        n_sig[g] = s.signature(n, g);
        n_classes[n_sig[g]].push_back(g);
    }
    if (m_classes.size() != n_classes.size()) return std::nullopt;
    for (auto& [sig, members] : m_classes) {
        auto it = n_classes.find(sig);
        if (it == n_classes.end() || it->second.size() != members.size()) return std::nullopt;
    }

    // Most constrained (smallest class) generators first.
    std::vector<int> order(m.num_generators());
    for (int i = 0; i < m.num_generators(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        size_t ca = m_classes[m_sig[a]].size(), cb = m_classes[m_sig[b]].size();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    if (!s.search(order, 0, n_classes, m_sig)) return std::nullopt;
    return s.map_mn;
}

} // namespace bhf
