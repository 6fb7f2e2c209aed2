#include "core/hochschild.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "core/calculus.hpp"
#include "core/f2.hpp"
#include "core/seeddata.hpp"

namespace bhf {

namespace {

struct HKey {
    int coef = -1;
    int gen = -1;
    std::vector<int16_t> word;
    bool operator==(const HKey& o) const { return coef == o.coef && gen == o.gen && word == o.word; }
};

struct HKeyHash {
    size_t operator()(const HKey& k) const {
        size_t h = (size_t)k.coef * 1000003u + (size_t)k.gen * 10007u;
        for (int16_t w : k.word) h = h * 131 + (size_t)(uint16_t)w;
        return h;
    }
};

// Enumerates the cyclic-complex basis level by level and computes original
// boundary rows.
struct Enumerator {
    const DABimodule& m;
    const PointedMatchedCircle* Z;
    std::vector<HKey> elems;
    std::vector<int> level_of;
    std::unordered_map<HKey, int, HKeyHash> index;
    std::vector<std::vector<int>> level_ids;
    std::vector<std::vector<const Action*>> actions_by_src;
    std::vector<std::vector<int16_t>> chords_by_lidem;
    std::vector<std::vector<int>> elems_from_to; // [p * ni + q]

    explicit Enumerator(const DABimodule& mod) : m(mod), Z(mod.left_algebra()) {
        if (m.left_algebra() != m.right_algebra())
            fail(ErrKind::AlgebraMismatch, "Hochschild complex needs one algebra on both sides");
        actions_by_src.resize(m.num_generators());
        for (const Action& a : m.actions()) actions_by_src[a.src].push_back(&a);
        int ni = Z->num_idempotents();
        chords_by_lidem.resize(ni);
        for (int e = ni; e < Z->num_elements(); ++e) chords_by_lidem[Z->left_idem(e)].push_back((int16_t)e);
        elems_from_to.resize(ni * ni);
        for (int e = 0; e < Z->num_elements(); ++e)
            elems_from_to[Z->left_idem(e) * ni + Z->right_idem(e)].push_back(e);
    }

    void build_level(int k) {
        level_ids.resize(std::max((int)level_ids.size(), k + 1));
        int ni = Z->num_idempotents();
        for (int x = 0; x < m.num_generators(); ++x) {
            std::vector<int16_t> word;
            // DFS over idempotent-composable words of length k starting at
            // the right idempotent of x.
            auto emit = [&](int cur_idem) {
                for (int a : elems_from_to[cur_idem * ni + m.gen(x).l_idem]) {
                    HKey key{a, x, word};
                    int id = (int)elems.size();
                    index.emplace(key, id);
                    elems.push_back(std::move(key));
                    level_of.push_back(k);
                    level_ids[k].push_back(id);
                }
            };
            std::vector<std::pair<int, size_t>> st; // (idem before next slot, next chord option)
            st.push_back({m.gen(x).r_idem, 0});
            while (!st.empty()) {
                auto& [cur, next] = st.back();
                if ((int)st.size() - 1 == k) {
                    emit(cur);
                    st.pop_back();
                    if (!word.empty()) word.pop_back();
                    continue;
                }
                const auto& opts = chords_by_lidem[cur];
                if (next >= opts.size()) {
                    st.pop_back();
                    if (!word.empty()) word.pop_back();
                    continue;
                }
                int16_t c = opts[next++];
                word.push_back(c);
                st.push_back({Z->right_idem(c), 0});
            }
        }
    }

    int lookup(int coef, int gen, const std::vector<int16_t>& word) const {
        auto it = index.find(HKey{coef, gen, word});
        if (it == index.end()) fail(ErrKind::Internal, "Hochschild differential target missing from basis");
        return it->second;
    }

    // Original boundary row (sorted, mod-2 deduplicated).
    std::vector<int> row(int id) const {
        const HKey& e = elems[id];
        int k = (int)e.word.size();
        std::vector<int> acc;
        // (1) bar merges
        for (int i = 0; i + 1 < k; ++i) {
            int p = Z->mul(e.word[i], e.word[i + 1]);
            if (p < 0) continue;
            std::vector<int16_t> w(e.word);
            w[i] = (int16_t)p;
            w.erase(w.begin() + i + 1);
            acc.push_back(lookup(e.coef, e.gen, w));
        }
        // (2) right-action terms on a prefix
        for (const Action* a : actions_by_src[e.gen]) {
            int j = (int)a->inputs.size();
            if (j > k) continue;
            if (!std::equal(a->inputs.begin(), a->inputs.end(), e.word.begin())) continue;
            int c = Z->mul(e.coef, a->out);
            if (c < 0) continue;
            std::vector<int16_t> w(e.word.begin() + j, e.word.end());
            acc.push_back(lookup(c, a->tgt, w));
        }
        // (3) left-action wrap-around
        if (k >= 1) {
            int c = Z->mul(e.word[k - 1], e.coef);
            if (c >= 0) {
                std::vector<int16_t> w(e.word.begin(), e.word.end() - 1);
                acc.push_back(lookup(c, e.gen, w));
            }
        }
        std::sort(acc.begin(), acc.end());
        std::vector<int> out;
        for (size_t i = 0; i < acc.size();) {
            size_t j = i;
            while (j < acc.size() && acc[j] == acc[i]) ++j;
            if ((j - i) & 1) out.push_back(acc[i]);
            i = j;
        }
        return out;
    }

    std::string name_of(int id) const {
        const HKey& e = elems[id];
        std::string s = "(" + Z->elem_name(e.coef) + "|" + m.gen(e.gen).name;
        for (int16_t w : e.word) s += ";" + Z->elem_name(w);
        return s + ")";
    }

    int grade_of(int id, const std::vector<int>& elem_grades) const {
        const HKey& e = elems[id];
        int g = elem_grades[e.coef] + m.gen(e.gen).grade;
        for (int16_t w : e.word) g += elem_grades[w] + 1;
        return g & 1;
    }
};

} // namespace

int F2Complex::level_size(int k) const {
    int c = 0;
    for (int l : level_of)
        if (l == k) ++c;
    return c;
}

void F2Complex::assert_d2() const {
    for (int i = 0; i < dim(); ++i) {
        std::vector<int> acc;
        for (int t : boundary[i]) acc.insert(acc.end(), boundary[t].begin(), boundary[t].end());
        std::sort(acc.begin(), acc.end());
        for (size_t a = 0; a < acc.size();) {
            size_t b = a;
            while (b < acc.size() && acc[b] == acc[a]) ++b;
            if ((b - a) & 1)
                fail(ErrKind::Internal, "d^2 != 0 at basis element " + std::to_string(i));
            a = b;
        }
    }
}

F2Complex bar_truncation(const DABimodule& m, int K) {
    Enumerator en(m);
    for (int k = 0; k <= K; ++k) en.build_level(k);
    F2Complex c;
    c.level_of = en.level_of;
    for (int i = 0; i < (int)en.elems.size(); ++i) {
        c.names.push_back(en.name_of(i));
        c.boundary.push_back(en.row(i));
    }
    c.assert_d2();
    return c;
}

namespace {

// Progressive Gaussian elimination of an F2 chain complex with late row
// admission. Cancelled pairs are logged so rows added later (higher bar
// levels) can be rewritten into current coordinates. Carried vectors track
// homology classes forward through cancellations.
struct Collapser {
    std::vector<std::set<int>> out;
    std::vector<std::unordered_set<int>> in;
    std::vector<char> alive;
    struct LogEntry {
        int x, y;
        std::vector<int> rest;
    };
    std::vector<LogEntry> log;
    std::vector<int> died_entry; // id -> log index, -1 while alive
    std::vector<std::unordered_set<int>*> carried;

    void ensure(int n) {
        out.resize(n);
        in.resize(n);
        alive.resize(n, 1);
        died_entry.resize(n, -1);
    }

    // Rewrites a row of original target ids into current coordinates.
    void normalize(std::unordered_set<int>& r) const {
        std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
        for (int t : r)
            if (died_entry[t] >= 0) heap.push(died_entry[t]);
        int last = -1;
        while (!heap.empty()) {
            int pos = heap.top();
            heap.pop();
            if (pos == last) continue;
            last = pos;
            const LogEntry& e = log[pos];
            if (r.count(e.y)) {
                r.erase(e.y);
                for (int t : e.rest) {
                    auto it = r.find(t);
                    if (it != r.end())
                        r.erase(it);
                    else {
                        r.insert(t);
                        if (died_entry[t] >= 0) heap.push(died_entry[t]);
                    }
                }
            }
            r.erase(e.x);
        }
    }

    void admit(int id, const std::vector<int>& orig_row, std::set<int>& work) {
        std::unordered_set<int> r(orig_row.begin(), orig_row.end());
        normalize(r);
        for (int t : r) {
            out[id].insert(t);
            in[t].insert(id);
        }
        if (!out[id].empty()) work.insert(id);
    }

    void toggle(int w, int t) {
        auto it = out[w].find(t);
        if (it != out[w].end()) {
            out[w].erase(it);
            in[t].erase(w);
        } else {
            out[w].insert(t);
            in[t].insert(w);
        }
    }

    void cancel(int x, int y, std::set<int>& work) {
        std::vector<int> rest;
        for (int t : out[x])
            if (t != x && t != y) rest.push_back(t);

        std::vector<int> ws(in[y].begin(), in[y].end());
        std::sort(ws.begin(), ws.end());
        for (int w : ws) {
            if (w == x || w == y) continue;
            out[w].erase(y); // y coordinate dies
            for (int t : rest) toggle(w, t);
            out[w].erase(x);
            in[x].erase(w);
            if (!out[w].empty()) work.insert(w);
        }
        for (auto* v : carried) {
            if (v->count(y)) {
                v->erase(y);
                for (int t : rest) {
                    auto it = v->find(t);
                    if (it != v->end())
                        v->erase(it);
                    else
                        v->insert(t);
                }
            }
            v->erase(x);
        }
        // Drop the pair entirely.
        for (int t : out[x]) in[t].erase(x);
        for (int t : out[y]) in[t].erase(y);
        for (int s : std::vector<int>(in[x].begin(), in[x].end())) out[s].erase(x);
        for (int s : std::vector<int>(in[y].begin(), in[y].end())) out[s].erase(y);
        out[x].clear();
        out[y].clear();
        in[x].clear();
        in[y].clear();
        alive[x] = alive[y] = 0;
        log.push_back({x, y, std::move(rest)});
        died_entry[x] = died_entry[y] = (int)log.size() - 1;
        work.erase(y);
    }

    void collapse(std::set<int>& work) {
        while (!work.empty()) {
            int x = *work.begin();
            if (!alive[x] || out[x].empty()) {
                work.erase(work.begin());
                continue;
            }
            int besty = -1;
            size_t best_in = 0;
            for (int y : out[x]) {
                if (y == x) continue;
                size_t iy = in[y].size();
                if (besty < 0 || iy < best_in || (iy == best_in && y < besty)) {
                    besty = y;
                    best_in = iy;
                }
            }
            if (besty < 0)
                fail(ErrKind::Internal, "self-loop-only boundary row contradicts d^2=0");
            cancel(x, besty, work);
        }
    }
};

} // namespace

HHResult hh_rank(const DABimodule& m_in, const HHOptions& opts) {
    const DABimodule* mp = &m_in;
    DABimodule sandwiched(m_in.left_algebra(), m_in.right_algebra());
    HHResult res;
    if (opts.sandwich) {
        const DABimodule& ib = seed_builtin("I_bounded");
        sandwiched = compact_names(reduce(box_tensor(reduce(box_tensor(ib, m_in)), ib)));
        mp = &sandwiched;
        res.sandwiched = true;
    }
    const DABimodule& m = *mp;

    Enumerator en(m);
    Collapser col;

    // Grading setup.
    std::vector<int> elem_grades;
    bool graded = opts.graded;
    std::string gnote;
    if (graded) {
        if (!m.fully_graded()) {
            graded = false;
            gnote = "bimodule not fully graded";
        } else {
            elem_grades = session_chord_grades(m.left_algebra());
            if (elem_grades.empty()) {
                graded = false;
                gnote = "no chord grading available for algebra " + m.left_algebra()->name();
            }
        }
    }
    std::vector<int> hgrade; // grade per basis element when graded

    struct Snapshot {
        int K;
        std::vector<int> class_ids;
        std::vector<std::unordered_set<int>> vecs;
        int s = -1, t = -1;
        std::array<int, 2> graded_s{{0, 0}};
        bool graded_ok = false;
    };
    // deque: carried-vector pointers into snapshots must stay valid on growth
    std::deque<Snapshot> snaps;

    auto image_rank = [&](Snapshot& sn, bool compute_graded) {
        std::vector<std::vector<int>> rows;
        std::unordered_map<int, int> colmap;
        std::vector<int> colgrade;
        for (auto& v : sn.vecs) {
            std::vector<int> row;
            for (int t : v) {
                auto it = colmap.find(t);
                int c;
                if (it == colmap.end()) {
                    c = (int)colmap.size();
                    colmap.emplace(t, c);
                    if (compute_graded && graded) colgrade.push_back(hgrade[t]);
                } else
                    c = it->second;
                row.push_back(c);
            }
            std::sort(row.begin(), row.end());
            rows.push_back(std::move(row));
        }
        int r = f2_rank(rows, (int)colmap.size());
        if (compute_graded && graded) {
            sn.graded_ok = true;
            std::array<std::vector<std::vector<int>>, 2> growds;
            for (size_t i = 0; i < rows.size(); ++i) {
                int g = hgrade[sn.class_ids[i]];
                for (int c : rows[i]) {
                    if (colgrade[c] != g) sn.graded_ok = false;
                }
                growds[g].push_back(rows[i]);
            }
            if (sn.graded_ok) {
                sn.graded_s[0] = f2_rank(growds[0], (int)colmap.size());
                sn.graded_s[1] = f2_rank(growds[1], (int)colmap.size());
            }
        }
        return r;
    };

    const size_t kDimGuard = 6u * 1000u * 1000u;
    for (int K = 0; K <= opts.k_max; ++K) {
        size_t before = en.elems.size();
        en.build_level(K);
        if (en.elems.size() > kDimGuard)
            fail(ErrKind::NonStabilized, "truncation dimension guard exceeded at K=" + std::to_string(K));
        col.ensure((int)en.elems.size());

        // Original rows for the new level, with a d^2 check against all
        // already-built rows.
        std::vector<std::vector<int>> rows(en.elems.size() - before);
        for (size_t id = before; id < en.elems.size(); ++id) rows[id - before] = en.row((int)id);
        if (graded) {
            hgrade.resize(en.elems.size());
            for (size_t id = before; id < en.elems.size(); ++id)
                hgrade[id] = en.grade_of((int)id, elem_grades);
            for (size_t id = before; id < en.elems.size() && graded; ++id) {
                for (int t : rows[id - before]) {
                    if (hgrade[t] != (hgrade[id] ^ 1)) {
                        graded = false;
                        gnote = "differential not homogeneous; graded ranks disabled";
                    }
                }
            }
        }

        std::set<int> work;
        for (size_t id = before; id < en.elems.size(); ++id) col.admit((int)id, rows[id - before], work);
        col.collapse(work);

        int h = 0;
        std::vector<int> alive_ids;
        for (size_t i = 0; i < en.elems.size(); ++i)
            if (col.alive[i]) {
                ++h;
                alive_ids.push_back((int)i);
            }

        // Finish ranks for earlier snapshots.
        for (auto& sn : snaps) {
            if (sn.K == K - 1 && sn.s < 0) sn.s = image_rank(sn, true);
            if (sn.K == K - 2 && sn.t < 0) {
                sn.t = image_rank(sn, false);
                // Detach this snapshot's carried vectors.
                for (auto& v : sn.vecs) {
                    auto it = std::find(col.carried.begin(), col.carried.end(), &v);
                    if (it != col.carried.end()) col.carried.erase(it);
                }
            }
        }

        HHStage st;
        st.K = K;
        st.truncation_rank = h;
        res.stages.push_back(st);

        // New snapshot of the current homology basis.
        snaps.push_back({});
        Snapshot& sn = snaps.back();
        sn.K = K;
        sn.class_ids = alive_ids;
        sn.vecs.reserve(alive_ids.size());
        for (int id : alive_ids) sn.vecs.push_back(std::unordered_set<int>{id});
        for (auto& v : sn.vecs) col.carried.push_back(&v);

        // Copy known s/t values into the stage report.
        for (auto& s2 : snaps) {
            if (s2.K >= 0 && s2.K < (int)res.stages.size()) {
                res.stages[s2.K].stable1 = s2.s;
                res.stages[s2.K].stable2 = s2.t;
            }
        }

        // Stabilization window: S, S+1, S+2 one-step ranks equal and the
        // two-step ranks confirm no transient classes inside the window.
        int S = K - 3;
        if (S >= opts.k_start) {
            auto& a = snaps[S];
            auto& b = snaps[S + 1];
            auto& c = snaps[S + 2];
            if (a.s >= 0 && b.s >= 0 && c.s >= 0 && a.t >= 0 && b.t >= 0 && a.s == b.s && b.s == c.s &&
                a.t == a.s && b.t == b.s) {
                res.total = a.s;
                res.stabilized_at = S;
                if (graded && a.graded_ok) {
                    res.graded_valid = true;
                    res.graded_ranks = a.graded_s;
                } else if (opts.graded) {
                    res.graded_valid = false;
                    res.grading_note = gnote.empty() ? "graded image not homogeneous" : gnote;
                }
                return res;
            }
        }
    }

    std::string traj = "no stabilization by K_max=" + std::to_string(opts.k_max) + "; trajectory:";
    for (const HHStage& st : res.stages)
        traj += " K" + std::to_string(st.K) + ":h=" + std::to_string(st.truncation_rank) +
                (st.stable1 >= 0 ? ",s=" + std::to_string(st.stable1) : "");
    fail(ErrKind::NonStabilized, traj);
}

} // namespace bhf
