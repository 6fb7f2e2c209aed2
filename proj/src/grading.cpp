#include "core/grading.hpp"

#include <algorithm>

namespace bhf {

namespace {

struct Row {
    std::vector<uint64_t> bits;
    int rhs = 0;
    std::string desc;
    void flip(int v) { bits[v >> 6] ^= (uint64_t)1 << (v & 63); }
    bool test(int v) const { return (bits[v >> 6] >> (v & 63)) & 1; }
    void xor_with(const Row& o) {
        for (size_t i = 0; i < bits.size(); ++i) bits[i] ^= o.bits[i];
        rhs ^= o.rhs;
    }
    bool empty() const {
        for (uint64_t w : bits)
            if (w) return false;
        return true;
    }
};

} // namespace

GradingSolveResult solve_gradings(const std::vector<const DABimodule*>& ms,
                                  const DABimodule* normalization) {
    // Collect circles (deterministically by name) and assign variables.
    std::map<std::string, const PointedMatchedCircle*> circles;
    for (const DABimodule* m : ms) {
        circles[m->left_algebra()->name()] = m->left_algebra();
        circles[m->right_algebra()->name()] = m->right_algebra();
    }
    if (normalization) {
        circles[normalization->left_algebra()->name()] = normalization->left_algebra();
        circles[normalization->right_algebra()->name()] = normalization->right_algebra();
    }

    std::map<const PointedMatchedCircle*, int> circle_var0;
    int nvars = 0;
    for (auto& [nm, z] : circles) {
        circle_var0[z] = nvars;
        nvars += z->num_chords();
    }
    auto chord_var = [&](const PointedMatchedCircle* z, int elem) {
        return circle_var0.at(z) + (elem - z->num_idempotents());
    };

    std::vector<const DABimodule*> mods = ms;
    if (normalization && std::find(mods.begin(), mods.end(), normalization) == mods.end())
        mods.push_back(normalization);
    std::map<const DABimodule*, int> mod_var0;
    for (const DABimodule* m : mods) {
        mod_var0[m] = nvars;
        nvars += m->num_generators();
    }

    int words = (nvars + 63) / 64;
    std::vector<Row> rows;
    auto new_row = [&](const std::string& desc) -> Row& {
        rows.push_back(Row{std::vector<uint64_t>(words, 0), 0, desc});
        return rows.back();
    };

    // Multiplicativity on every circle.
    for (auto& [nm, z] : circles) {
        int n = z->num_elements();
        for (int x = z->num_idempotents(); x < n; ++x) {
            for (int y = z->num_idempotents(); y < n; ++y) {
                int p = z->mul(x, y);
                if (p < 0) continue;
                Row& r = new_row("multiplicativity " + z->elem_name(x) + "*" + z->elem_name(y) + " in " + nm);
                r.flip(chord_var(z, x));
                r.flip(chord_var(z, y));
                r.flip(chord_var(z, p));
            }
        }
    }

    // Degree convention per action.
    for (const DABimodule* m : mods) {
        const auto* zl = m->left_algebra();
        const auto* zr = m->right_algebra();
        for (const Action& a : m->actions()) {
            Row& r = new_row("action " + m->gen(a.src).name + "->" + m->gen(a.tgt).name + " out " +
                             zl->elem_name(a.out));
            if (zl->is_chord(a.out)) r.flip(chord_var(zl, a.out));
            r.flip(mod_var0.at(m) + a.src);
            r.flip(mod_var0.at(m) + a.tgt);
            for (int16_t in : a.inputs) r.flip(chord_var(zr, in));
            r.rhs = ((int)a.inputs.size() + 1) & 1; // n - 1 mod 2
        }
    }

    // Normalization.
    if (normalization) {
        for (int g = 0; g < normalization->num_generators(); ++g) {
            Row& r = new_row("normalization gr(" + normalization->gen(g).name + ")=0");
            r.flip(mod_var0.at(normalization) + g);
        }
    }

    // Gauss-Jordan elimination.
    std::vector<int> pivot_row_of_var(nvars, -1);
    int rank = 0;
    for (int v = 0; v < nvars; ++v) {
        int pr = -1;
        for (int i = rank; i < (int)rows.size(); ++i) {
            if (rows[i].test(v)) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(rows[pr], rows[rank]);
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i != rank && rows[i].test(v)) {
                std::string keep = rows[i].desc;
                rows[i].xor_with(rows[rank]);
                rows[i].desc = keep;
            }
        }
        pivot_row_of_var[v] = rank;
        ++rank;
    }

    GradingSolveResult res;
    for (const Row& r : rows) {
        if (r.empty() && r.rhs) {
            res.consistent = false;
            res.witness = r.desc;
            return res;
        }
    }
    res.consistent = true;

    // Free variables are 0, so each pivot variable equals its row's rhs.
    std::vector<int> sol(nvars, 0);
    for (int v = 0; v < nvars; ++v)
        if (pivot_row_of_var[v] >= 0) sol[v] = rows[pivot_row_of_var[v]].rhs;

    for (auto& [nm, z] : circles) {
        std::vector<int> g(z->num_elements(), 0);
        for (int e = z->num_idempotents(); e < z->num_elements(); ++e) g[e] = sol[chord_var(z, e)];
        res.assignment.elem_grades[z] = std::move(g);
    }
    for (const DABimodule* m : mods) {
        std::vector<int> g(m->num_generators(), 0);
        for (int i = 0; i < m->num_generators(); ++i) g[i] = sol[mod_var0.at(m) + i];
        res.assignment.gen_grades[m] = std::move(g);
    }
    return res;
}

} // namespace bhf
