#include "core/bimodule.hpp"

#include <algorithm>
#include <deque>

namespace bhf {

std::string RelationViolation::describe(const DABimodule& m) const {
    std::string s = "(" + m.gen(src).name + ", (";
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (i) s += ",";
        s += m.right_algebra()->elem_name(inputs[i]);
    }
    s += "), " + m.left_algebra()->elem_name(out) + ", " + m.gen(tgt).name + ")";
    return s;
}

int DABimodule::add_generator(const std::string& name, int l_idem, int r_idem, int grade) {
    if (gen_index_.count(name)) fail(ErrKind::SyntaxError, "duplicate generator name '" + name + "'");
    if (l_idem < 0 || l_idem >= left_->num_idempotents() || r_idem < 0 || r_idem >= right_->num_idempotents())
        fail(ErrKind::IdempotentMismatch, "generator '" + name + "' has out-of-range idempotents");
    gens_.push_back({name, l_idem, r_idem, grade});
    gen_index_[name] = (int)gens_.size() - 1;
    return (int)gens_.size() - 1;
}

int DABimodule::gen_index(const std::string& name) const {
    auto it = gen_index_.find(name);
    return it == gen_index_.end() ? -1 : it->second;
}

void DABimodule::validate_action(const Action& a) const {
    if (a.src < 0 || a.src >= num_generators() || a.tgt < 0 || a.tgt >= num_generators())
        fail(ErrKind::IdempotentMismatch, "action references unknown generator");
    const Generator& s = gens_[a.src];
    const Generator& t = gens_[a.tgt];
    int cur = s.r_idem;
    for (int16_t in : a.inputs) {
        if (in < 0 || in >= right_->num_elements())
            fail(ErrKind::UnknownElement, "action input out of range");
        if (right_->is_idempotent(in))
            fail(ErrKind::IdempotentMismatch,
                 "idempotent input " + right_->elem_name(in) + " in action from " + s.name + " (strict unitality)");
        if (right_->left_idem(in) != cur)
            fail(ErrKind::IdempotentMismatch, "input chain breaks at " + right_->elem_name(in) +
                                                  " in action from " + s.name);
        cur = right_->right_idem(in);
    }
    if (cur != t.r_idem)
        fail(ErrKind::IdempotentMismatch,
             "input chain of action " + s.name + " -> " + t.name + " does not end at the target idempotent");
    if (a.out < 0 || a.out >= left_->num_elements())
        fail(ErrKind::UnknownElement, "action output out of range");
    if (left_->left_idem(a.out) != s.l_idem || left_->right_idem(a.out) != t.l_idem)
        fail(ErrKind::IdempotentMismatch, "output " + left_->elem_name(a.out) + " of action " + s.name +
                                              " -> " + t.name + " has wrong idempotents");
}

void DABimodule::toggle_action(const Action& a) {
    validate_action(a);
    auto it = actions_.find(a);
    if (it == actions_.end())
        actions_.insert(a);
    else
        actions_.erase(it);
}

int DABimodule::max_arity() const {
    int m = 0;
    for (const Action& a : actions_) m = std::max(m, (int)a.inputs.size());
    return m;
}

bool DABimodule::fully_graded() const {
    for (const Generator& g : gens_)
        if (g.grade < 0) return false;
    return true;
}

DABimodule DABimodule::make_identity(const PointedMatchedCircle* z) {
    DABimodule m(z, z);
    for (int k = 0; k < z->num_idempotents(); ++k) m.add_generator("e" + std::to_string(k), k, k, 0);
    for (int e = z->num_idempotents(); e < z->num_elements(); ++e) {
        Action a;
        a.src = z->left_idem(e);
        a.inputs = {(int16_t)e};
        a.out = e;
        a.tgt = z->right_idem(e);
        m.toggle_action(a);
    }
    return m;
}

std::vector<RelationViolation> DABimodule::check_relations(int max_len) const {
    int arity = max_arity();
    if (max_len < 2 * arity)
        fail(ErrKind::ArityTooSmall, "max_len " + std::to_string(max_len) + " below twice the max arity " +
                                         std::to_string(arity));

    // Every term of every structure equation involves at least one existing
    // action, so the odd-count witnesses can be collected by enumerating
    // terms directly: composable action pairs and single actions with one
    // input split into a nonzero product.
    std::map<Action, int> count;
    std::vector<std::vector<const Action*>> by_src(num_generators());
    for (const Action& a : actions_) by_src[a.src].push_back(&a);

    for (const Action& a : actions_) {
        for (const Action* b : by_src[a.tgt]) {
            int prod = left_->mul(a.out, b->out);
            if (prod < 0) continue;
            Action key;
            key.src = a.src;
            key.inputs = a.inputs;
            key.inputs.insert(key.inputs.end(), b->inputs.begin(), b->inputs.end());
            key.out = prod;
            key.tgt = b->tgt;
            if ((int)key.inputs.size() <= max_len) count[key] ^= 1;
        }
        for (size_t j = 0; j < a.inputs.size(); ++j) {
            auto [p, q] = right_->chord_ends(a.inputs[j]);
            for (int mid = p + 1; mid < q; ++mid) {
                Action key;
                key.src = a.src;
                key.inputs.assign(a.inputs.begin(), a.inputs.begin() + j);
                key.inputs.push_back((int16_t)right_->chord(p, mid));
                key.inputs.push_back((int16_t)right_->chord(mid, q));
                key.inputs.insert(key.inputs.end(), a.inputs.begin() + j + 1, a.inputs.end());
                key.out = a.out;
                key.tgt = a.tgt;
                if ((int)key.inputs.size() <= max_len) count[key] ^= 1;
            }
        }
    }

    std::vector<RelationViolation> out;
    for (auto& [key, parity] : count) {
        if (parity) out.push_back({key.src, key.inputs, key.out, key.tgt});
    }
    return out;
}

BoundednessReport DABimodule::is_bounded() const {
    int n = num_generators();
    std::vector<std::set<int>> succ(n);
    for (const Action& a : actions_) succ[a.src].insert(a.tgt);

    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : succ[v]) indeg[w]++;
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push_back(v);
    BoundednessReport rep;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        rep.topo_order.push_back(v);
        for (int w : succ[v])
            if (--indeg[w] == 0) q.push_back(w);
    }
    if ((int)rep.topo_order.size() == n) {
        rep.bounded = true;
        return rep;
    }
    rep.topo_order.clear();
    // Extract a cycle among the generators that were never released.
    std::vector<char> stuck(n, 0);
    {
        std::vector<int> indeg2(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : succ[v]) indeg2[w]++;
        std::deque<int> q2;
        for (int v = 0; v < n; ++v)
            if (indeg2[v] == 0) q2.push_back(v);
        std::vector<char> released(n, 0);
        while (!q2.empty()) {
            int v = q2.front();
            q2.pop_front();
            released[v] = 1;
            for (int w : succ[v])
                if (--indeg2[w] == 0) q2.push_back(w);
        }
        for (int v = 0; v < n; ++v) stuck[v] = !released[v];
    }
    int start = 0;
    while (!stuck[start]) ++start;
    std::vector<int> pos(n, -1);
    std::vector<int> path;
    int cur = start;
    while (pos[cur] < 0) {
        pos[cur] = (int)path.size();
        path.push_back(cur);
        for (int w : succ[cur]) {
            if (stuck[w]) {
                cur = w;
                break;
            }
        }
    }
    rep.cycle.assign(path.begin() + pos[cur], path.end());
    return rep;
}

} // namespace bhf
