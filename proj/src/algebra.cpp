#include "core/algebra.hpp"

#include <algorithm>
#include <mutex>

namespace bhf {

namespace {

std::map<std::string, std::unique_ptr<PointedMatchedCircle>>& registry() {
    static std::map<std::string, std::unique_ptr<PointedMatchedCircle>> reg;
    return reg;
}
std::mutex reg_mutex;

} // namespace

int surgery_circle_count(int points, const std::vector<std::pair<int, int>>& matching) {
    // The cut circle is a segment through z with marked points 0..n-1. Each
    // point p has two sides p- and p+ (encoded 2p, 2p+1). Arcs of the circle
    // connect consecutive sides; the arc through z connects (n-1)+ to 0-.
    // Surgery on a pair (a,b) joins a- to b+ and a+ to b-. Arcs and joins
    // form a perfect matching on the side set; count the cycles.
    int n = points;
    std::vector<int> arc(2 * n, -1), join(2 * n, -1);
    auto lo = [](int p) { return 2 * p; };
    auto hi = [](int p) { return 2 * p + 1; };
    for (int p = 0; p + 1 < n; ++p) {
        arc[hi(p)] = lo(p + 1);
        arc[lo(p + 1)] = hi(p);
    }
    arc[hi(n - 1)] = lo(0);
    arc[lo(0)] = hi(n - 1);
    for (auto [a, b] : matching) {
        join[lo(a)] = hi(b);
        join[hi(b)] = lo(a);
        join[hi(a)] = lo(b);
        join[lo(b)] = hi(a);
    }
    std::vector<char> seen(2 * n, 0);
    int circles = 0;
    for (int s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        ++circles;
        int cur = s;
        bool take_arc = true;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = take_arc ? arc[cur] : join[cur];
            take_arc = !take_arc;
        }
    }
    return circles;
}

const PointedMatchedCircle* PointedMatchedCircle::build(int points,
                                                        std::vector<std::pair<int, int>> matching,
                                                        const std::string& name) {
    if (points <= 0 || points % 2 != 0) fail(ErrKind::NotAPartition, "point count must be a positive even number");
    std::vector<int> cover(points, 0);
    for (auto& pr : matching) {
        if (pr.first > pr.second) std::swap(pr.first, pr.second);
        for (int p : {pr.first, pr.second}) {
            if (p < 0 || p >= points) fail(ErrKind::NotAPartition, "point out of range in matching of " + name);
            cover[p]++;
        }
        if (pr.first == pr.second) fail(ErrKind::NotAPartition, "pair with equal points in " + name);
    }
    for (int p = 0; p < points; ++p)
        if (cover[p] != 1) fail(ErrKind::NotAPartition, "point " + std::to_string(p) + " covered " + std::to_string(cover[p]) + " times in " + name);

    int circles = surgery_circle_count(points, matching);
    if (circles != 1)
        fail(ErrKind::SurgeryDisconnected,
             "surgery on all pairs of " + name + " yields " + std::to_string(circles) + " circles");

    auto c = std::unique_ptr<PointedMatchedCircle>(new PointedMatchedCircle());
    c->name_ = name;
    c->points_ = points;
    std::sort(matching.begin(), matching.end());
    c->pairs_ = matching;
    c->pair_of_point_.assign(points, -1);
    for (int k = 0; k < (int)matching.size(); ++k) {
        c->pair_of_point_[matching[k].first] = k;
        c->pair_of_point_[matching[k].second] = k;
    }

    int g2 = points / 2; // number of idempotents
    for (int k = 0; k < g2; ++k) {
        c->left_idem_.push_back(k);
        c->right_idem_.push_back(k);
        c->ends_.push_back({-1, -1});
        c->names_.push_back("i" + std::to_string(k));
    }
    for (int a = 0; a < points; ++a) {
        for (int b = a + 1; b < points; ++b) {
            int id = (int)c->left_idem_.size();
            c->chord_id_[{a, b}] = id;
            c->left_idem_.push_back(c->pair_of_point_[a]);
            c->right_idem_.push_back(c->pair_of_point_[b]);
            c->ends_.push_back({a, b});
            // Z2-style shorthand r<digits> when the circle has <= 10 points,
            // general [a,b] otherwise.
            if (points <= 10) {
                std::string nm = "r";
                for (int j = a + 1; j <= b; ++j) nm += std::to_string(j);
                c->names_.push_back(nm);
            } else {
                c->names_.push_back("[" + std::to_string(a) + "," + std::to_string(b) + "]");
            }
        }
    }

    int n = (int)c->left_idem_.size();
    c->mul_.assign(n * n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            bool xi = x < g2, yi = y < g2;
            if (xi && yi && x == y) c->mul_[x * n + y] = (int16_t)x;
            else if (xi && !yi && x == c->left_idem_[y]) c->mul_[x * n + y] = (int16_t)y;
            else if (!xi && yi && y == c->right_idem_[x]) c->mul_[x * n + y] = (int16_t)x;
        }
    }
    // Chord*chord concatenation.
    for (auto& [ab, x] : c->chord_id_) {
        for (auto& [cd, y] : c->chord_id_) {
            if (ab.second == cd.first) {
                c->mul_[x * n + y] = (int16_t)c->chord_id_.at({ab.first, cd.second});
            }
        }
    }

    std::lock_guard<std::mutex> lock(reg_mutex);
    auto [it, inserted] = registry().emplace(name, std::move(c));
    if (!inserted) {
        // Rebuilding an identical circle under the same name is allowed.
        return it->second.get();
    }
    return it->second.get();
}

const PointedMatchedCircle* PointedMatchedCircle::named(const std::string& name) {
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto it = registry().find(name);
    if (it == registry().end()) {
        std::string avail;
        for (auto& kv : registry()) avail += (avail.empty() ? "" : ", ") + kv.first;
        fail(ErrKind::UnknownName, "circle '" + name + "' not registered (have: " + avail + ")");
    }
    return it->second.get();
}

std::vector<std::string> PointedMatchedCircle::registered_names() {
    std::lock_guard<std::mutex> lock(reg_mutex);
    std::vector<std::string> out;
    for (auto& kv : registry()) out.push_back(kv.first);
    return out;
}

int PointedMatchedCircle::chord(int a, int b) const {
    auto it = chord_id_.find({a, b});
    if (it == chord_id_.end())
        fail(ErrKind::UnknownElement,
             "no chord [" + std::to_string(a) + "," + std::to_string(b) + "] in " + name_);
    return it->second;
}

std::pair<int, int> PointedMatchedCircle::chord_ends(int e) const {
    if (e < 0 || e >= num_elements() || is_idempotent(e))
        fail(ErrKind::UnknownElement, "element " + std::to_string(e) + " is not a chord of " + name_);
    return ends_[e];
}

std::vector<int> PointedMatchedCircle::basis() const {
    std::vector<int> out(num_elements());
    for (int i = 0; i < num_elements(); ++i) out[i] = i;
    return out;
}

int PointedMatchedCircle::parse_elem(const std::string& token) const {
    if (token.empty()) fail(ErrKind::UnknownElement, "empty element token");
    auto as_int = [&](const std::string& s) {
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) fail(ErrKind::UnknownElement, "bad number '" + s + "'");
            return v;
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail(ErrKind::UnknownElement, "bad number '" + s + "'");
        }
    };
    if (token[0] == 'i') {
        int k = as_int(token.substr(1));
        if (k < 0 || k >= num_idempotents())
            fail(ErrKind::UnknownElement, "no idempotent " + token + " in " + name_);
        return k;
    }
    if (token[0] == 'r') {
        std::string d = token.substr(1);
        if (d.empty()) fail(ErrKind::UnknownElement, "bad chord token '" + token + "'");
        for (size_t i = 0; i < d.size(); ++i) {
            if (!isdigit((unsigned char)d[i])) fail(ErrKind::UnknownElement, "bad chord token '" + token + "'");
            if (i > 0 && d[i] != d[i - 1] + 1)
                fail(ErrKind::UnknownElement, "non-consecutive digits in '" + token + "'");
        }
        int first = d.front() - '0', last = d.back() - '0';
        return chord(first - 1, last);
    }
    if (token[0] == '[') {
        auto comma = token.find(',');
        if (comma == std::string::npos || token.back() != ']')
            fail(ErrKind::UnknownElement, "bad chord token '" + token + "'");
        int a = as_int(token.substr(1, comma - 1));
        int b = as_int(token.substr(comma + 1, token.size() - comma - 2));
        return chord(a, b);
    }
    if (token[0] == '|') {
        // |(a -> b)| strand-style chord notation.
        std::string t;
        for (char ch : token)
            if (isdigit((unsigned char)ch) || ch == '-' || ch == '>' || ch == ',') t += ch;
        auto arrow = t.find("->");
        if (arrow != std::string::npos) {
            int a = as_int(t.substr(0, arrow));
            int b = as_int(t.substr(arrow + 2));
            return chord(a, b);
        }
        fail(ErrKind::UnknownElement, "bad strand token '" + token + "'");
    }
    fail(ErrKind::UnknownElement, "unrecognized element token '" + token + "'");
}

} // namespace bhf
