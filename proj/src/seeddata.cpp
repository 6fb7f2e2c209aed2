#include "core/seeddata.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace bhf {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (isspace((unsigned char)c)) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

[[noreturn]] void syntax(int line, const std::string& msg) {
    fail(ErrKind::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

} // namespace

DABimodule parse_bimodule(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<DABimodule> mod;
    std::string mod_name;

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];

        if (kw == "circle") {
            // circle <name> points <n> pairs (a,b)(c,d)...
            if (tok.size() < 5 || tok[2] != "points" || tok[4] != "pairs")
                syntax(lineno, "expected 'circle <name> points <n> pairs (a,b)...'");
            int pts = 0;
            try {
                pts = std::stoi(tok[3]);
            } catch (...) {
                syntax(lineno, "bad point count '" + tok[3] + "'");
            }
            std::string rest;
            for (size_t i = 5; i < tok.size(); ++i) rest += tok[i];
            std::vector<std::pair<int, int>> pairs;
            size_t p = 0;
            while (p < rest.size()) {
                if (rest[p] != '(') syntax(lineno, "expected '(' in pair list");
                size_t comma = rest.find(',', p);
                size_t close = rest.find(')', p);
                if (comma == std::string::npos || close == std::string::npos || comma > close)
                    syntax(lineno, "malformed pair list");
                try {
                    pairs.push_back({std::stoi(rest.substr(p + 1, comma - p - 1)),
                                     std::stoi(rest.substr(comma + 1, close - comma - 1))});
                } catch (...) {
                    syntax(lineno, "bad number in pair list");
                }
                p = close + 1;
            }
            PointedMatchedCircle::build(pts, pairs, tok[1]);
            continue;
        }

        if (kw == "bimodule") {
            if (tok.size() != 6 || tok[2] != "left" || tok[4] != "right")
                syntax(lineno, "expected 'bimodule <name> left <circle> right <circle>'");
            if (mod) syntax(lineno, "more than one bimodule in document");
            mod.emplace(PointedMatchedCircle::named(tok[3]), PointedMatchedCircle::named(tok[5]));
            mod->label = tok[1];
            continue;
        }

        if (kw == "gen") {
            if (!mod) syntax(lineno, "'gen' before 'bimodule'");
            if (tok.size() != 4 && !(tok.size() == 6 && tok[4] == "grade"))
                syntax(lineno, "expected 'gen <name> <l-idem> <r-idem> [grade <0|1>]'");
            int li = -1, ri = -1;
            try {
                li = mod->left_algebra()->parse_elem(tok[2]);
                ri = mod->right_algebra()->parse_elem(tok[3]);
            } catch (const Error& e) {
                syntax(lineno, e.what());
            }
            if (!mod->left_algebra()->is_idempotent(li) || !mod->right_algebra()->is_idempotent(ri))
                fail(ErrKind::IdempotentMismatch,
                     "line " + std::to_string(lineno) + ": generator idempotent tokens must be idempotents");
            int grade = -1;
            if (tok.size() == 6) grade = (tok[5] == "1") ? 1 : 0;
            try {
                mod->add_generator(tok[1], li, ri, grade);
            } catch (const Error& e) {
                syntax(lineno, e.what());
            }
            continue;
        }

        if (kw == "act") {
            if (!mod) syntax(lineno, "'act' before 'bimodule'");
            // act <g> | in1, in2 -> out | <g2>
            std::vector<std::string> t = tok;
            auto bar1 = std::find(t.begin(), t.end(), "|");
            if (t.size() < 2 || bar1 == t.end()) syntax(lineno, "expected 'act <g> | ... -> <out> | <g>'");
            auto bar2 = std::find(bar1 + 1, t.end(), "|");
            auto arrow = std::find(bar1 + 1, t.end(), "->");
            if (bar2 == t.end() || arrow == t.end() || arrow > bar2)
                syntax(lineno, "expected '-> <out> |' in action line");
            if (bar2 + 2 != t.end()) syntax(lineno, "expected target generator at end of action line");

            Action a;
            int src = mod->gen_index(t[1]);
            int tgt = mod->gen_index(*(bar2 + 1));
            if (src < 0) syntax(lineno, "unknown generator '" + t[1] + "'");
            if (tgt < 0) syntax(lineno, "unknown generator '" + *(bar2 + 1) + "'");
            a.src = src;
            a.tgt = tgt;
            try {
                for (auto it = bar1 + 1; it != arrow; ++it) {
                    std::string s = *it;
                    while (!s.empty() && s.back() == ',') s.pop_back();
                    if (s.empty()) continue;
                    a.inputs.push_back((int16_t)mod->right_algebra()->parse_elem(s));
                }
                if (arrow + 1 == bar2) syntax(lineno, "missing action output");
                a.out = mod->left_algebra()->parse_elem(*(arrow + 1));
                mod->toggle_action(a);
            } catch (const Error& e) {
                if (e.kind() == ErrKind::SyntaxError) throw;
                fail(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
            }
            continue;
        }

        syntax(lineno, "unknown keyword '" + kw + "'");
    }
    if (!mod) fail(ErrKind::SyntaxError, "document contains no bimodule");
    return *mod;
}

std::string serialize_bimodule(const DABimodule& m) {
    std::ostringstream out;
    out << "bimodule " << m.label << " left " << m.left_algebra()->name() << " right "
        << m.right_algebra()->name() << "\n";
    std::vector<int> order(m.num_generators());
    for (int i = 0; i < m.num_generators(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return m.gen(a).name < m.gen(b).name; });
    for (int i : order) {
        const Generator& g = m.gen(i);
        out << "gen " << g.name << " i" << g.l_idem << " i" << g.r_idem;
        if (g.grade >= 0) out << " grade " << g.grade;
        out << "\n";
    }
    std::vector<std::string> lines;
    for (const Action& a : m.actions()) {
        std::string s = "act " + m.gen(a.src).name + " |";
        for (size_t i = 0; i < a.inputs.size(); ++i)
            s += (i ? ", " : " ") + m.right_algebra()->elem_name(a.inputs[i]);
        s += " -> " + m.left_algebra()->elem_name(a.out) + " | " + m.gen(a.tgt).name;
        lines.push_back(s);
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& s : lines) out << s << "\n";
    return out.str();
}

} // namespace bhf
