#include "core/mcg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "core/calculus.hpp"
#include "core/seeddata.hpp"

namespace bhf {

std::string MCGWord::str() const {
    std::string s;
    for (const Letter& l : letters) {
        if (!s.empty()) s += " ";
        s += l.curve;
        if (l.sign < 0) s += "'";
    }
    return s;
}

MCGWord parse_word(const std::string& text) {
    MCGWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        char c = tok[0];
        if (c < 'A' || c > 'E')
            fail(ErrKind::SyntaxError, "word letter must be A..E, got '" + tok + "'");
        size_t p = 1;
        int sign = 1;
        int rep = 1;
        if (p < tok.size() && tok[p] == '\'') {
            sign = -1;
            ++p;
        }
        if (p < tok.size() && tok[p] == '^') {
            std::string num = tok.substr(p + 1);
            try {
                size_t used = 0;
                rep = std::stoi(num, &used);
                if (used != num.size()) throw std::invalid_argument(num);
            } catch (...) {
                fail(ErrKind::SyntaxError, "bad exponent in '" + tok + "'");
            }
            p = tok.size();
        }
        if (p != tok.size()) fail(ErrKind::SyntaxError, "trailing characters in '" + tok + "'");
        if (rep < 0) {
            sign = -sign;
            rep = -rep;
        }
        for (int i = 0; i < rep; ++i) w.letters.push_back({c, sign});
    }
    return w;
}

MCGWord invert_word(const MCGWord& w) {
    MCGWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->curve, -it->sign});
    return out;
}

MCGWord concat(const MCGWord& a, const MCGWord& b) {
    MCGWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

MCGWord power(const MCGWord& w, int n) {
    MCGWord out;
    if (n < 0) return power(invert_word(w), -n);
    for (int i = 0; i < n; ++i) out = concat(out, w);
    return out;
}

namespace {

const DABimodule& seed_of(const MCGWord::Letter& l) {
    std::string name = std::string("N_tau") + l.curve + (l.sign < 0 ? "_inv" : "");
    return seed_builtin(name);
}

} // namespace

DABimodule bimodule_of(const MCGWord& w) {
    if (w.letters.empty()) return seed_builtin("I");
    DABimodule acc = seed_of(w.letters.front());
    for (size_t i = 1; i < w.letters.size(); ++i)
        acc = compact_names(reduce(box_tensor(seed_of(w.letters[i]), acc)));
    return reduce(acc);
}

namespace {

void run_jobs(std::vector<std::function<void()>>& jobs, int threads) {
    if (threads <= 1) {
        for (auto& j : jobs) j();
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, (int)jobs.size());
    for (int t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                jobs[i]();
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

std::vector<RelationCheck> verify_relations(int jobs) {
    const char curves[5] = {'A', 'B', 'C', 'D', 'E'};
    std::vector<RelationCheck> checks;
    std::vector<std::function<void()>> tasks;

    auto add = [&](const std::string& name, std::function<bool(std::string&)> fn) {
        checks.push_back({name, false, ""});
        size_t idx = checks.size() - 1;
        tasks.push_back([&checks, idx, fn] {
            std::string detail;
            bool ok = false;
            try {
                ok = fn(detail);
            } catch (const Error& e) {
                detail = e.what();
            }
            checks[idx].ok = ok;
            checks[idx].detail = detail;
        });
    };
    auto iso_to = [](const DABimodule& m, const DABimodule& n, std::string& detail) {
        auto iso = is_isomorphic(m, n);
        if (!iso) {
            detail = "not isomorphic as reduced models (" + std::to_string(m.num_generators()) + " vs " +
                     std::to_string(n.num_generators()) + " generators)";
            return false;
        }
        return true;
    };

    // Ten inverse relations.
    for (char c : curves) {
        for (int ord = 0; ord < 2; ++ord) {
            std::string w = ord ? std::string(1, c) + " " + c + "'" : std::string(1, c) + "' " + c;
            add("inverse " + w, [w, iso_to](std::string& d) {
                return iso_to(bimodule_of(parse_word(w)), seed_builtin("I"), d);
            });
        }
    }
    // Four braid relations.
    for (int i = 0; i + 1 < 5; ++i) {
        std::string a(1, curves[i]), b(1, curves[i + 1]);
        add("braid " + a + b + a + "=" + b + a + b, [a, b, iso_to](std::string& d) {
            DABimodule lhs = bimodule_of(parse_word(a + " " + b + " " + a));
            DABimodule rhs = bimodule_of(parse_word(b + " " + a + " " + b));
            return iso_to(lhs, rhs, d);
        });
    }
    // Six commuting relations.
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 2; j < 5; ++j) {
            std::string a(1, curves[i]), b(1, curves[j]);
            add("commute " + a + b + "=" + b + a, [a, b, iso_to](std::string& d) {
                DABimodule lhs = bimodule_of(parse_word(a + " " + b));
                DABimodule rhs = bimodule_of(parse_word(b + " " + a));
                return iso_to(lhs, rhs, d);
            });
        }
    }
    // Unit relations for all ten twists.
    for (char c : curves) {
        for (int inv = 0; inv < 2; ++inv) {
            std::string name = std::string("N_tau") + c + (inv ? "_inv" : "");
            add("unit " + name, [name, iso_to](std::string& d) {
                const DABimodule& m = seed_builtin(name);
                DABimodule lhs = reduce(box_tensor(m, seed_builtin("I")));
                DABimodule rhs = reduce(box_tensor(seed_builtin("I"), m));
                return iso_to(lhs, reduce(m), d) && iso_to(rhs, reduce(m), d);
            });
        }
    }
    // Arc-slide factorization of the inverse C twist.
    add("arc-slide factorization", [iso_to](std::string& d) {
        DABimodule acc = seed_builtin("N_eta");
        for (const char* nm : {"N_mu1", "N_mu2", "N_mu3", "N_mu4", "N_eta_inv"})
            acc = compact_names(reduce(box_tensor(acc, seed_builtin(nm))));
        return iso_to(acc, compact_names(reduce(seed_builtin("N_tauC_inv"))), d);
    });

    run_jobs(tasks, jobs);
    return checks;
}

Classification classify(const MCGWord& w, int max_power, int jobs) {
    if (max_power < 3) fail(ErrKind::SpecInvalid, "classify needs max_power >= 3");
    Classification out;
    out.ranks.assign(max_power, -1);
    std::vector<std::function<void()>> tasks;
    for (int n = 1; n <= max_power; ++n) {
        tasks.push_back([&out, &w, n] {
            DABimodule m = bimodule_of(invert_word(power(w, n)));
            out.ranks[n - 1] = hh_rank(m).total;
        });
    }
    run_jobs(tasks, jobs);

    // Heuristic thresholds, stated as such in the docs.
    const std::vector<int>& r = out.ranks;
    int n = (int)r.size();
    int mx = *std::max_element(r.begin() + 1, r.end());
    int mn = *std::min_element(r.begin() + 1, r.end());
    if (mx - mn <= 1) {
        out.verdict = "bounded (periodic-type)";
        return out;
    }
    // Least-squares affine fit over n = 1..N.
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < n; ++i) {
            sx += i + 1;
            sy += r[i];
            sxx += (double)(i + 1) * (i + 1);
            sxy += (double)(i + 1) * r[i];
        }
        double det = n * sxx - sx * sx;
        double a = (n * sxy - sx * sy) / det;
        double b = (sy * sxx - sx * sxy) / det;
        double resid = 0;
        for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(r[i] - (a * (i + 1) + b)));
        if (resid <= 1.0) {
            out.verdict = "linear (reducible, periodic pieces)";
            return out;
        }
    }
    if (n >= 4) {
        bool expo = true;
        for (int i = n - 3; i < n; ++i) {
            if (r[i - 1] <= 0 || (double)r[i] / r[i - 1] < 1.3) expo = false;
        }
        if (expo) {
            out.verdict = "exponential (pseudo-Anosov-type)";
            return out;
        }
    }
    out.verdict = "inconclusive";
    return out;
}

} // namespace bhf
