#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "canontl/hecke.hpp"
#include "canontl/json_io.hpp"
#include "canontl/laurent.hpp"
#include "canontl/parabolic.hpp"
#include "canontl/quantum.hpp"
#include "canontl/render.hpp"
#include "canontl/spin.hpp"
#include "canontl/symgroup.hpp"
#include "canontl/tldiagram.hpp"

using namespace canontl;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int max_n = 10;
    std::string cache_flag;
    bool no_cache = false;
    std::string output = "text";
    std::string q_eval;
    int threads = 0;

    bool has_q() const { return !q_eval.empty(); }
    mpq_class q() const {
        mpq_class v;
        try {
            v = mpq_class(q_eval);
        } catch (const std::invalid_argument&) {
            throw UsageError("--q-eval: not a rational number: " + q_eval);
        }
        if (v.get_den() == 0) throw UsageError("--q-eval: zero denominator");
        v.canonicalize();
        if (v == 0) throw UsageError("--q-eval must be nonzero");
        return v;
    }
    void validate() const {
        if (max_n < 1) throw UsageError("--max-n must be at least 1");
        if (has_q()) (void)q();
    }
    void check_cap(int n) const {
        if (n > max_n)
            throw UsageError("n=" + std::to_string(n) + " exceeds --max-n cap of " +
                             std::to_string(max_n));
    }
};

std::vector<int> parse_int_list(std::string s) {
    for (char& ch : s)
        if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
    std::istringstream in(s);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw UsageError("bad integer list: " + s);
    return out;
}

Permutation parse_perm(const std::string& s, int n) {
    Permutation w(n);
    try {
        w = Permutation(parse_int_list(s));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + ": " + s);
    }
    if (w.n() != n) throw UsageError("permutation length does not match --n");
    return w;
}

std::pair<std::string, bool> resolve_cache(const Config& cfg) {
    if (!cfg.cache_flag.empty()) return {cfg.cache_flag, !cfg.no_cache};
    const char* env = std::getenv("CANONTL_CACHE");
    if (env && *env) return {env, !cfg.no_cache};
    const char* home = std::getenv("HOME");
    if (home && *home) return {std::string(home) + "/.canontl_cache.json", !cfg.no_cache};
    return {"", false};
}

// persistent KL rows, one JSON object keyed "n:[one-line]"
class KLCache {
public:
    KLCache(std::string path, bool enabled)
        : path_(std::move(path)), enabled_(enabled && !path_.empty()) {
        if (!enabled_) return;
        std::ifstream in(path_);
        if (!in) return;
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            std::cerr << "warning: ignoring corrupt KL cache at " << path_ << "\n";
            return;
        }
        for (const auto& [k, v] : j.items()) entries_[k] = v;
    }

    bool enabled() const { return enabled_; }
    const std::map<std::string, json>& entries() const { return entries_; }

    void seed(const HeckeAlgebra& alg, int n) const {
        if (!enabled_) return;
        const std::string prefix = std::to_string(n) + ":";
        for (const auto& [k, v] : entries_) {
            if (k.rfind(prefix, 0) != 0) continue;
            try {
                Permutation w(parse_int_list(k.substr(prefix.size())));
                if (w.n() == n) alg.seed_kl(w, hecke_from_json(v));
            } catch (...) {
                std::cerr << "warning: skipping malformed cache entry " << k << "\n";
            }
        }
    }

    void put(int n, const Permutation& w, const HeckeElt& row) {
        if (!enabled_) return;
        std::string key = std::to_string(n) + ":" + w.str();
        json j = hecke_to_json(row);
        auto it = entries_.find(key);
        if (it != entries_.end() && it->second == j) return;
        entries_[key] = std::move(j);
        dirty_ = true;
    }

    void harvest(const HeckeAlgebra& alg, const std::vector<Permutation>& candidates) {
        if (!enabled_) return;
        for (const auto& w : candidates)
            if (alg.kl_cached(w)) put(alg.rank(), w, alg.kl_basis(w));
    }

    void flush() {
        if (!enabled_ || !dirty_) return;
        const std::string tmp = path_ + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (out) out << json(entries_).dump();
            if (!out) {
                std::cerr << "warning: could not write KL cache at " << path_ << "\n";
                std::remove(tmp.c_str());
                return;
            }
        }
        if (std::rename(tmp.c_str(), path_.c_str()) != 0) {
            std::cerr << "warning: could not move KL cache into place at " << path_ << "\n";
            std::remove(tmp.c_str());
            return;
        }
        dirty_ = false;
    }

private:
    std::string path_;
    bool enabled_ = false;
    bool dirty_ = false;
    std::map<std::string, json> entries_;
};

std::string q_suffix(const LaurentPoly& p, const Config& cfg) {
    if (!cfg.has_q()) return "";
    return " = " + p.eval_at(cfg.q()).get_str();
}

void print_spin(const SpinVector& v, const Config& cfg) {
    if (cfg.output == "json") {
        std::cout << spin_to_json(v).dump() << "\n";
        return;
    }
    std::vector<std::string> keys;
    for (const auto& [s, c] : v.coords) keys.push_back(s);
    std::sort(keys.begin(), keys.end(), sign_string_less);
    for (const auto& s : keys) {
        const LaurentPoly& c = v.coords.at(s);
        std::cout << s << " coeff " << c.str() << q_suffix(c, cfg) << "\n";
    }
}

void print_hecke(const HeckeElt& h, const Config& cfg) {
    if (cfg.output == "json") {
        std::cout << hecke_to_json(h).dump() << "\n";
        return;
    }
    std::vector<std::pair<std::vector<int>, Permutation>> order;
    for (const auto& [w, c] : h) order.emplace_back(w.reduced_word(), w);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first < b.first;
    });
    for (const auto& [word, w] : order) {
        std::string ws;
        for (size_t i = 0; i < word.size(); ++i)
            ws += (i ? "," : "") + std::to_string(word[i]);
        const LaurentPoly& c = h.at(w);
        std::cout << "H[" << ws << "] coeff " << c.str() << q_suffix(c, cfg) << "\n";
    }
}

void print_parabolic(const ParabolicElt& x, const Config& cfg) {
    if (cfg.output == "json") {
        std::cout << parabolic_to_json(x).dump() << "\n";
        return;
    }
    std::vector<Permutation> order;
    for (const auto& [w, c] : x.coords) order.push_back(w);
    std::sort(order.begin(), order.end(), [](const Permutation& a, const Permutation& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return a.one_line() < b.one_line();
    });
    for (const auto& w : order) {
        const LaurentPoly& c = x.coords.at(w);
        std::cout << kind_name(x.kind) << w.str() << " coeff " << c.str()
                  << q_suffix(c, cfg) << "\n";
    }
}

void check_label_chars(const std::string& label) {
    for (char c : label)
        if (c != '+' && c != '-') throw UsageError("label must be a +/- string");
}

std::vector<std::string> sorted_labels(int n) {
    std::vector<std::string> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string s(n, '+');
        for (int j = 0; j < n; ++j)
            if (mask & (1 << j)) s[j] = '-';
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), sign_string_less);
    return out;
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// ---------------------------------------------------------------- commands

int cmd_dcb(int n, const std::string& label, const std::string& method,
            const Config& cfg) {
    cfg.validate();
    check_label_chars(label);
    if ((int)label.size() != n) throw UsageError("label length does not match --n");
    cfg.check_cap(n);
    SpinVector v;
    if (method == "inductive") {
        v = dcb_inductive(label);
    } else if (method == "explicit") {
        v = dcb_explicit(label);
    } else if (method == "diagram") {
        v = dcb_via_diagram(label);
    } else {
        v = dcb_inductive(label);
        if (dcb_explicit(label) != v || dcb_via_diagram(label) != v) {
            std::cerr << "error: cross-check mismatch for label " << label << "\n";
            return 1;
        }
    }
    print_spin(v, cfg);
    return 0;
}

int cmd_cb(int n, const std::string& label, const Config& cfg) {
    cfg.validate();
    check_label_chars(label);
    if ((int)label.size() != n) throw UsageError("label length does not match --n");
    cfg.check_cap(n);
    print_spin(canonical_basis(label), cfg);
    return 0;
}

int cmd_kl(int n, const std::string& word, const std::string& perm, const Config& cfg) {
    cfg.validate();
    if (n < 1) throw UsageError("--n must be positive");
    cfg.check_cap(n);
    if (word.empty() == perm.empty())
        throw UsageError("give exactly one of --word and --perm");
    Permutation w(n);
    if (!word.empty()) {
        std::vector<int> letters;
        if (word.find(',') != std::string::npos || word.find(' ') != std::string::npos) {
            letters = parse_int_list(word);
        } else {
            for (char c : word) {
                if (c < '1' || c > '9') throw UsageError("bad generator letter in --word");
                letters.push_back(c - '0');
            }
        }
        for (int l : letters)
            if (l < 1 || l > n - 1) throw UsageError("generator index out of range");
        w = Permutation::from_word(letters, n);
    } else {
        w = parse_perm(perm, n);
    }
    auto [path, enabled] = resolve_cache(cfg);
    KLCache cache(path, enabled);
    HeckeAlgebra alg(n);
    cache.seed(alg, n);
    HeckeElt b = alg.kl_basis(w);
    cache.harvest(alg, alg.bruhat_interval_below(w));
    cache.flush();
    print_hecke(b, cfg);
    return 0;
}

int cmd_parabolic(int n, int k, const std::string& perm, const std::string& which,
                  const Config& cfg) {
    cfg.validate();
    if (n < 1) throw UsageError("--n must be positive");
    if (k < 0 || k > n) throw UsageError("--k must lie in 0..n");
    cfg.check_cap(n);
    Permutation w = parse_perm(perm, n);
    ParabolicModule pm(n, k);
    auto [path, enabled] = resolve_cache(cfg);
    KLCache cache(path, enabled);
    cache.seed(pm.hecke(), n);
    if (!pm.ctx().is_min_rep(w)) {
        std::cerr << "error: " << w.str()
                  << " is not a minimal coset representative for k=" << k << "\n";
        return 1;
    }
    ParabolicElt x = which == "M"   ? pm.canonical_M(w)
                     : which == "N" ? pm.canonical_N(w)
                     : which == "Q" ? pm.canonical_Nstar(w)
                                    : pm.canonical_Mstar(w);
    print_parabolic(x, cfg);
    return 0;
}

int cmd_enumerate(int n, int k, const Config& cfg) {
    cfg.validate();
    if (n < 0) throw UsageError("--n must be nonnegative");
    cfg.check_cap(n);
    std::vector<TLDiagram> ds;
    if (k < 0) {
        ds = enumerate_diagrams(n, cfg.max_n);
    } else {
        if (k > n) throw UsageError("--k must lie in 0..n");
        ds = enumerate_induced_basis(n, k, cfg.max_n);
    }
    if (cfg.output == "json") {
        json arr = json::array();
        for (const TLDiagram& d : ds) arr.push_back(diagram_to_json(d));
        std::cout << json{{"count", ds.size()}, {"diagrams", arr}}.dump() << "\n";
    } else {
        for (const TLDiagram& d : ds) std::cout << d.str() << "\n";
        std::cout << "count " << ds.size() << "\n";
    }
    return 0;
}

int cmd_render(const std::string& file, int n, int e, const std::string& label,
               const std::string& format, const Config& cfg) {
    cfg.validate();
    int sources = (!file.empty() ? 1 : 0) + (!label.empty() ? 1 : 0) + (e > 0 ? 1 : 0);
    if (sources > 1) throw UsageError("give at most one of --file, --label, --e");
    TLDiagram d = TLDiagram::identity(0);
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot read " << file << "\n";
            return 1;
        }
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded()) {
            std::cerr << "error: invalid JSON in " << file << "\n";
            return 1;
        }
        try {
            d = diagram_from_json(j);
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return 1;
        }
    } else if (!label.empty()) {
        check_label_chars(label);
        if (n > 0 && n != (int)label.size())
            throw UsageError("label length does not match --n");
        cfg.check_cap((int)label.size());
        d = label_to_diagram(label);
    } else if (e > 0) {
        if (n < 2) throw UsageError("--e needs --n of at least 2");
        cfg.check_cap(n);
        if (e > n - 1) throw UsageError("--e out of range for --n");
        d = TLDiagram::generator_e(e, n);
    } else if (n > 0) {
        cfg.check_cap(n);
        d = TLDiagram::identity(n);
    } else {
        throw UsageError("give a diagram: --file, --label, or --n (with optional --e)");
    }
    std::cout << (format == "svg" ? svg_diagram(d) : ascii_diagram(d));
    return 0;
}

int cmd_cache(const std::string& action, const Config& cfg) {
    cfg.validate();
    auto [path, enabled] = resolve_cache(cfg);
    if (action == "clear") {
        if (path.empty()) throw UsageError("no cache path configured");
        std::remove(path.c_str());
        if (cfg.output == "json")
            std::cout << json{{"cleared", true}}.dump() << "\n";
        else
            std::cout << "cache cleared\n";
        return 0;
    }
    KLCache cache(path, enabled);
    std::map<int, int> by_n;
    for (const auto& [k, v] : cache.entries()) {
        try {
            by_n[std::stoi(k.substr(0, k.find(':')))]++;
        } catch (...) {
            by_n[-1]++;
        }
    }
    if (cfg.output == "json") {
        json bn = json::object();
        for (const auto& [nn, c] : by_n) bn[std::to_string(nn)] = c;
        std::cout << json{{"path", path},
                          {"enabled", enabled},
                          {"entries", cache.entries().size()},
                          {"by_n", bn}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "path " << (path.empty() ? "(none)" : path) << "\n";
        std::cout << "enabled " << (enabled ? "yes" : "no") << "\n";
        std::cout << "entries " << cache.entries().size() << "\n";
        for (const auto& [nn, c] : by_n)
            std::cout << "n " << nn << " entries " << c << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyCase {
    std::string name;
    std::function<bool()> run;
};

int run_suite(const std::string& suite, std::vector<VerifyCase>& cases,
              const Config& cfg) {
    std::vector<char> ok(cases.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                ok[i] = cases[i].run() ? 1 : 0;
            } catch (const std::exception& e) {
                std::cerr << "error in " << cases[i].name << ": " << e.what() << "\n";
                ok[i] = 0;
            }
        }
    };
    int t = cfg.threads > 0 ? cfg.threads
                            : (int)std::thread::hardware_concurrency();
    t = std::max(1, std::min(t, (int)cases.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    size_t passed = 0;
    for (char c : ok) passed += c != 0;
    if (cfg.output == "json") {
        json arr = json::array();
        for (size_t i = 0; i < cases.size(); ++i)
            arr.push_back({{"name", cases[i].name}, {"pass", ok[i] != 0}});
        std::cout << json{{"suite", suite},
                          {"cases", arr},
                          {"passed", passed},
                          {"failed", cases.size() - passed}}
                         .dump()
                  << "\n";
    } else {
        for (size_t i = 0; i < cases.size(); ++i)
            std::cout << (ok[i] ? "PASS " : "FAIL ") << cases[i].name << "\n";
        std::cout << suite << ": " << passed << "/" << cases.size() << " passed\n";
    }
    return passed == cases.size() ? 0 : 1;
}

void build_duality(int n, std::vector<VerifyCase>& out) {
    auto labels = std::make_shared<std::vector<std::string>>(sorted_labels(n));
    auto dcbs = std::make_shared<std::map<std::string, SpinVector>>();
    for (const auto& a : *labels) (*dcbs)[a] = dcb_explicit(a);
    auto mods = std::make_shared<std::map<int, std::shared_ptr<ParabolicModule>>>();
    for (int k = 0; k <= n; ++k) (*mods)[k] = std::make_shared<ParabolicModule>(n, k);
    for (const auto& b : *labels)
        out.push_back({"duality n=" + std::to_string(n) + " b=" + b,
                       [b, labels, dcbs, mods]() {
                           SpinVector cbb =
                               canonical_basis(b, *mods->at(minus_count(b)));
                           for (const auto& a : *labels) {
                               LaurentPoly p = pairing(dcbs->at(a), cbb);
                               if (a == flip_label(b) ? p != LaurentPoly(1)
                                                      : !p.is_zero())
                                   return false;
                           }
                           return true;
                       }});
}

void build_fangreen(int n, std::vector<VerifyCase>& out, KLCache& cache,
                    std::vector<std::function<void()>>& post) {
    auto alg = std::make_shared<HeckeAlgebra>(n);
    cache.seed(*alg, n);
    auto perms = std::make_shared<std::vector<Permutation>>(all_permutations(n));
    std::sort(perms->begin(), perms->end(), length_lex_less);
    for (const auto& w : *perms)
        out.push_back({"fan-green n=" + std::to_string(n) + " w=" + w.str(),
                       [alg, w]() {
                           TLElement img = alg->phi_q(alg->kl_basis(w));
                           if (img.is_zero()) return true;
                           return img.combo().size() == 1 &&
                                  img.combo().begin()->second == LaurentPoly(1);
                       }});
    if (n <= 7)
        post.push_back([alg, perms, &cache]() { cache.harvest(*alg, *perms); });
}

void build_relations(int n, std::vector<VerifyCase>& out) {
    auto alg = std::make_shared<HeckeAlgebra>(n);
    auto ts = [](int v) { return std::to_string(v); };
    for (int i = 1; i <= n - 1; ++i) {
        out.push_back({"tl quadratic e" + ts(i) + " n=" + ts(n), [i, n]() {
                           TLElement e(TLDiagram::generator_e(i, n));
                           return tl_mul(e, e) == e * LaurentPoly::beta();
                       }});
        out.push_back({"hecke quadratic s" + ts(i) + " n=" + ts(n), [alg, i, n]() {
                           HeckeElt h = HeckeAlgebra::basis(
                               Permutation::transposition(i, n));
                           HeckeElt expect = alg->unit();
                           add_scaled(expect, h,
                                      LaurentPoly::q(-1) - LaurentPoly::q(1));
                           return alg->mul(h, h) == expect;
                       }});
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
            if (j == i + 1) {
                out.push_back(
                    {"tl braid e" + ts(i) + ",e" + ts(j) + " n=" + ts(n),
                     [i, j, n]() {
                         TLElement ei(TLDiagram::generator_e(i, n));
                         TLElement ej(TLDiagram::generator_e(j, n));
                         return tl_mul(ei, tl_mul(ej, ei)) == ei &&
                                tl_mul(ej, tl_mul(ei, ej)) == ej;
                     }});
                out.push_back(
                    {"hecke braid s" + ts(i) + ",s" + ts(j) + " n=" + ts(n),
                     [alg, i, j, n]() {
                         HeckeElt a = HeckeAlgebra::basis(
                             Permutation::transposition(i, n));
                         HeckeElt b = HeckeAlgebra::basis(
                             Permutation::transposition(j, n));
                         return alg->mul(a, alg->mul(b, a)) ==
                                alg->mul(b, alg->mul(a, b));
                     }});
            } else {
                out.push_back(
                    {"tl commute e" + ts(i) + ",e" + ts(j) + " n=" + ts(n),
                     [i, j, n]() {
                         TLElement ei(TLDiagram::generator_e(i, n));
                         TLElement ej(TLDiagram::generator_e(j, n));
                         return tl_mul(ei, ej) == tl_mul(ej, ei);
                     }});
                out.push_back(
                    {"hecke commute s" + ts(i) + ",s" + ts(j) + " n=" + ts(n),
                     [alg, i, j, n]() {
                         HeckeElt a = HeckeAlgebra::basis(
                             Permutation::transposition(i, n));
                         HeckeElt b = HeckeAlgebra::basis(
                             Permutation::transposition(j, n));
                         return alg->mul(a, b) == alg->mul(b, a);
                     }});
            }
        }
    std::vector<Permutation> bar_sample;
    if (n <= 5) {
        bar_sample = all_permutations(n);
        std::sort(bar_sample.begin(), bar_sample.end(), length_lex_less);
    } else {
        bar_sample.push_back(longest_element(n));
        for (int i = 1; i <= n - 1; ++i)
            bar_sample.push_back(Permutation::transposition(i, n));
    }
    for (const auto& w : bar_sample)
        out.push_back({"hecke bar involution w=" + w.str() + " n=" + ts(n),
                       [alg, w]() {
                           HeckeElt h = HeckeAlgebra::basis(w);
                           return alg->bar(alg->bar(h)) == h;
                       }});
}

void build_parabolic_duality(int n, std::vector<VerifyCase>& out, KLCache& cache) {
    for (int k = 0; k <= n; ++k) {
        auto pm = std::make_shared<ParabolicModule>(n, k);
        cache.seed(pm->hecke(), n);
        for (const auto& w : pm->reps())
            out.push_back(
                {"parabolic-duality n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " w=" + w.str(),
                 [pm, w]() {
                     ParabolicElt fm = pm->flip_M(pm->canonical_M(pm->flip_index(w)));
                     for (const auto& x : pm->reps()) {
                         LaurentPoly p = pm->pairing_MN(fm, pm->canonical_N(x));
                         LaurentPoly want(x == w ? (x.length() % 2 ? -1 : 1) : 0);
                         if (p != want) return false;
                     }
                     Permutation wj = pm->ctx().longest_in_WJ();
                     ParabolicElt qbar = pm->canonical_Nstar(w);
                     if (qbar.coords != fm.coords) return false;
                     ParabolicElt viaD =
                         pm->sigma_star(pm->hecke().dual_basis_D(w.compose(wj)));
                     if (viaD != qbar) return false;
                     ParabolicElt rbar = pm->canonical_Mstar(w);
                     ParabolicElt fn = pm->flip_N(pm->canonical_N(pm->flip_index(w)));
                     return rbar.coords == fn.coords;
                 }});
    }
}

void build_quantum(int n, std::vector<VerifyCase>& out) {
    auto ts = [](int v) { return std::to_string(v); };
    out.push_back({"quantum relations n=" + ts(n), [n]() {
                       for (const auto& s : sorted_labels(n)) {
                           SpinVector b = basis_tensor(s);
                           SpinVector eb = q_apply(QGen::E, b);
                           SpinVector fb = q_apply(QGen::F, b);
                           if (q_apply(QGen::K, eb) !=
                               LaurentPoly::q(2) * q_apply(QGen::E, q_apply(QGen::K, b)))
                               return false;
                           if (q_apply(QGen::K, fb) !=
                               LaurentPoly::q(-2) * q_apply(QGen::F, q_apply(QGen::K, b)))
                               return false;
                           int w = n - 2 * minus_count(s);
                           LaurentPoly qint;
                           for (int j = 0; j < (w < 0 ? -w : w); ++j)
                               qint += LaurentPoly::term(w > 0 ? 1 : -1,
                                                         (w < 0 ? -w : w) - 1 - 2 * j);
                           SpinVector comm = q_apply(QGen::E, fb) +
                                             LaurentPoly(-1) * q_apply(QGen::F, eb);
                           if (comm != qint * b) return false;
                       }
                       return true;
                   }});
    for (int i = 1; i <= n - 1; ++i) {
        out.push_back({"quantum cap hom i=" + ts(i) + " n=" + ts(n),
                       [i, n]() { return check_module_hom(CapCup::cap, i, n); }});
        out.push_back({"quantum cup hom i=" + ts(i) + " n=" + ts(n),
                       [i, n]() { return check_module_hom(CapCup::cup, i, n); }});
    }
    int m = std::min(n, 3);
    for (const TLDiagram& d : enumerate_diagrams(m))
        out.push_back({"quantum embed invariant " + d.str(),
                       [d]() { return is_invariant(embed_TL(d)); }});
    out.push_back({"quantum embed rank n=" + ts(m), [m]() {
                       std::vector<TLDiagram> ds = enumerate_diagrams(m);
                       std::vector<std::string> strings = sorted_labels(2 * m);
                       std::map<std::string, int> col;
                       for (size_t j = 0; j < strings.size(); ++j)
                           col[strings[j]] = (int)j;
                       for (mpq_class q : {mpq_class(2), mpq_class(3), mpq_class(5)}) {
                           std::vector<std::vector<mpq_class>> mat(
                               ds.size(), std::vector<mpq_class>(strings.size(), 0));
                           for (size_t r = 0; r < ds.size(); ++r)
                               for (const auto& [s, c] : embed_TL(ds[r]).coords)
                                   mat[r][col.at(s)] = c.eval_at(q);
                           if (rational_rank(std::move(mat)) != catalan(m))
                               return false;
                       }
                       return true;
                   }});
    int mi = std::min(n, 4);
    out.push_back({"quantum invariant dimension n=" + ts(2 * mi), [mi]() {
                       for (mpq_class q :
                            {mpq_class(2), mpq_class(3), mpq_class(5, 2)})
                           if (invariant_dimension(2 * mi, q) != catalan(mi))
                               return false;
                       return true;
                   }});
}

void build_axiom(int n, std::vector<VerifyCase>& out) {
    for (const auto& lbl : sorted_labels(n))
        out.push_back({"axiom n=" + std::to_string(n) + " label=" + lbl,
                       [lbl]() { return verify_canonical_axiom(lbl); }});
}

void build_bijection(int n, std::vector<VerifyCase>& out) {
    auto induced = std::make_shared<std::map<int, std::set<TLDiagram>>>();
    for (int k = 0; k <= n; ++k) {
        std::vector<TLDiagram> v = enumerate_induced_basis(n, k, n);
        (*induced)[k] = std::set<TLDiagram>(v.begin(), v.end());
        out.push_back({"bijection count n=" + std::to_string(n) +
                           " k=" + std::to_string(k),
                       [induced, n, k]() {
                           return (long)induced->at(k).size() == binomial(n, k);
                       }});
    }
    out.push_back({"bijection catalan n=" + std::to_string(n), [n]() {
                       return (long)enumerate_diagrams(n, n).size() == catalan(n);
                   }});
    for (const auto& lbl : sorted_labels(n))
        out.push_back({"bijection n=" + std::to_string(n) + " label=" + lbl,
                       [lbl, induced]() {
                           int k = minus_count(lbl);
                           TLDiagram d = label_to_diagram(lbl);
                           return diagram_to_label(d, k) == lbl &&
                                  induced->at(k).count(d) > 0 &&
                                  label_to_diagram(diagram_to_label(d, k)) == d;
                       }});
}

int cmd_verify(const std::string& suite, std::string nspec, const Config& cfg) {
    cfg.validate();
    static const std::map<std::string, std::string> defaults = {
        {"duality", "4"},           {"fan-green", "4"}, {"relations", "5"},
        {"parabolic-duality", "4"}, {"quantum", "3"},   {"axiom", "4"},
        {"bijection", "6"}};
    auto it = defaults.find(suite);
    if (it == defaults.end()) throw UsageError("unknown suite: " + suite);
    if (nspec.empty()) nspec = it->second;
    int lo, hi;
    try {
        auto pos = nspec.find("..");
        if (pos == std::string::npos) {
            lo = hi = std::stoi(nspec);
        } else {
            lo = std::stoi(nspec.substr(0, pos));
            hi = std::stoi(nspec.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("bad --n range: " + nspec);
    }
    if (lo < 1 || hi < lo) throw UsageError("bad --n range: " + nspec);
    cfg.check_cap(hi);

    auto [path, enabled] = resolve_cache(cfg);
    KLCache cache(path, enabled);
    std::vector<VerifyCase> cases;
    std::vector<std::function<void()>> post;
    for (int n = lo; n <= hi; ++n) {
        if (suite == "duality")
            build_duality(n, cases);
        else if (suite == "fan-green")
            build_fangreen(n, cases, cache, post);
        else if (suite == "relations")
            build_relations(n, cases);
        else if (suite == "parabolic-duality")
            build_parabolic_duality(n, cases, cache);
        else if (suite == "quantum")
            build_quantum(n, cases);
        else if (suite == "axiom")
            build_axiom(n, cases);
        else
            build_bijection(n, cases);
    }
    int rc = run_suite(suite, cases, cfg);
    for (auto& f : post) f();
    cache.flush();
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Temperley-Lieb / Hecke canonical basis toolkit"};
    app.name("canontl");
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--max-n", cfg.max_n, "safety cap on n")->capture_default_str();
    app.add_option("--cache", cfg.cache_flag, "KL cache file (overrides CANONTL_CACHE)");
    app.add_flag("--no-cache", cfg.no_cache, "disable the KL cache");
    app.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--q-eval", cfg.q_eval, "rational q for a numeric value column");
    app.add_option("--threads", cfg.threads, "worker threads for verify (0 = auto)");

    int rc = 0;

    auto* dcb = app.add_subcommand("dcb", "dual canonical basis element of a label");
    struct {
        int n = 0;
        std::string label, method = "all";
    } dcb_a;
    dcb->add_option("--n", dcb_a.n, "tensor length")->required();
    dcb->add_option("--label", dcb_a.label, "sign string, e.g. ++--")->required();
    dcb->add_option("--method", dcb_a.method, "algorithm")
        ->check(CLI::IsMember({"inductive", "explicit", "diagram", "all"}))
        ->capture_default_str();
    dcb->callback([&]() { rc = cmd_dcb(dcb_a.n, dcb_a.label, dcb_a.method, cfg); });

    auto* cb = app.add_subcommand("cb", "canonical basis element of a label");
    struct {
        int n = 0;
        std::string label;
    } cb_a;
    cb->add_option("--n", cb_a.n, "tensor length")->required();
    cb->add_option("--label", cb_a.label, "sign string")->required();
    cb->callback([&]() { rc = cmd_cb(cb_a.n, cb_a.label, cfg); });

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig basis element");
    struct {
        int n = 0;
        std::string word, perm;
    } kl_a;
    kl->add_option("--n", kl_a.n, "rank of the symmetric group")->required();
    kl->add_option("--word", kl_a.word, "generator word, e.g. 12 or 1,2");
    kl->add_option("--perm", kl_a.perm, "one-line form, e.g. 2,3,1");
    kl->callback([&]() { rc = cmd_kl(kl_a.n, kl_a.word, kl_a.perm, cfg); });

    auto* par = app.add_subcommand("parabolic", "parabolic canonical basis element");
    struct {
        int n = 0, k = 0;
        std::string perm, which = "M";
    } par_a;
    par->add_option("--n", par_a.n, "rank")->required();
    par->add_option("--k", par_a.k, "block split")->required();
    par->add_option("--w", par_a.perm, "one-line form of a minimal coset rep")
        ->required();
    par->add_option("--which", par_a.which, "basis family")
        ->check(CLI::IsMember({"M", "N", "Q", "R"}))
        ->capture_default_str();
    par->callback([&]() {
        rc = cmd_parabolic(par_a.n, par_a.k, par_a.perm, par_a.which, cfg);
    });

    auto* en = app.add_subcommand("enumerate", "list diagrams or an induced basis");
    struct {
        int n = 0, k = -1;
    } en_a;
    en->add_option("--n", en_a.n, "number of strands")->required();
    en->add_option("--k", en_a.k, "restrict to the induced basis for this split");
    en->callback([&]() { rc = cmd_enumerate(en_a.n, en_a.k, cfg); });

    auto* ren = app.add_subcommand("render", "draw a diagram as ascii or svg");
    struct {
        std::string file, label, format = "ascii";
        int n = 0, e = 0;
    } ren_a;
    ren->add_option("--file", ren_a.file, "diagram JSON file");
    ren->add_option("--label", ren_a.label, "sign string (induced-basis diagram)");
    ren->add_option("--n", ren_a.n, "strand count for --e or identity");
    ren->add_option("--e", ren_a.e, "generator index");
    ren->add_option("--format", ren_a.format, "ascii|svg")
        ->check(CLI::IsMember({"ascii", "svg"}))
        ->capture_default_str();
    ren->callback([&]() {
        rc = cmd_render(ren_a.file, ren_a.n, ren_a.e, ren_a.label, ren_a.format, cfg);
    });

    auto* ver = app.add_subcommand("verify", "run a theorem suite");
    struct {
        std::string suite, nspec;
    } ver_a;
    ver->add_option("--suite", ver_a.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"duality", "fan-green", "relations",
                               "parabolic-duality", "quantum", "axiom",
                               "bijection"}));
    ver->add_option("--n", ver_a.nspec, "n or range lo..hi (default per suite)");
    ver->callback([&]() { rc = cmd_verify(ver_a.suite, ver_a.nspec, cfg); });

    auto* ca = app.add_subcommand("cache", "inspect or clear the KL cache");
    struct {
        std::string action;
    } ca_a;
    ca->add_option("action", ca_a.action, "info or clear")
        ->required()
        ->check(CLI::IsMember({"info", "clear"}));
    ca->callback([&]() { rc = cmd_cache(ca_a.action, cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
