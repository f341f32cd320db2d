#include "canontl/spin.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace canontl {

namespace {

void check_sign_string(const std::string& s) {
    for (char c : s)
        if (c != '+' && c != '-') throw std::invalid_argument("bad sign string: " + s);
}

std::string reversed(const std::string& s) { return std::string(s.rbegin(), s.rend()); }

}  // namespace

std::string SpinVector::str() const {
    if (coords.empty()) return "0";
    std::vector<std::string> keys;
    keys.reserve(coords.size());
    for (auto& [s, c] : coords) keys.push_back(s);
    std::sort(keys.begin(), keys.end(), sign_string_less);
    std::string out;
    for (auto& s : keys) {
        if (!out.empty()) out += " + ";
        out += "(" + coords.at(s).str() + ")*" + (s.empty() ? "1" : s);
    }
    return out;
}

SpinVector spin_zero(int n) {
    SpinVector v;
    v.n = n;
    return v;
}

SpinVector basis_tensor(const std::string& s) {
    check_sign_string(s);
    SpinVector v;
    v.n = static_cast<int>(s.size());
    v.coords.emplace(s, LaurentPoly(1));
    return v;
}

void spin_add_scaled(SpinVector& dst, const SpinVector& src, const LaurentPoly& scale) {
    if (dst.n != src.n) throw std::invalid_argument("spin_add_scaled: length mismatch");
    if (scale.is_zero()) return;
    for (auto& [s, c] : src.coords) {
        LaurentPoly& slot = dst.coords[s];
        slot += c * scale;
        if (slot.is_zero()) dst.coords.erase(s);
    }
}

SpinVector operator+(const SpinVector& a, const SpinVector& b) {
    SpinVector out = a;
    spin_add_scaled(out, b, LaurentPoly(1));
    return out;
}

SpinVector operator*(const LaurentPoly& c, const SpinVector& v) {
    SpinVector out = spin_zero(v.n);
    spin_add_scaled(out, v, c);
    return out;
}

int minus_count(const std::string& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), '-'));
}

std::string base_label(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("base_label: bad weight");
    return std::string(k, '-') + std::string(n - k, '+');
}

std::string flip_label(const std::string& lbl) {
    check_sign_string(lbl);
    return reversed(lbl);
}

bool sign_string_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    int ka = minus_count(a), kb = minus_count(b);
    if (ka != kb) return ka < kb;
    return a < b;
}

SpinVector epsilon_apply(int i, const SpinVector& v) {
    if (i < 1 || i > v.n - 1) throw std::out_of_range("epsilon_apply: bad index");
    SpinVector out = spin_zero(v.n - 2);
    for (auto& [s, c] : v.coords) {
        char a = s[i - 1], b = s[i];
        if (a == b) continue;
        std::string t = s.substr(0, i - 1) + s.substr(i + 1);
        LaurentPoly& slot = out.coords[t];
        slot += a == '+' ? c * LaurentPoly::term(-1, 1) : c;
        if (slot.is_zero()) out.coords.erase(t);
    }
    return out;
}

SpinVector delta_apply(int i, const SpinVector& v) {
    if (i < 1 || i > v.n + 1) throw std::out_of_range("delta_apply: bad index");
    SpinVector out = spin_zero(v.n + 2);
    for (auto& [s, c] : v.coords) {
        std::string head = s.substr(0, i - 1), tail = s.substr(i - 1);
        out.coords[head + "+-" + tail] += c;
        out.coords[head + "-+" + tail] += c * LaurentPoly::term(-1, -1);
    }
    return out;
}

SpinVector e_apply(int i, const SpinVector& v) { return delta_apply(i, epsilon_apply(i, v)); }

SpinVector hecke_apply(int i, const SpinVector& v) {
    SpinVector out = e_apply(i, v);
    spin_add_scaled(out, v, LaurentPoly::term(1, -1));
    return out;
}

SpinVector diagram_apply(const TLDiagram& d, const SpinVector& v) {
    if (v.n != d.bottom_count()) throw std::invalid_argument("diagram_apply: length mismatch");
    const auto bot = d.bottom_arcs();
    const auto thru = d.through_strands();
    const auto top = d.top_arcs();
    SpinVector out = spin_zero(d.top_count());
    for (auto& [s, c] : v.coords) {
        LaurentPoly scalar = c;
        bool dead = false;
        for (auto [l, r] : bot) {
            char a = s[l - 1], b = s[r - 1];
            if (a == b) {
                dead = true;
                break;
            }
            if (a == '+') scalar *= LaurentPoly::term(-1, 1);
        }
        if (dead) continue;
        std::string t(d.top_count(), '?');
        for (auto [b, tp] : thru) t[tp - 1] = s[b - 1];
        std::vector<std::pair<std::string, LaurentPoly>> partial{{t, scalar}};
        for (auto [l, r] : top) {
            std::vector<std::pair<std::string, LaurentPoly>> next;
            next.reserve(partial.size() * 2);
            for (auto& [u, f] : partial) {
                std::string u1 = u;
                u1[l - 1] = '+';
                u1[r - 1] = '-';
                next.emplace_back(u1, f);
                std::string u2 = u;
                u2[l - 1] = '-';
                u2[r - 1] = '+';
                next.emplace_back(u2, f * LaurentPoly::term(-1, -1));
            }
            partial = std::move(next);
        }
        for (auto& [u, f] : partial) {
            LaurentPoly& slot = out.coords[u];
            slot += f;
            if (slot.is_zero()) out.coords.erase(u);
        }
    }
    return out;
}

SpinVector element_apply(const TLElement& x, const SpinVector& v) {
    if (x.is_zero()) return spin_zero(v.n);
    SpinVector out = spin_zero(x.combo().begin()->first.top_count());
    for (auto& [d, c] : x.combo()) spin_add_scaled(out, diagram_apply(d, v), c);
    return out;
}

TLDiagram label_to_diagram(const std::string& lbl) {
    check_sign_string(lbl);
    const int n = static_cast<int>(lbl.size());
    const int k = minus_count(lbl);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> top;
    std::vector<bool> matched(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (lbl[i - 1] == '+') {
            stack.push_back(i);
        } else if (!stack.empty()) {
            top.emplace_back(stack.back(), i);
            matched[stack.back()] = matched[i] = true;
            stack.pop_back();
        }
    }
    const int p = static_cast<int>(top.size());
    std::vector<int> pairing(2 * n, -1);
    for (auto [a, b] : top) {
        pairing[n + a - 1] = n + b - 1;
        pairing[n + b - 1] = n + a - 1;
    }
    std::vector<bool> bot_used(n + 1, false);
    for (int i = 0; i < p; ++i) {
        int a = k - i, b = k + 1 + i;
        pairing[a - 1] = b - 1;
        pairing[b - 1] = a - 1;
        bot_used[a] = bot_used[b] = true;
    }
    std::vector<int> free_top, free_bot;
    for (int i = 1; i <= n; ++i) {
        if (!matched[i]) free_top.push_back(i);
        if (!bot_used[i]) free_bot.push_back(i);
    }
    for (size_t i = 0; i < free_top.size(); ++i) {
        pairing[free_bot[i] - 1] = n + free_top[i] - 1;
        pairing[n + free_top[i] - 1] = free_bot[i] - 1;
    }
    return TLDiagram(n, n, std::move(pairing));
}

std::string diagram_to_label(const TLDiagram& d, int k) {
    const int n = d.top_count();
    if (d.bottom_count() != n) throw std::invalid_argument("diagram_to_label: not an (n,n)-diagram");
    if (k < 0 || k > n) throw std::invalid_argument("diagram_to_label: bad weight");
    for (auto [a, b] : d.bottom_arcs())
        if (!(a <= k && b > k))
            throw std::invalid_argument("diagram_to_label: bottom arc misses the gap");
    std::string lbl(n, '?');
    for (auto [b, t] : d.through_strands()) lbl[t - 1] = b <= k ? '-' : '+';
    for (auto [l, r] : d.top_arcs()) {
        lbl[l - 1] = '+';
        lbl[r - 1] = '-';
    }
    if (label_to_diagram(lbl) != d)
        throw std::invalid_argument("diagram_to_label: diagram not in the induced basis");
    return lbl;
}

SpinVector dcb_inductive(const std::string& lbl) {
    check_sign_string(lbl);
    if (lbl.empty()) return basis_tensor("");
    if (lbl.front() == '-') {
        SpinVector rest = dcb_inductive(lbl.substr(1));
        SpinVector out = spin_zero(rest.n + 1);
        for (auto& [s, c] : rest.coords) out.coords.emplace("-" + s, c);
        return out;
    }
    if (lbl.back() == '+') {
        SpinVector rest = dcb_inductive(lbl.substr(0, lbl.size() - 1));
        SpinVector out = spin_zero(rest.n + 1);
        for (auto& [s, c] : rest.coords) out.coords.emplace(s + "+", c);
        return out;
    }
    for (size_t p = 0; p + 1 < lbl.size(); ++p)
        if (lbl[p] == '+' && lbl[p + 1] == '-')
            return delta_apply(static_cast<int>(p) + 1,
                               dcb_inductive(lbl.substr(0, p) + lbl.substr(p + 2)));
    throw std::logic_error("dcb_inductive: no reduction step");
}

namespace {

// expansion of the diagram of lbl acting on the base tensor: one term per
// choice of an endpoint in each top arc, picking the right endpoint costs
// a factor -q^{-1}, the chosen endpoint carries '+'
std::vector<std::pair<std::string, LaurentPoly>> explicit_terms(const std::string& lbl) {
    const int n = static_cast<int>(lbl.size());
    const int k = minus_count(lbl);
    TLDiagram d = label_to_diagram(lbl);
    std::string base(n, '?');
    for (auto [b, t] : d.through_strands()) base[t - 1] = b <= k ? '-' : '+';
    const auto arcs = d.top_arcs();
    const int p = static_cast<int>(arcs.size());
    std::vector<std::pair<std::string, LaurentPoly>> out;
    out.reserve(1u << p);
    for (int mask = 0; mask < (1 << p); ++mask) {
        std::string s = base;
        int rights = 0;
        for (int a = 0; a < p; ++a) {
            auto [l, r] = arcs[a];
            if (mask >> a & 1) {
                s[r - 1] = '+';
                s[l - 1] = '-';
                ++rights;
            } else {
                s[l - 1] = '+';
                s[r - 1] = '-';
            }
        }
        out.emplace_back(s, LaurentPoly::term(rights % 2 ? -1 : 1, -rights));
    }
    return out;
}

}  // namespace

SpinVector dcb_explicit(const std::string& lbl) {
    SpinVector out = spin_zero(static_cast<int>(lbl.size()));
    for (auto& [s, c] : explicit_terms(lbl)) out.coords.emplace(s, c);
    return out;
}

SpinVector dcb_via_diagram(const std::string& lbl) {
    const int n = static_cast<int>(lbl.size());
    const int k = minus_count(lbl);
    return diagram_apply(label_to_diagram(lbl), basis_tensor(base_label(n, k)));
}

ParabolicElt spherical_canonical_formula(const Permutation& w, const ParabolicModule& pm) {
    if (!pm.ctx().is_min_rep(w))
        throw std::invalid_argument("spherical_canonical_formula: not a minimal coset representative");
    ParabolicElt out;
    out.kind = ParabolicKind::M;
    for (auto& [s, c] : explicit_terms(pm.ctx().seq_tilde(w)))
        out.coords.emplace(pm.ctx().seq_tilde_inverse(s), c);
    return out;
}

SpinVector canonical_basis(const std::string& lbl, const ParabolicModule& pm) {
    check_sign_string(lbl);
    const int n = static_cast<int>(lbl.size());
    if (n != pm.n() || minus_count(lbl) != pm.k())
        throw std::invalid_argument("canonical_basis: label does not match the module");
    Permutation w = pm.ctx().seq_tilde_inverse(lbl);
    ParabolicElt nb = pm.canonical_N(w);
    SpinVector out = spin_zero(n);
    const int lw = w.length();
    for (auto& [x, c] : nb.coords) {
        LaurentPoly scale = (lw + x.length()) % 2 ? c * LaurentPoly(-1) : c;
        out.coords.emplace(pm.ctx().seq_tilde(x), scale);
    }
    return out;
}

SpinVector canonical_basis(const std::string& lbl) {
    ParabolicModule pm(static_cast<int>(lbl.size()), minus_count(lbl));
    return canonical_basis(lbl, pm);
}

LaurentPoly pairing(const SpinVector& a, const SpinVector& b) {
    if (a.n != b.n) throw std::invalid_argument("pairing: length mismatch");
    LaurentPoly out;
    for (auto& [s, c] : a.coords) {
        auto it = b.coords.find(reversed(s));
        if (it != b.coords.end()) out += c * it->second;
    }
    return out;
}

SpinVector zeta_star_apply(const TLDiagram& d, const SpinVector& v) {
    if (v.n != d.top_count()) throw std::invalid_argument("zeta_star_apply: length mismatch");
    const int m = d.bottom_count();
    SpinVector out = spin_zero(m);
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::string u(m, '+');
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) u[i] = '-';
        LaurentPoly c = pairing(diagram_apply(d, basis_tensor(reversed(u))), v);
        if (!c.is_zero()) out.coords.emplace(u, c);
    }
    return out;
}

bool satisfies_canonical_axiom(const std::string& lbl, const SpinVector& w,
                               const ParabolicModule& pm) {
    check_sign_string(lbl);
    const int n = static_cast<int>(lbl.size());
    const int k = minus_count(lbl);
    if (n != pm.n() || k != pm.k())
        throw std::invalid_argument("satisfies_canonical_axiom: label does not match the module");
    if (w.n != n) throw std::invalid_argument("satisfies_canonical_axiom: length mismatch");
    SpinVector base = basis_tensor(base_label(n, k));
    TLDiagram target = label_to_diagram(flip_label(lbl));
    for (const TLDiagram& d2 : enumerate_induced_basis(n, k)) {
        LaurentPoly want = d2 == target ? LaurentPoly(1) : LaurentPoly();
        if (pairing(base, zeta_star_apply(d2, w)) != want) return false;
    }
    return true;
}

bool verify_canonical_axiom(const std::string& lbl, const ParabolicModule& pm) {
    return satisfies_canonical_axiom(lbl, canonical_basis(lbl, pm), pm);
}

bool verify_canonical_axiom(const std::string& lbl) {
    ParabolicModule pm(static_cast<int>(lbl.size()), minus_count(lbl));
    return verify_canonical_axiom(lbl, pm);
}

}  // namespace canontl
