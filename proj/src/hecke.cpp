#include "canontl/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace canontl {

void add_scaled(HeckeElt& dst, const HeckeElt& src, const LaurentPoly& scale) {
    if (scale.is_zero()) return;
    for (auto& [w, c] : src) {
        auto it = dst.find(w);
        if (it == dst.end()) {
            dst.emplace(w, c * scale);
        } else {
            it->second += c * scale;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

std::string hecke_str(const HeckeElt& h) {
    if (h.empty()) return "0";
    std::string s;
    for (auto& [w, c] : h) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*H" + w.str();
    }
    return s;
}

void HeckeAlgebra::check_rank(const Permutation& w) const {
    if (w.n() != n_) throw std::invalid_argument("HeckeAlgebra: rank mismatch");
}

HeckeElt HeckeAlgebra::mul_gen(const HeckeElt& a, int i) const {
    if (i < 1 || i > n_ - 1) throw std::invalid_argument("mul_gen: bad generator");
    HeckeElt out;
    for (auto& [w, c] : a) {
        check_rank(w);
        std::vector<int> o = w.one_line();
        bool lengthens = o[i - 1] < o[i];
        std::swap(o[i - 1], o[i]);
        Permutation ws(o);
        add_scaled(out, basis(ws), c);
        if (!lengthens)
            add_scaled(out, basis(w), c * (LaurentPoly::q(-1) - LaurentPoly::q(1)));
    }
    return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt out;
    for (auto& [w, c] : b) {
        check_rank(w);
        HeckeElt cur = a;
        for (int i : w.reduced_word()) cur = mul_gen(cur, i);
        add_scaled(out, cur, c);
    }
    return out;
}

const HeckeElt& HeckeAlgebra::bar_row_locked(const Permutation& w) const {
    auto it = bar_memo_.find(w);
    if (it != bar_memo_.end()) return it->second;
    HeckeElt row;
    if (w.length() == 0) {
        row = basis(w);
    } else {
        int i = w.min_left_descent();
        Permutation wp = Permutation::transposition(i, n_).compose(w);
        HeckeElt bar_si = basis(Permutation::transposition(i, n_));
        add_scaled(bar_si, unit(), LaurentPoly::q(1) - LaurentPoly::q(-1));
        row = mul(bar_si, bar_row_locked(wp));
    }
    return bar_memo_.emplace(w, std::move(row)).first->second;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
    std::lock_guard<std::mutex> lock(mu_);
    HeckeElt out;
    for (auto& [w, c] : h) {
        check_rank(w);
        add_scaled(out, bar_row_locked(w), c.bar());
    }
    return out;
}

std::vector<Permutation> HeckeAlgebra::bruhat_interval_below(const Permutation& w) const {
    check_rank(w);
    std::vector<Permutation> out;
    std::map<Permutation, bool> seen;
    std::vector<Permutation> queue{w};
    seen[w] = true;
    while (!queue.empty()) {
        Permutation x = queue.back();
        queue.pop_back();
        out.push_back(x);
        const std::vector<int>& o = x.one_line();
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                if (o[i] < o[j]) continue;  // need a length drop
                std::vector<int> y = o;
                std::swap(y[i], y[j]);
                Permutation yp(y);
                if (!seen[yp]) {
                    seen[yp] = true;
                    queue.push_back(yp);
                }
            }
    }
    std::sort(out.begin(), out.end(), length_lex_less);
    return out;
}

namespace {

struct IntervalModule : BarModule {
    std::vector<Permutation> elts;
    std::map<Permutation, int> index;
    std::vector<Coords> rows;
    int size() const override { return (int)elts.size(); }
    Coords bar_row(int x) const override { return rows[x]; }
    std::string label(int x) const override { return elts[x].str(); }
};

}  // namespace

void HeckeAlgebra::solve_interval_locked(const Permutation& w) const {
    if (kl_memo_.count(w)) return;
    IntervalModule mod;
    mod.elts = bruhat_interval_below(w);
    for (int i = 0; i < (int)mod.elts.size(); ++i) mod.index[mod.elts[i]] = i;
    mod.rows.reserve(mod.elts.size());
    for (auto& x : mod.elts) {
        Coords row;
        for (auto& [y, c] : bar_row_locked(x)) row[mod.index.at(y)] = c;
        mod.rows.push_back(std::move(row));
    }
    CanonicalFamily fam = compute_canonical_basis(mod);
    for (int i = 0; i < (int)mod.elts.size(); ++i) {
        if (kl_memo_.count(mod.elts[i])) continue;
        HeckeElt b;
        for (auto& [j, c] : fam.canonical[i]) b.emplace(mod.elts[j], c);
        kl_memo_.emplace(mod.elts[i], std::move(b));
    }
}

HeckeElt HeckeAlgebra::kl_basis(const Permutation& w) const {
    check_rank(w);
    std::lock_guard<std::mutex> lock(mu_);
    solve_interval_locked(w);
    return kl_memo_.at(w);
}

LaurentPoly HeckeAlgebra::kl_polynomial(const Permutation& y, const Permutation& w) const {
    check_rank(y);
    if (!bruhat_leq(y, w)) return LaurentPoly();
    HeckeElt b = kl_basis(w);
    auto it = b.find(y);
    return it == b.end() ? LaurentPoly() : it->second;
}

TLElement HeckeAlgebra::phi_q(const HeckeElt& h) const {
    TLElement out;
    for (auto& [w, c] : h) {
        check_rank(w);
        TLElement cur(TLDiagram::identity(n_));
        for (int i : w.reduced_word()) {
            TLElement gen(TLDiagram::generator_e(i, n_));
            gen += TLElement(TLDiagram::identity(n_), LaurentPoly::q(-1));
            cur = tl_mul(cur, gen);
        }
        out += cur * c;
    }
    return out;
}

HeckeElt HeckeAlgebra::flip_H(const HeckeElt& h) const {
    Permutation w0 = longest_element(n_);
    HeckeElt out;
    for (auto& [x, c] : h) {
        check_rank(x);
        out.emplace(w0.compose(x), c);
    }
    return out;
}

HeckeElt HeckeAlgebra::dual_basis_D(const Permutation& w) const {
    check_rank(w);
    return flip_H(kl_basis(longest_element(n_).compose(w)));
}

LaurentPoly HeckeAlgebra::dual_pairing(const HeckeElt& d, const HeckeElt& h) {
    LaurentPoly out;
    for (auto& [w, c] : d) {
        auto it = h.find(w);
        if (it == h.end()) continue;
        LaurentPoly term = c * it->second;
        out += (w.length() % 2 == 0) ? term : -term;
    }
    return out;
}

void HeckeAlgebra::seed_kl(const Permutation& w, HeckeElt coords) const {
    check_rank(w);
    auto it = coords.find(w);
    if (it == coords.end() || it->second != LaurentPoly(1))
        throw std::invalid_argument("seed_kl: leading coefficient must be 1");
    for (auto& [y, c] : coords) {
        if (y == w) continue;
        if (!c.is_strictly_negative() || !bruhat_leq(y, w))
            throw std::invalid_argument("seed_kl: not unitriangular");
    }
    std::lock_guard<std::mutex> lock(mu_);
    kl_memo_.emplace(w, std::move(coords));
}

bool HeckeAlgebra::kl_cached(const Permutation& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    return kl_memo_.count(w) > 0;
}

}  // namespace canontl
