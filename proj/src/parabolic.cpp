#include "canontl/parabolic.hpp"

#include <stdexcept>

namespace canontl {

const char* kind_name(ParabolicKind k) {
    switch (k) {
        case ParabolicKind::M: return "M";
        case ParabolicKind::N: return "N";
        case ParabolicKind::Nstar: return "Q";
        case ParabolicKind::Mstar: return "R";
    }
    return "?";
}

std::string ParabolicElt::str() const {
    if (coords.empty()) return "0";
    std::string s;
    for (auto& [w, c] : coords) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + kind_name(kind) + w.str();
    }
    return s;
}

ParabolicModule::ParabolicModule(int n, int k)
    : n_(n), k_(k), ctx_(n, k), alg_(n), reps_(ctx_.minimal_coset_reps()) {
    for (int i = 0; i < (int)reps_.size(); ++i) index_[reps_[i]] = i;
}

void ParabolicModule::check_label(const Permutation& w) const {
    if (w.n() != n_ || !ctx_.is_min_rep(w))
        throw std::invalid_argument("parabolic: label not a minimal coset representative");
}

void ParabolicModule::check_kind(const ParabolicElt& x, ParabolicKind want,
                                 const char* who) const {
    if (x.kind != want)
        throw std::invalid_argument(std::string(who) + ": expected kind " + kind_name(want));
}

ParabolicElt ParabolicModule::basis(ParabolicKind kind, const Permutation& w) const {
    check_label(w);
    ParabolicElt x;
    x.kind = kind;
    x.coords[w] = LaurentPoly(1);
    return x;
}

ParabolicElt ParabolicModule::project_M(const HeckeElt& h) const {
    ParabolicElt out;
    out.kind = ParabolicKind::M;
    for (auto& [w, c] : h) {
        auto [u, v] = ctx_.coset_decompose(w);
        auto it = out.coords.find(v);
        LaurentPoly add = c * LaurentPoly::q(-u.length());
        if (it == out.coords.end()) {
            out.coords.emplace(v, add);
        } else {
            it->second += add;
            if (it->second.is_zero()) out.coords.erase(it);
        }
    }
    return out;
}

ParabolicElt ParabolicModule::project_N(const HeckeElt& h) const {
    ParabolicElt out;
    out.kind = ParabolicKind::N;
    for (auto& [w, c] : h) {
        auto [u, v] = ctx_.coset_decompose(w);
        int l = u.length();
        LaurentPoly scale = LaurentPoly::term(l % 2 == 0 ? 1 : -1, l);
        auto it = out.coords.find(v);
        if (it == out.coords.end()) {
            out.coords.emplace(v, c * scale);
        } else {
            it->second += c * scale;
            if (it->second.is_zero()) out.coords.erase(it);
        }
    }
    return out;
}

HeckeElt ParabolicModule::lift(const ParabolicElt& x) const {
    HeckeElt h;
    for (auto& [w, c] : x.coords) {
        check_label(w);
        h.emplace(w, c);
    }
    return h;
}

ParabolicElt ParabolicModule::act(const HeckeElt& h, const ParabolicElt& x) const {
    if (x.kind == ParabolicKind::M) return project_M(alg_.mul(h, lift(x)));
    if (x.kind == ParabolicKind::N) return project_N(alg_.mul(h, lift(x)));
    throw std::invalid_argument("act: expected kind M or N");
}

ParabolicElt ParabolicModule::bar_M(const ParabolicElt& x) const {
    check_kind(x, ParabolicKind::M, "bar_M");
    return project_M(alg_.bar(lift(x)));
}

ParabolicElt ParabolicModule::bar_N(const ParabolicElt& x) const {
    check_kind(x, ParabolicKind::N, "bar_N");
    return project_N(alg_.bar(lift(x)));
}

namespace {

struct ParabolicBarModule : BarModule {
    const ParabolicModule* mod;
    ParabolicKind kind;
    int size() const override { return (int)mod->reps().size(); }
    Coords bar_row(int x) const override {
        ParabolicElt e = mod->basis(kind, mod->reps()[x]);
        ParabolicElt b = kind == ParabolicKind::M ? mod->bar_M(e) : mod->bar_N(e);
        Coords out;
        for (auto& [w, c] : b.coords) out[mod->rep_index(w)] = c;
        return out;
    }
    std::string label(int x) const override { return mod->reps()[x].str(); }
};

}  // namespace

const CanonicalFamily& ParabolicModule::family_locked(ParabolicKind kind) const {
    auto& slot = kind == ParabolicKind::M ? famM_ : famN_;
    if (!slot) {
        ParabolicBarModule mod;
        mod.mod = this;
        mod.kind = kind;
        slot = compute_canonical_basis(mod);
    }
    return *slot;
}

ParabolicElt ParabolicModule::from_coords(ParabolicKind kind, const Coords& c) const {
    ParabolicElt out;
    out.kind = kind;
    for (auto& [i, p] : c) out.coords.emplace(reps_[i], p);
    return out;
}

ParabolicElt ParabolicModule::canonical_M(const Permutation& w) const {
    check_label(w);
    std::lock_guard<std::mutex> lock(mu_);
    return from_coords(ParabolicKind::M, family_locked(ParabolicKind::M).canonical[index_.at(w)]);
}

ParabolicElt ParabolicModule::canonical_N(const Permutation& w) const {
    check_label(w);
    std::lock_guard<std::mutex> lock(mu_);
    return from_coords(ParabolicKind::N, family_locked(ParabolicKind::N).canonical[index_.at(w)]);
}

HeckeElt ParabolicModule::iota(const ParabolicElt& x) const {
    check_kind(x, ParabolicKind::N, "iota");
    HeckeElt bwj = alg_.kl_basis(ctx_.longest_in_WJ());
    HeckeElt out;
    for (auto& [w, c] : x.coords) {
        check_label(w);
        add_scaled(out, alg_.mul(alg_.basis(w), bwj), c);
    }
    return out;
}

Permutation ParabolicModule::flip_index(const Permutation& w) const {
    check_label(w);
    return ctx_.min_rep(longest_element(n_).compose(w));
}

ParabolicElt ParabolicModule::flip_M(const ParabolicElt& x) const {
    check_kind(x, ParabolicKind::M, "flip_M");
    ParabolicElt out;
    out.kind = ParabolicKind::M;
    for (auto& [w, c] : x.coords) out.coords.emplace(flip_index(w), c);
    return out;
}

ParabolicElt ParabolicModule::flip_N(const ParabolicElt& x) const {
    check_kind(x, ParabolicKind::N, "flip_N");
    ParabolicElt out;
    out.kind = ParabolicKind::N;
    for (auto& [w, c] : x.coords) out.coords.emplace(flip_index(w), c);
    return out;
}

LaurentPoly ParabolicModule::pairing_MN(const ParabolicElt& x, const ParabolicElt& y) const {
    check_kind(x, ParabolicKind::M, "pairing_MN");
    check_kind(y, ParabolicKind::N, "pairing_MN");
    LaurentPoly out;
    for (auto& [w, c] : x.coords) {
        auto it = y.coords.find(w);
        if (it == y.coords.end()) continue;
        LaurentPoly term = c * it->second;
        out += (w.length() % 2 == 0) ? term : -term;
    }
    return out;
}

ParabolicElt ParabolicModule::canonical_Nstar(const Permutation& w) const {
    ParabolicElt q = flip_M(canonical_M(flip_index(w)));
    q.kind = ParabolicKind::Nstar;
    return q;
}

ParabolicElt ParabolicModule::canonical_Mstar(const Permutation& w) const {
    ParabolicElt r = flip_N(canonical_N(flip_index(w)));
    r.kind = ParabolicKind::Mstar;
    return r;
}

ParabolicElt ParabolicModule::sigma_star(const HeckeElt& d) const {
    int lwj = ctx_.longest_in_WJ().length();
    ParabolicElt out;
    out.kind = ParabolicKind::Nstar;
    for (auto& [w, c] : d) {
        Permutation v = ctx_.min_rep(w);
        int lu = w.length() - v.length();
        LaurentPoly add = c * LaurentPoly::q(lu - lwj);
        auto it = out.coords.find(v);
        if (it == out.coords.end()) {
            out.coords.emplace(v, add);
        } else {
            it->second += add;
            if (it->second.is_zero()) out.coords.erase(it);
        }
    }
    return out;
}

}  // namespace canontl
