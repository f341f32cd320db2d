#include "canontl/barsolver.hpp"

namespace canontl {

void add_scaled(Coords& dst, const Coords& src, const LaurentPoly& scale) {
    if (scale.is_zero()) return;
    for (auto& [y, c] : src) {
        auto it = dst.find(y);
        if (it == dst.end()) {
            dst.emplace(y, c * scale);
        } else {
            it->second += c * scale;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

Coords BarModule::bar_vector(const Coords& v) const {
    Coords out;
    for (auto& [x, c] : v) add_scaled(out, bar_row(x), c.bar());
    return out;
}

namespace {

void validate(const BarModule& mod) {
    int N = mod.size();
    for (int x = 0; x < N; ++x) {
        Coords row = mod.bar_row(x);
        if (row.empty() || row.rbegin()->first != x || row.rbegin()->second != LaurentPoly(1))
            throw BarModuleError("bar is not unitriangular at " + mod.label(x));
        if (row.begin()->first < 0)
            throw BarModuleError("bar row out of range at " + mod.label(x));
        Coords twice = mod.bar_vector(row);
        twice[x] -= 1;
        if (twice[x].is_zero()) twice.erase(x);
        if (!twice.empty())
            throw BarModuleError("bar is not an involution at " + mod.label(x));
    }
}

}  // namespace

CanonicalFamily compute_canonical_basis(const BarModule& mod) {
    validate(mod);
    CanonicalFamily fam;
    fam.canonical.resize(mod.size());
    for (int x = 0; x < mod.size(); ++x) {
        Coords c{{x, LaurentPoly(1)}};
        Coords rho = mod.bar_row(x);
        rho[x] -= 1;
        if (rho[x].is_zero()) rho.erase(x);
        while (!rho.empty()) {
            auto it = std::prev(rho.end());
            int y = it->first;
            LaurentPoly f = it->second;
            if (y >= x) throw BarModuleError("residual escapes below " + mod.label(x));
            if (f.bar() != -f || f.constant_term() != 0)
                throw BarModuleError("no self-dual correction at " + mod.label(y) +
                                     " while solving " + mod.label(x));
            LaurentPoly pi = f.strictly_negative_part();
            add_scaled(c, Coords{{y, LaurentPoly(1)}}, pi);
            add_scaled(rho, mod.bar_row(y), pi.bar());
            add_scaled(rho, Coords{{y, LaurentPoly(1)}}, -pi);
        }
        fam.canonical[x] = std::move(c);
    }
    return fam;
}

Coords express_in_canonical(const CanonicalFamily& fam, Coords v) {
    Coords out;
    while (!v.empty()) {
        auto it = std::prev(v.end());
        int x = it->first;
        if (x < 0 || x >= (int)fam.canonical.size())
            throw BarModuleError("vector outside the family's range");
        LaurentPoly a = it->second;
        out.emplace(x, a);
        add_scaled(v, fam.canonical[x], -a);
    }
    return out;
}

}  // namespace canontl
