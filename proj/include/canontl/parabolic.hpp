#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "canontl/hecke.hpp"
#include "canontl/symgroup.hpp"

namespace canontl {

enum class ParabolicKind { M, N, Nstar, Mstar };

const char* kind_name(ParabolicKind k);

// coordinate vector over W^J; M/N live in the induced modules, Nstar/Mstar
// in their duals (Q and R standard bases)
struct ParabolicElt {
    ParabolicKind kind = ParabolicKind::M;
    std::map<Permutation, LaurentPoly> coords;

    bool operator==(const ParabolicElt& o) const {
        return kind == o.kind && coords == o.coords;
    }
    bool operator!=(const ParabolicElt& o) const { return !(*this == o); }
    std::string str() const;
};

// The two parabolic modules for the (k, n-k) column split: M induced from
// the trivial character (H_s -> q^{-1} on W_J), N from the sign character
// (H_s -> -q), plus their duals and canonical bases.
class ParabolicModule {
public:
    ParabolicModule(int n, int k);
    int n() const { return n_; }
    int k() const { return k_; }
    const ParabolicContext& ctx() const { return ctx_; }
    const HeckeAlgebra& hecke() const { return alg_; }
    const std::vector<Permutation>& reps() const { return reps_; }
    int rep_index(const Permutation& w) const { return index_.at(w); }

    ParabolicElt basis(ParabolicKind kind, const Permutation& w) const;

    ParabolicElt project_M(const HeckeElt& h) const;
    ParabolicElt project_N(const HeckeElt& h) const;
    ParabolicElt act(const HeckeElt& h, const ParabolicElt& x) const;
    HeckeElt lift(const ParabolicElt& x) const;  // standard section w -> H_w

    ParabolicElt bar_M(const ParabolicElt& x) const;
    ParabolicElt bar_N(const ParabolicElt& x) const;
    ParabolicElt canonical_M(const Permutation& w) const;
    ParabolicElt canonical_N(const Permutation& w) const;

    // embedding N -> H, N_w -> H_w * B_{w_{0,J}}
    HeckeElt iota(const ParabolicElt& x) const;

    // label involution behind flip: min rep of w_0 w
    Permutation flip_index(const Permutation& w) const;
    ParabolicElt flip_M(const ParabolicElt& x) const;
    ParabolicElt flip_N(const ParabolicElt& x) const;

    // <M_w, N_x> = (-1)^{l(x)} delta_{w,x}, extended bilinearly
    LaurentPoly pairing_MN(const ParabolicElt& x, const ParabolicElt& y) const;

    ParabolicElt canonical_Nstar(const Permutation& w) const;  // Q-bar
    ParabolicElt canonical_Mstar(const Permutation& w) const;  // R-bar
    // sigma*: S_w -> q^{l(w) - l(longest in coset)} Q_{min rep}
    ParabolicElt sigma_star(const HeckeElt& d) const;

private:
    void check_label(const Permutation& w) const;
    void check_kind(const ParabolicElt& x, ParabolicKind want, const char* who) const;
    const CanonicalFamily& family_locked(ParabolicKind kind) const;
    ParabolicElt from_coords(ParabolicKind kind, const Coords& c) const;

    int n_, k_;
    ParabolicContext ctx_;
    HeckeAlgebra alg_;
    std::vector<Permutation> reps_;
    std::map<Permutation, int> index_;
    mutable std::mutex mu_;
    mutable std::optional<CanonicalFamily> famM_, famN_;
};

}  // namespace canontl
