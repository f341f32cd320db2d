#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "canontl/barsolver.hpp"
#include "canontl/laurent.hpp"
#include "canontl/symgroup.hpp"
#include "canontl/tldiagram.hpp"

namespace canontl {

// element of H(S_n) in the standard basis (or of its dual in the S basis)
using HeckeElt = std::map<Permutation, LaurentPoly>;

void add_scaled(HeckeElt& dst, const HeckeElt& src, const LaurentPoly& scale);
std::string hecke_str(const HeckeElt& h);

// Iwahori-Hecke algebra of S_n, quadratic relation (H_s - q^{-1})(H_s + q) = 0.
// KL elements B_w are normalized so that B_s = H_s - q^{-1}H_e.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(int n) : n_(n) {}
    int rank() const { return n_; }

    static HeckeElt basis(const Permutation& w) { return {{w, LaurentPoly(1)}}; }
    HeckeElt unit() const { return basis(Permutation(n_)); }

    HeckeElt mul_gen(const HeckeElt& a, int i) const;  // a * H_{s_i}
    HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
    // q -> q^{-1}, H_x -> (H_{x^{-1}})^{-1}
    HeckeElt bar(const HeckeElt& h) const;
    HeckeElt kl_basis(const Permutation& w) const;
    // coefficient of H_y in B_w
    LaurentPoly kl_polynomial(const Permutation& y, const Permutation& w) const;
    // algebra map H_{s_i} -> e_i + q^{-1}
    TLElement phi_q(const HeckeElt& h) const;
    // dual-space canonical element: flip of B_{w_0 w}, coords read in the S basis
    HeckeElt dual_basis_D(const Permutation& w) const;
    HeckeElt flip_H(const HeckeElt& h) const;  // H_x -> H_{w_0 x}

    // <d, h> = sum_w d_w h_w (-1)^{l(w)}, d in the S basis
    static LaurentPoly dual_pairing(const HeckeElt& d, const HeckeElt& h);

    // {y : y <= w}, sorted by (length, lex)
    std::vector<Permutation> bruhat_interval_below(const Permutation& w) const;

    // injects externally computed KL rows (the CLI cache); validated lazily by use
    void seed_kl(const Permutation& w, HeckeElt coords) const;
    bool kl_cached(const Permutation& w) const;

private:
    const HeckeElt& bar_row_locked(const Permutation& w) const;
    void solve_interval_locked(const Permutation& w) const;
    void check_rank(const Permutation& w) const;

    int n_;
    mutable std::mutex mu_;
    mutable std::map<Permutation, HeckeElt> bar_memo_;
    mutable std::map<Permutation, HeckeElt> kl_memo_;
};

}  // namespace canontl
