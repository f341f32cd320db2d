#pragma once

#include <map>
#include <string>

#include "canontl/laurent.hpp"
#include "canontl/parabolic.hpp"
#include "canontl/tldiagram.hpp"

namespace canontl {

// Vector in the n-fold tensor power of C^2 over the Laurent ring, keyed by
// sign strings like "+-+-" (leftmost tensor factor first, no zero coeffs).
struct SpinVector {
    int n = 0;
    std::map<std::string, LaurentPoly> coords;

    bool is_zero() const { return coords.empty(); }
    bool operator==(const SpinVector& o) const { return n == o.n && coords == o.coords; }
    bool operator!=(const SpinVector& o) const { return !(*this == o); }
    std::string str() const;
};

SpinVector spin_zero(int n);
SpinVector basis_tensor(const std::string& s);
void spin_add_scaled(SpinVector& dst, const SpinVector& src, const LaurentPoly& scale);
SpinVector operator+(const SpinVector& a, const SpinVector& b);
SpinVector operator*(const LaurentPoly& c, const SpinVector& v);

int minus_count(const std::string& s);
std::string base_label(int n, int k);   // "-"*k + "+"*(n-k)
std::string flip_label(const std::string& lbl);  // reversal
// display/serialization order: fewer minus signs first, then lexicographic
bool sign_string_less(const std::string& a, const std::string& b);

// cap at (i, i+1): length n -> n-2
SpinVector epsilon_apply(int i, const SpinVector& v);
// cup inserted at positions (i, i+1): length n -> n+2
SpinVector delta_apply(int i, const SpinVector& v);
SpinVector e_apply(int i, const SpinVector& v);      // delta_i . epsilon_i
SpinVector hecke_apply(int i, const SpinVector& v);  // e_i + q^{-1}

// evaluate an (m,n)-diagram on a length-m vector
SpinVector diagram_apply(const TLDiagram& d, const SpinVector& v);
SpinVector element_apply(const TLElement& x, const SpinVector& v);

// the induced-basis diagram attached to a label: top arcs by the
// nearest-unmatched rule, nested bottom arcs across the k-gap,
// order-preserving through strands
TLDiagram label_to_diagram(const std::string& lbl);
// inverse read-off; d must lie in enumerate_induced_basis(n, k)
std::string diagram_to_label(const TLDiagram& d, int k);

// dual canonical basis, three independent routes
SpinVector dcb_inductive(const std::string& lbl);
SpinVector dcb_explicit(const std::string& lbl);
SpinVector dcb_via_diagram(const std::string& lbl);

// canonical basis of the spherical module as a signed sum over top-arc
// endpoint choices; equals pm.canonical_M(w)
ParabolicElt spherical_canonical_formula(const Permutation& w, const ParabolicModule& pm);

// canonical basis of the tensor power, transported from the aspherical module
SpinVector canonical_basis(const std::string& lbl, const ParabolicModule& pm);
SpinVector canonical_basis(const std::string& lbl);

// bilinear, <s, t> = 1 iff s == reverse(t) on basis strings
LaurentPoly pairing(const SpinVector& a, const SpinVector& b);

// right action: the pairing adjoint of diagram_apply(d, .)
SpinVector zeta_star_apply(const TLDiagram& d, const SpinVector& v);

// <base_k, zeta*(D2) w> = delta_{D2, diagram(flip_label(lbl))} for every D2
// in the induced basis of the label's weight
bool satisfies_canonical_axiom(const std::string& lbl, const SpinVector& w,
                               const ParabolicModule& pm);
bool verify_canonical_axiom(const std::string& lbl, const ParabolicModule& pm);
bool verify_canonical_axiom(const std::string& lbl);

}  // namespace canontl
