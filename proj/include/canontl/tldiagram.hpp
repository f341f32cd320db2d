#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "canontl/laurent.hpp"
#include "canontl/symgroup.hpp"

namespace canontl {

// Planar (m,n)-diagram: noncrossing perfect matching on m bottom and n top
// boundary points. Global numbering: bottom 1..m left to right is 0..m-1,
// top 1..n left to right is m..m+n-1. Noncrossing is checked against the
// circular order b_1,...,b_m,t_n,...,t_1.
class TLDiagram {
public:
    TLDiagram() = default;
    TLDiagram(int m, int n, std::vector<int> pairing);  // validates

    static TLDiagram identity(int n);
    static TLDiagram generator_e(int i, int n);  // (n,n), 1 <= i <= n-1
    static TLDiagram epsilon(int i, int n);      // (n, n-2): cap on bottom i, i+1
    static TLDiagram delta(int i, int n);        // (n-2, n): cup on top i, i+1

    int bottom_count() const { return m_; }
    int top_count() const { return n_; }
    int partner(int a) const { return pair_[a]; }
    int bottom_point(int i) const { return i - 1; }  // 1-based line index -> global
    int top_point(int j) const { return m_ + j - 1; }
    bool is_top(int a) const { return a >= m_; }
    int line_index(int a) const { return is_top(a) ? a - m_ + 1 : a + 1; }

    std::vector<std::pair<int, int>> bottom_arcs() const;  // 1-based, left < right
    std::vector<std::pair<int, int>> top_arcs() const;
    std::vector<std::pair<int, int>> through_strands() const;  // (bottom, top)

    bool operator==(const TLDiagram& o) const {
        return m_ == o.m_ && n_ == o.n_ && pair_ == o.pair_;
    }
    bool operator!=(const TLDiagram& o) const { return !(*this == o); }
    bool operator<(const TLDiagram& o) const;

    std::string str() const;  // "(b1,t1)(b2,b3)..."

private:
    int m_ = 0, n_ = 0;
    std::vector<int> pair_;
};

// stack upper on top of lower (lower: (l,m), upper: (m,n)); returns the glued
// (l,n) diagram and the number of closed loops removed
std::pair<TLDiagram, int> compose_diagrams(const TLDiagram& lower, const TLDiagram& upper);

// left-right mirror
TLDiagram flip_diagram(const TLDiagram& d);

// place b to the right of a
TLDiagram tensor_diagrams(const TLDiagram& a, const TLDiagram& b);

std::vector<TLDiagram> enumerate_diagrams(int n, int cap = 12);
// (n,n)-diagrams whose every bottom arc spans the gap between k and k+1;
// the diagrammatic basis of the induced module for the (k, n-k) split
std::vector<TLDiagram> enumerate_induced_basis(int n, int k, int cap = 12);

// Half-diagram data: n points with p disjoint noncrossing arcs, unmatched
// points are defects; no defect lies under an arc.
struct LinkState {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // 1-based, sorted, left < right

    std::vector<int> defects() const;
    bool operator==(const LinkState& o) const { return n == o.n && arcs == o.arcs; }
};

LinkState top_link_state(const TLDiagram& d);
// the (n-2p, n)-diagram with the state's arcs on top and defects wired in
// order to the bottom points
TLDiagram cup_of(const LinkState& ls);
// the involution fixing defects and swapping arc endpoints
Permutation parenthesis_of(const LinkState& ls);
// inverse; rejects involutions with crossings or defects under arcs
LinkState from_parenthesis(const Permutation& sigma);

// Formal Laurent combination of diagrams.
class TLElement {
public:
    TLElement() = default;  // zero
    explicit TLElement(const TLDiagram& d) { combo_[d] = LaurentPoly(1); }
    TLElement(const TLDiagram& d, const LaurentPoly& c) { add(d, c); }

    const std::map<TLDiagram, LaurentPoly>& combo() const { return combo_; }
    bool is_zero() const { return combo_.empty(); }
    void add(const TLDiagram& d, const LaurentPoly& c);

    TLElement& operator+=(const TLElement& o);
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
    TLElement operator*(const LaurentPoly& c) const;
    bool operator==(const TLElement& o) const { return combo_ == o.combo_; }
    bool operator!=(const TLElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<TLDiagram, LaurentPoly> combo_;
};

// bilinear extension of compose_diagrams with beta = -q-q^{-1} per loop;
// shape-mismatched diagram pairs contribute zero
TLElement element_compose(const TLElement& lower, const TLElement& upper);

// algebra product: (x*y) acts as "y first, then x", matching left modules
inline TLElement tl_mul(const TLElement& x, const TLElement& y) {
    return element_compose(y, x);
}

}  // namespace canontl
