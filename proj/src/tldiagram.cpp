#include "canontl/tldiagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace canontl {

namespace {

// position in the circular boundary order b_1..b_m, t_n..t_1; an involution
int circ(int a, int m, int n) { return a < m ? a : 2 * m + n - 1 - a; }

}  // namespace

TLDiagram::TLDiagram(int m, int n, std::vector<int> pairing)
    : m_(m), n_(n), pair_(std::move(pairing)) {
    if (m < 0 || n < 0 || (m + n) % 2 != 0)
        throw std::invalid_argument("TLDiagram: bad shape");
    int tot = m + n;
    if ((int)pair_.size() != tot) throw std::invalid_argument("TLDiagram: bad pairing size");
    for (int a = 0; a < tot; ++a) {
        int b = pair_[a];
        if (b < 0 || b >= tot || b == a || pair_[b] != a)
            throw std::invalid_argument("TLDiagram: not a perfect matching");
    }
    std::vector<int> stack;
    for (int c = 0; c < tot; ++c) {
        int a = circ(c, m_, n_);
        int cb = circ(pair_[a], m_, n_);
        if (cb > c) {
            stack.push_back(a);
        } else {
            if (stack.empty() || stack.back() != pair_[a])
                throw std::invalid_argument("TLDiagram: crossing strands");
            stack.pop_back();
        }
    }
}

TLDiagram TLDiagram::identity(int n) {
    std::vector<int> p(2 * n);
    for (int j = 0; j < n; ++j) {
        p[j] = n + j;
        p[n + j] = j;
    }
    return TLDiagram(n, n, std::move(p));
}

TLDiagram TLDiagram::epsilon(int i, int n) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("epsilon: bad index");
    std::vector<int> p(2 * n - 2);
    p[i - 1] = i;
    p[i] = i - 1;
    for (int j = 0; j < n; ++j) {
        if (j == i - 1 || j == i) continue;
        int t = n + (j < i ? j : j - 2);
        p[j] = t;
        p[t] = j;
    }
    return TLDiagram(n, n - 2, std::move(p));
}

TLDiagram TLDiagram::delta(int i, int n) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("delta: bad index");
    std::vector<int> p(2 * n - 2);
    int m = n - 2;
    p[m + i - 1] = m + i;
    p[m + i] = m + i - 1;
    for (int j = 0; j < m; ++j) {
        int t = m + (j < i - 1 ? j : j + 2);
        p[j] = t;
        p[t] = j;
    }
    return TLDiagram(n - 2, n, std::move(p));
}

TLDiagram TLDiagram::generator_e(int i, int n) {
    return compose_diagrams(epsilon(i, n), delta(i, n)).first;
}

std::vector<std::pair<int, int>> TLDiagram::bottom_arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < m_; ++a)
        if (pair_[a] < m_ && a < pair_[a]) out.emplace_back(a + 1, pair_[a] + 1);
    return out;
}

std::vector<std::pair<int, int>> TLDiagram::top_arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = m_; a < m_ + n_; ++a)
        if (pair_[a] >= m_ && a < pair_[a]) out.emplace_back(a - m_ + 1, pair_[a] - m_ + 1);
    return out;
}

std::vector<std::pair<int, int>> TLDiagram::through_strands() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < m_; ++a)
        if (pair_[a] >= m_) out.emplace_back(a + 1, pair_[a] - m_ + 1);
    return out;
}

bool TLDiagram::operator<(const TLDiagram& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    if (n_ != o.n_) return n_ < o.n_;
    return pair_ < o.pair_;
}

std::string TLDiagram::str() const {
    std::string s;
    for (int a = 0; a < m_ + n_; ++a) {
        int b = pair_[a];
        if (b < a) continue;
        auto lab = [&](int x) {
            return (is_top(x) ? "t" : "b") + std::to_string(line_index(x));
        };
        s += "(" + lab(a) + "," + lab(b) + ")";
    }
    if (s.empty()) s = "()";
    return s;
}

std::pair<TLDiagram, int> compose_diagrams(const TLDiagram& lower, const TLDiagram& upper) {
    if (lower.top_count() != upper.bottom_count())
        throw std::invalid_argument("compose_diagrams: shape mismatch");
    int l = lower.bottom_count(), m = lower.top_count(), n = upper.top_count();
    // merged numbering: 0..l-1 bottom, l..l+m-1 glue, l+m..l+m+n-1 top
    std::vector<int> lowm(l + m), upm(m + n);
    for (int a = 0; a < l + m; ++a) lowm[a] = lower.partner(a);
    for (int a = 0; a < m + n; ++a) upm[a] = upper.partner(a);
    auto low_next = [&](int merged) { return lowm[merged]; };
    auto up_next = [&](int merged) { return l + upm[merged - l]; };

    std::vector<int> result(l + n, -1);
    std::vector<bool> seen_glue(m, false);
    auto to_result = [&](int merged) { return merged < l ? merged : merged - m; };

    for (int b = 0; b < l + m + n; ++b) {
        if (b >= l && b < l + m) continue;  // boundary points only
        if (result[to_result(b)] != -1) continue;
        bool via_low = b < l;
        int cur = b;
        for (;;) {
            int nxt = via_low ? low_next(cur) : up_next(cur);
            if (nxt >= l && nxt < l + m) {
                seen_glue[nxt - l] = true;
                cur = nxt;
                via_low = !via_low;
            } else {
                result[to_result(b)] = to_result(nxt);
                result[to_result(nxt)] = to_result(b);
                break;
            }
        }
    }

    int loops = 0;
    for (int g = 0; g < m; ++g) {
        if (seen_glue[g]) continue;
        ++loops;
        int cur = l + g;
        bool via_low = true;
        do {
            seen_glue[cur - l] = true;
            int nxt = via_low ? low_next(cur) : up_next(cur);
            via_low = !via_low;
            cur = nxt;
        } while (cur != l + g);
    }
    return {TLDiagram(l, n, std::move(result)), loops};
}

TLDiagram flip_diagram(const TLDiagram& d) {
    int m = d.bottom_count(), n = d.top_count();
    auto mir = [&](int a) { return a < m ? m - 1 - a : m + (n - 1 - (a - m)); };
    std::vector<int> p(m + n);
    for (int a = 0; a < m + n; ++a) p[mir(a)] = mir(d.partner(a));
    return TLDiagram(m, n, std::move(p));
}

TLDiagram tensor_diagrams(const TLDiagram& a, const TLDiagram& b) {
    int ma = a.bottom_count(), na = a.top_count();
    int mb = b.bottom_count(), nb = b.top_count();
    int m = ma + mb, n = na + nb;
    auto froma = [&](int x) { return x < ma ? x : m + (x - ma); };
    auto fromb = [&](int x) { return x < mb ? ma + x : m + na + (x - mb); };
    std::vector<int> p(m + n);
    for (int x = 0; x < ma + na; ++x) p[froma(x)] = froma(a.partner(x));
    for (int x = 0; x < mb + nb; ++x) p[fromb(x)] = fromb(b.partner(x));
    return TLDiagram(m, n, std::move(p));
}

namespace {

// noncrossing perfect matchings of the index list, as pair lists
void matchings_rec(const std::vector<int>& pts, std::vector<std::pair<int, int>>& cur,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pts.empty()) {
        out.push_back(cur);
        return;
    }
    for (size_t j = 1; j < pts.size(); j += 2) {
        cur.emplace_back(pts[0], pts[j]);
        std::vector<int> inside(pts.begin() + 1, pts.begin() + j);
        std::vector<int> rest(pts.begin() + j + 1, pts.end());
        std::vector<std::vector<std::pair<int, int>>> mids;
        std::vector<std::pair<int, int>> tmp;
        matchings_rec(inside, tmp, mids);
        for (auto& mid : mids) {
            auto save = cur;
            cur.insert(cur.end(), mid.begin(), mid.end());
            matchings_rec(rest, cur, out);
            cur = save;
        }
        cur.pop_back();
    }
}

}  // namespace

std::vector<TLDiagram> enumerate_diagrams(int n, int cap) {
    if (n < 0) throw std::invalid_argument("enumerate_diagrams: negative size");
    if (n > cap) throw std::invalid_argument("enumerate_diagrams: cap exceeded");
    std::vector<int> circs(2 * n);
    for (int c = 0; c < 2 * n; ++c) circs[c] = c;
    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<std::pair<int, int>> tmp;
    matchings_rec(circs, tmp, raw);
    std::vector<TLDiagram> out;
    out.reserve(raw.size());
    for (auto& match : raw) {
        std::vector<int> p(2 * n);
        for (auto [c1, c2] : match) {
            int a = circ(c1, n, n), b = circ(c2, n, n);
            p[a] = b;
            p[b] = a;
        }
        out.emplace_back(n, n, std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TLDiagram> enumerate_induced_basis(int n, int k, int cap) {
    if (k < 0 || k > n) throw std::invalid_argument("enumerate_induced_basis: bad k");
    std::vector<TLDiagram> out;
    for (auto& d : enumerate_diagrams(n, cap)) {
        bool ok = true;
        for (auto [a, b] : d.bottom_arcs())
            if (!(a <= k && b > k)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(d);
    }
    return out;
}

std::vector<int> LinkState::defects() const {
    std::vector<bool> matched(n + 1, false);
    for (auto [a, b] : arcs) matched[a] = matched[b] = true;
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (!matched[i]) out.push_back(i);
    return out;
}

LinkState top_link_state(const TLDiagram& d) {
    LinkState ls;
    ls.n = d.top_count();
    ls.arcs = d.top_arcs();
    std::sort(ls.arcs.begin(), ls.arcs.end());
    return ls;
}

TLDiagram cup_of(const LinkState& ls) {
    int p = (int)ls.arcs.size();
    int m = ls.n - 2 * p;
    std::vector<int> pr(m + ls.n);
    auto defs = ls.defects();
    for (int j = 0; j < m; ++j) {
        int t = m + defs[j] - 1;
        pr[j] = t;
        pr[t] = j;
    }
    for (auto [a, b] : ls.arcs) {
        pr[m + a - 1] = m + b - 1;
        pr[m + b - 1] = m + a - 1;
    }
    return TLDiagram(m, ls.n, std::move(pr));
}

Permutation parenthesis_of(const LinkState& ls) {
    std::vector<int> img(ls.n);
    for (int i = 0; i < ls.n; ++i) img[i] = i + 1;
    for (auto [a, b] : ls.arcs) {
        img[a - 1] = b;
        img[b - 1] = a;
    }
    return Permutation(img);
}

LinkState from_parenthesis(const Permutation& sigma) {
    int n = sigma.n();
    LinkState ls;
    ls.n = n;
    for (int i = 1; i <= n; ++i) {
        if (sigma(sigma(i)) != i) throw std::invalid_argument("from_parenthesis: not an involution");
        if (sigma(i) > i) ls.arcs.emplace_back(i, sigma(i));
    }
    for (auto [a, b] : ls.arcs) {
        for (int j = a + 1; j < b; ++j)
            if (sigma(j) == j)
                throw std::invalid_argument("from_parenthesis: fixed point under an arc");
        for (auto [c, d] : ls.arcs)
            if (a < c && c < b && b < d)
                throw std::invalid_argument("from_parenthesis: crossing arcs");
    }
    return ls;
}

void TLElement::add(const TLDiagram& d, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = combo_.find(d);
    if (it == combo_.end()) {
        combo_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) combo_.erase(it);
    }
}

TLElement& TLElement::operator+=(const TLElement& o) {
    for (auto& [d, c] : o.combo_) add(d, c);
    return *this;
}

TLElement TLElement::operator*(const LaurentPoly& c) const {
    TLElement out;
    for (auto& [d, co] : combo_) out.add(d, co * c);
    return out;
}

std::string TLElement::str() const {
    if (combo_.empty()) return "0";
    std::string s;
    for (auto& [d, c] : combo_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + d.str();
    }
    return s;
}

TLElement element_compose(const TLElement& lower, const TLElement& upper) {
    TLElement out;
    for (auto& [d1, c1] : lower.combo()) {
        for (auto& [d2, c2] : upper.combo()) {
            if (d1.top_count() != d2.bottom_count()) continue;
            auto [d, loops] = compose_diagrams(d1, d2);
            LaurentPoly c = c1 * c2;
            for (int i = 0; i < loops; ++i) c *= LaurentPoly::beta();
            out.add(d, c);
        }
    }
    return out;
}

}  // namespace canontl
