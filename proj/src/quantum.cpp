#include "canontl/quantum.hpp"

#include <stdexcept>
#include <utility>

namespace canontl {

SpinVector q_apply(QGen g, const SpinVector& v) {
    SpinVector out = spin_zero(v.n);
    for (const auto& [s, c] : v.coords) {
        switch (g) {
            case QGen::K:
            case QGen::Kinv: {
                int w = v.n - 2 * minus_count(s);
                if (g == QGen::Kinv) w = -w;
                spin_add_scaled(out, basis_tensor(s), c * LaurentPoly::q(w));
                break;
            }
            case QGen::E: {
                int before = 0;  // #- minus #+ strictly left of i
                for (int i = 1; i <= v.n; ++i) {
                    if (s[i - 1] == '-') {
                        std::string t = s;
                        t[i - 1] = '+';
                        spin_add_scaled(out, basis_tensor(t), c * LaurentPoly::q(before));
                        ++before;
                    } else {
                        --before;
                    }
                }
                break;
            }
            case QGen::F: {
                int after = 0;  // #+ minus #- strictly right of i
                for (int i = v.n; i >= 1; --i) {
                    if (s[i - 1] == '+') {
                        std::string t = s;
                        t[i - 1] = '-';
                        spin_add_scaled(out, basis_tensor(t), c * LaurentPoly::q(after));
                        ++after;
                    } else {
                        --after;
                    }
                }
                break;
            }
        }
    }
    return out;
}

bool is_invariant(const SpinVector& v) {
    return q_apply(QGen::E, v).is_zero() && q_apply(QGen::F, v).is_zero() &&
           q_apply(QGen::K, v) == v;
}

bool check_module_hom(CapCup op, int i, int n) {
    const int in_len = op == CapCup::cap ? n : n - 2;
    if (n < 2 || i < 1 || i > n - 1)
        throw std::out_of_range("check_module_hom: slot out of range");
    auto apply_op = [op, i](const SpinVector& v) {
        return op == CapCup::cap ? epsilon_apply(i, v) : delta_apply(i, v);
    };
    for (int mask = 0; mask < (1 << in_len); ++mask) {
        std::string s(in_len, '+');
        for (int j = 0; j < in_len; ++j)
            if (mask & (1 << j)) s[j] = '-';
        SpinVector b = basis_tensor(s);
        for (QGen g : {QGen::E, QGen::F, QGen::K})
            if (q_apply(g, apply_op(b)) != apply_op(q_apply(g, b))) return false;
    }
    return true;
}

SpinVector embed_TL(const TLDiagram& d) {
    const int n = d.bottom_count();
    if (d.top_count() != n)
        throw std::invalid_argument("embed_TL: diagram must be square");
    std::vector<int> pairing(4 * n, -1);
    for (int i = 1; i <= n; ++i) {
        int a = i - 1, b = 2 * n - i;
        pairing[a] = b;
        pairing[b] = a;
        pairing[2 * n + a] = 2 * n + b;
        pairing[2 * n + b] = 2 * n + a;
    }
    TLDiagram stacked(2 * n, 2 * n, std::move(pairing));
    auto [comp, loops] =
        compose_diagrams(stacked, tensor_diagrams(d, TLDiagram::identity(n)));
    SpinVector out = diagram_apply(comp, basis_tensor(base_label(2 * n, n)));
    for (int l = 0; l < loops; ++l) out = LaurentPoly::beta() * out;
    return out;
}

int rational_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

int invariant_dimension(int n, const mpq_class& q) {
    if (q == 0) throw std::invalid_argument("invariant_dimension: q must be nonzero");
    if (n % 2 != 0) return 0;  // K fixes only weight zero
    const int k = n / 2;
    std::vector<std::string> wt0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string s(n, '+');
        int minus = 0;
        for (int j = 0; j < n; ++j)
            if (mask & (1 << j)) s[j] = '-', ++minus;
        if (minus == k) wt0.push_back(s);
    }
    std::map<std::string, int> up_index, down_index;
    for (const std::string& s : wt0) {
        for (int j = 0; j < n; ++j) {
            std::string t = s;
            t[j] = s[j] == '+' ? '-' : '+';
            auto& idx = s[j] == '-' ? up_index : down_index;
            if (!idx.count(t)) {
                int next = static_cast<int>(idx.size());
                idx[t] = next;
            }
        }
    }
    // rows: E images then F images, columns: weight-zero strings
    std::vector<std::vector<mpq_class>> m(
        up_index.size() + down_index.size(),
        std::vector<mpq_class>(wt0.size(), 0));
    for (size_t col = 0; col < wt0.size(); ++col) {
        SpinVector b = basis_tensor(wt0[col]);
        for (const auto& [t, c] : q_apply(QGen::E, b).coords)
            m[up_index.at(t)][col] = c.eval_at(q);
        for (const auto& [t, c] : q_apply(QGen::F, b).coords)
            m[up_index.size() + down_index.at(t)][col] = c.eval_at(q);
    }
    return static_cast<int>(wt0.size()) - rational_rank(std::move(m));
}

}  // namespace canontl
