#include "canontl/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace canontl {

Permutation::Permutation(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > (int)img_.size() || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::transposition(int i, int n) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::compose(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("rank mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < (int)img_.size(); ++i) r.img_[i] = img_[o.img_[i] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < (int)img_.size(); ++i) r.img_[img_[i] - 1] = i + 1;
    return r;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < (int)img_.size(); ++i)
        for (int j = i + 1; j < (int)img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

int Permutation::min_left_descent() const {
    // s_i * w swaps the values i, i+1; it shortens w iff i appears to the
    // right of i+1 in the one-line form
    std::vector<int> pos(img_.size() + 1);
    for (int i = 0; i < (int)img_.size(); ++i) pos[img_[i]] = i;
    for (int i = 1; i < (int)img_.size(); ++i)
        if (pos[i] > pos[i + 1]) return i;
    return 0;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    for (int i = w.min_left_descent(); i != 0; i = w.min_left_descent()) {
        word.push_back(i);
        w = transposition(i, w.n()).compose(w);
    }
    return word;
}

Permutation Permutation::from_word(const std::vector<int>& letters, int n) {
    Permutation w(n);
    for (int a : letters) w = w.compose(transposition(a, n));
    return w;
}

std::string Permutation::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < (int)img_.size(); ++i) out << (i ? "," : "") << img_[i];
    out << "]";
    return out.str();
}

bool bruhat_leq(const Permutation& y, const Permutation& w) {
    if (y.n() != w.n()) throw std::invalid_argument("rank mismatch");
    int n = y.n();
    // dominance criterion on rank matrices r(i,j) = #{a <= i : p(a) <= j}:
    // y <= w iff r_y(i,j) >= r_w(i,j) everywhere
    for (int i = 1; i <= n; ++i) {
        int ry = 0, rw = 0;
        std::vector<int> cy(n + 1, 0), cw(n + 1, 0);
        for (int a = 1; a <= i; ++a) ++cy[y(a)], ++cw[w(a)];
        for (int j = 1; j <= n; ++j) {
            ry += cy[j];
            rw += cw[j];
            if (ry < rw) return false;
        }
    }
    return true;
}

Permutation longest_element(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(v);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

bool length_lex_less(const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.one_line() < b.one_line();
}

ParabolicContext::ParabolicContext(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("bad (n, k)");
}

bool ParabolicContext::in_WJ(const Permutation& w) const {
    for (int i = 1; i <= k_; ++i)
        if (w(i) > k_) return false;
    return true;
}

bool ParabolicContext::is_min_rep(const Permutation& w) const {
    for (int i = 1; i < n_; ++i)
        if (i != k_ && w(i) > w(i + 1)) return false;
    return true;
}

Permutation ParabolicContext::min_rep(const Permutation& w) const {
    std::vector<int> v = w.one_line();
    std::sort(v.begin(), v.begin() + k_);
    std::sort(v.begin() + k_, v.end());
    return Permutation(v);
}

std::pair<Permutation, Permutation> ParabolicContext::coset_decompose(
    const Permutation& w) const {
    Permutation v = min_rep(w);
    Permutation u = v.inverse().compose(w);
    return {u, v};
}

std::vector<Permutation> ParabolicContext::minimal_coset_reps() const {
    // a minimal representative is determined by the k values placed
    // (increasingly) on positions 1..k
    std::vector<Permutation> reps;
    std::vector<int> pick(k_);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        std::vector<int> v(n_);
        std::vector<bool> used(n_ + 1, false);
        for (int i = 0; i < k_; ++i) v[i] = pick[i], used[pick[i]] = true;
        int at = k_;
        for (int x = 1; x <= n_; ++x)
            if (!used[x]) v[at++] = x;
        reps.push_back(Permutation(v));
        // next k-subset of {1..n}
        int i = k_ - 1;
        while (i >= 0 && pick[i] == n_ - k_ + 1 + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k_; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(reps.begin(), reps.end(), length_lex_less);
    return reps;
}

Permutation ParabolicContext::longest_in_WJ() const {
    std::vector<int> v(n_);
    for (int i = 0; i < k_; ++i) v[i] = k_ - i;
    for (int i = k_; i < n_; ++i) v[i] = n_ + k_ - i;
    return Permutation(v);
}

Permutation ParabolicContext::longest_rep() const {
    std::vector<int> v(n_);
    for (int i = 0; i < k_; ++i) v[i] = n_ - k_ + 1 + i;
    for (int i = k_; i < n_; ++i) v[i] = i - k_ + 1;
    return Permutation(v);
}

std::string ParabolicContext::seq_tilde(const Permutation& w) const {
    if (!is_min_rep(w)) throw std::invalid_argument("not a minimal coset representative");
    std::string s(n_, '+');
    for (int i = 1; i <= k_; ++i) s[w(i) - 1] = '-';
    return s;
}

Permutation ParabolicContext::seq_tilde_inverse(const std::string& s) const {
    if ((int)s.size() != n_) throw std::invalid_argument("wrong string length");
    std::vector<int> minus;
    for (int i = 0; i < n_; ++i) {
        if (s[i] == '-')
            minus.push_back(i + 1);
        else if (s[i] != '+')
            throw std::invalid_argument("sign string must consist of '+' and '-'");
    }
    if ((int)minus.size() != k_) throw std::invalid_argument("wrong minus count");
    // word (s_{a_1-1} ... s_1)(s_{a_2-1} ... s_2) ... (s_{a_k-1} ... s_k)
    std::vector<int> word;
    for (int i = 0; i < k_; ++i)
        for (int a = minus[i] - 1; a >= i + 1; --a) word.push_back(a);
    return Permutation::from_word(word, n_);
}

}  // namespace canontl
