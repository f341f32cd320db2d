#pragma once

#include <string>
#include <utility>
#include <vector>

namespace canontl {

// Permutation of {1..n} in one-line notation. The group product is function
// composition: (a*b)(i) = a(b(i)), so in a word s_{a_1} s_{a_2} ... s_{a_k}
// the rightmost generator acts first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity
    explicit Permutation(std::vector<int> one_line);
    static Permutation transposition(int i, int n);  // s_i = (i, i+1)

    int n() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Permutation compose(const Permutation& o) const;
    Permutation inverse() const;
    int length() const;  // inversion count

    // smallest i with l(s_i * w) < l(w), or 0 if none (w = e)
    int min_left_descent() const;
    // lexicographically least reduced word
    std::vector<int> reduced_word() const;
    static Permutation from_word(const std::vector<int>& letters, int n);

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string str() const;  // "[2,1,3]"

private:
    std::vector<int> img_;
};

bool bruhat_leq(const Permutation& y, const Permutation& w);

Permutation longest_element(int n);  // w_0

std::vector<Permutation> all_permutations(int n);

// orders by (length, lex of one-line); a linear extension of Bruhat order
bool length_lex_less(const Permutation& a, const Permutation& b);

// Two-block parabolic data: W_J = S_k x S_{n-k} generated by all s_i except
// s_k, acting on positions. W^J = minimal-length representatives of wW_J,
// i.e. one-line forms increasing on 1..k and on k+1..n.
class ParabolicContext {
public:
    ParabolicContext(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    bool in_WJ(const Permutation& w) const;
    bool is_min_rep(const Permutation& w) const;
    // sort the one-line values inside each position block
    Permutation min_rep(const Permutation& w) const;
    // w = v * u with v in W^J, u in W_J, l(w) = l(u) + l(v)
    std::pair<Permutation, Permutation> coset_decompose(const Permutation& w) const;
    // sorted by (length, lex)
    std::vector<Permutation> minimal_coset_reps() const;

    Permutation longest_in_WJ() const;  // w_{0,J}
    Permutation longest_rep() const;    // w_f, the longest element of W^J

    // sign string with '-' at positions w({1..k}); w must be in W^J
    std::string seq_tilde(const Permutation& w) const;
    // inverse bijection from strings with k minus signs to W^J
    Permutation seq_tilde_inverse(const std::string& s) const;

private:
    int n_, k_;
};

}  // namespace canontl
