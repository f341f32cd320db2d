#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canontl/hecke.hpp"
#include "canontl/spin.hpp"

using namespace canontl;

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q(e); }

std::vector<std::string> all_sign_strings(int n) {
    std::vector<std::string> out;
    out.reserve(1u << n);
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string s(n, '+');
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s[i] = '-';
        out.push_back(s);
    }
    return out;
}

SpinVector sv(std::vector<std::pair<std::string, LaurentPoly>> terms) {
    SpinVector v = spin_zero(static_cast<int>(terms.front().first.size()));
    for (auto& [s, c] : terms) v.coords.emplace(s, c);
    return v;
}

std::string negated(const std::string& s) {
    std::string t = s;
    for (char& c : t) c = c == '+' ? '-' : '+';
    return t;
}

int prefix_minuses(const std::string& s, size_t len) {
    int m = 0;
    for (size_t i = 0; i < len; ++i)
        if (s[i] == '-') ++m;
    return m;
}

// random hom(m, n) built by stacking caps and cups at random slots
TLDiagram random_diagram(int m, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> detour(0, 2), coin(0, 1);
    int up = std::max(0, (n - m) / 2) + detour(rng);
    int down = up - (n - m) / 2;
    TLDiagram d = TLDiagram::identity(m);
    while (up + down > 0) {
        int t = d.top_count();
        if (down > 0 && t >= 2 && (up == 0 || coin(rng) == 1)) {
            std::uniform_int_distribution<int> slot(1, t - 1);
            d = compose_diagrams(d, TLDiagram::epsilon(slot(rng), t)).first;
            --down;
        } else {
            std::uniform_int_distribution<int> slot(1, t + 1);
            d = compose_diagrams(d, TLDiagram::delta(slot(rng), t + 2)).first;
            --up;
        }
    }
    return d;
}

SpinVector random_vector(int n, std::mt19937& rng, int nterms = 3) {
    auto strings = all_sign_strings(n);
    std::uniform_int_distribution<size_t> pick(0, strings.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2);
    SpinVector v = spin_zero(n);
    for (int t = 0; t < nterms; ++t)
        spin_add_scaled(v, basis_tensor(strings[pick(rng)]),
                        LaurentPoly::term(coeff(rng), expo(rng)));
    return v;
}

}  // namespace

TEST_CASE("epsilon and delta primitives") {
    CHECK(epsilon_apply(1, basis_tensor("-+")) == basis_tensor(""));
    CHECK(epsilon_apply(1, basis_tensor("+-")) == sv({{"", qp(1) * LaurentPoly(-1)}}));
    CHECK(epsilon_apply(1, basis_tensor("++")).is_zero());
    CHECK(epsilon_apply(1, basis_tensor("--")).is_zero());
    CHECK(delta_apply(1, basis_tensor("")) ==
          sv({{"+-", LaurentPoly(1)}, {"-+", qp(-1) * LaurentPoly(-1)}}));

    // cap after cup at the same slot is the loop scalar
    for (int len = 0; len <= 4; ++len)
        for (const auto& s : all_sign_strings(len))
            for (int i = 1; i <= len + 1; ++i)
                CHECK(epsilon_apply(i, delta_apply(i, basis_tensor(s))) ==
                      LaurentPoly::beta() * basis_tensor(s));

    // cap at a neighboring slot undoes the cup
    for (int len = 1; len <= 4; ++len)
        for (const auto& s : all_sign_strings(len))
            for (int i = 1; i <= len + 1; ++i) {
                if (i >= 2)
                    CHECK(epsilon_apply(i - 1, delta_apply(i, basis_tensor(s))) == basis_tensor(s));
                if (i <= len)
                    CHECK(epsilon_apply(i + 1, delta_apply(i, basis_tensor(s))) == basis_tensor(s));
            }

    CHECK_THROWS_AS(epsilon_apply(0, basis_tensor("+-")), std::out_of_range);
    CHECK_THROWS_AS(epsilon_apply(2, basis_tensor("+-")), std::out_of_range);
    CHECK_THROWS_AS(delta_apply(3, basis_tensor("+")), std::out_of_range);
}

TEST_CASE("e and hecke operators") {
    CHECK(e_apply(1, basis_tensor("+-")) ==
          sv({{"+-", LaurentPoly(-1) * qp(1)}, {"-+", LaurentPoly(1)}}));
    CHECK(e_apply(1, basis_tensor("-+")) ==
          sv({{"+-", LaurentPoly(1)}, {"-+", LaurentPoly(-1) * qp(-1)}}));
    CHECK(e_apply(1, basis_tensor("++")).is_zero());
    CHECK(e_apply(1, basis_tensor("--")).is_zero());

    for (int n = 2; n <= 5; ++n)
        for (const auto& s : all_sign_strings(n))
            for (int i = 1; i < n; ++i)
                CHECK(diagram_apply(TLDiagram::generator_e(i, n), basis_tensor(s)) ==
                      e_apply(i, basis_tensor(s)));

    for (int n = 2; n <= 6; ++n) {
        for (const auto& s : all_sign_strings(n)) {
            SpinVector v = basis_tensor(s);
            for (int i = 1; i < n; ++i) {
                CHECK(e_apply(i, e_apply(i, v)) == LaurentPoly::beta() * e_apply(i, v));
                if (i + 1 < n)
                    CHECK(e_apply(i, e_apply(i + 1, e_apply(i, v))) == e_apply(i, v));
                if (i >= 2) CHECK(e_apply(i, e_apply(i - 1, e_apply(i, v))) == e_apply(i, v));
                for (int j = i + 2; j < n; ++j)
                    CHECK(e_apply(i, e_apply(j, v)) == e_apply(j, e_apply(i, v)));
            }
        }
    }

    // quadratic relation H^2 = (q^{-1} - q) H + 1 and the braid relation
    for (int n = 2; n <= 5; ++n) {
        for (const auto& s : all_sign_strings(n)) {
            SpinVector v = basis_tensor(s);
            for (int i = 1; i < n; ++i) {
                SpinVector lhs = hecke_apply(i, hecke_apply(i, v));
                SpinVector rhs = (qp(-1) - qp(1)) * hecke_apply(i, v) + v;
                CHECK(lhs == rhs);
                if (i + 1 < n)
                    CHECK(hecke_apply(i, hecke_apply(i + 1, hecke_apply(i, v))) ==
                          hecke_apply(i + 1, hecke_apply(i, hecke_apply(i + 1, v))));
            }
        }
    }

    // the operator chain along a reduced word realizes the quotient image
    std::mt19937 rng(11);
    for (int n = 2; n <= 5; ++n) {
        HeckeAlgebra alg(n);
        auto perms = all_permutations(n);
        auto strings = all_sign_strings(n);
        std::uniform_int_distribution<size_t> pw(0, perms.size() - 1), ps(0, strings.size() - 1);
        for (int trial = 0; trial < 12; ++trial) {
            const Permutation& w = perms[pw(rng)];
            SpinVector v = basis_tensor(strings[ps(rng)]);
            SpinVector chain = v;
            auto word = w.reduced_word();
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                chain = hecke_apply(*it, chain);
            CHECK(chain == element_apply(alg.phi_q(HeckeAlgebra::basis(w)), v));
        }
    }
}

TEST_CASE("diagram action is functorial") {
    std::mt19937 rng(23);
    for (int n = 0; n <= 5; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            SpinVector v = random_vector(n, rng);
            CHECK(diagram_apply(TLDiagram::identity(n), v) == v);
        }

    for (int n = 2; n <= 5; ++n)
        for (const auto& s : all_sign_strings(n))
            for (int i = 1; i < n; ++i) {
                CHECK(diagram_apply(TLDiagram::epsilon(i, n), basis_tensor(s)) ==
                      epsilon_apply(i, basis_tensor(s)));
                std::string sub = s.substr(2);
                CHECK(diagram_apply(TLDiagram::delta(i, n), basis_tensor(sub)) ==
                      delta_apply(i, basis_tensor(sub)));
            }

    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> half(0, 2);
        int m = 2 * half(rng), r = 2 * half(rng) + (m % 2), n = 2 * half(rng) + (m % 2);
        TLDiagram d1 = random_diagram(m, r, rng);
        TLDiagram d2 = random_diagram(r, n, rng);
        auto [stacked, loops] = compose_diagrams(d1, d2);
        LaurentPoly factor(1);
        for (int l = 0; l < loops; ++l) factor *= LaurentPoly::beta();
        for (const auto& s : all_sign_strings(m)) {
            SpinVector v = basis_tensor(s);
            CHECK(factor * diagram_apply(stacked, v) == diagram_apply(d2, diagram_apply(d1, v)));
        }
    }

    // induced-basis diagrams keep the base tensor inside its weight space
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& d : enumerate_induced_basis(n, k)) {
                SpinVector img = diagram_apply(d, basis_tensor(base_label(n, k)));
                for (auto& [s, c] : img.coords) CHECK(minus_count(s) == k);
            }
}

TEST_CASE("label and diagram bijection") {
    CHECK(label_to_diagram("--++") == TLDiagram::identity(4));

    // five-point example: arcs {2,3},{4,5} on top, nested gap arcs below,
    // one through strand from bottom 5 to top 1
    std::vector<int> pairing{3, 2, 1, 0, 5, 4, 7, 6, 9, 8};
    TLDiagram five(5, 5, pairing);
    CHECK(label_to_diagram("++-+-") == five);
    CHECK(diagram_to_label(five, 2) == "++-+-");
    CHECK(five.top_arcs() == std::vector<std::pair<int, int>>{{2, 3}, {4, 5}});
    CHECK(five.bottom_arcs() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
    CHECK(five.through_strands() == std::vector<std::pair<int, int>>{{5, 1}});

    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(diagram_to_label(TLDiagram::identity(n), k) == base_label(n, k));

    for (int n = 1; n <= 8; ++n) {
        for (const auto& lbl : all_sign_strings(n)) {
            int k = minus_count(lbl);
            TLDiagram d = label_to_diagram(lbl);
            auto basis = enumerate_induced_basis(n, k);
            CHECK(std::count(basis.begin(), basis.end(), d) == 1);
            CHECK(diagram_to_label(d, k) == lbl);
        }
        for (int k = 0; k <= n; ++k)
            for (const auto& d : enumerate_induced_basis(n, k))
                CHECK(label_to_diagram(diagram_to_label(d, k)) == d);
    }

    CHECK_THROWS_AS(diagram_to_label(TLDiagram::generator_e(1, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(diagram_to_label(TLDiagram::generator_e(1, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(diagram_to_label(TLDiagram::epsilon(1, 4), 1), std::invalid_argument);

    CHECK(flip_label("+-") == "-+");
    for (const auto& lbl : all_sign_strings(5)) CHECK(flip_label(flip_label(lbl)) == lbl);
    // the mirror image of a label's diagram carries the reversed-and-negated label
    for (int n = 1; n <= 8; ++n)
        for (const auto& lbl : all_sign_strings(n))
            CHECK(flip_diagram(label_to_diagram(lbl)) ==
                  label_to_diagram(flip_label(negated(lbl))));
}

TEST_CASE("dual canonical basis by three routes") {
    auto routes = [](const std::string& lbl) {
        SpinVector a = dcb_inductive(lbl);
        CHECK(a == dcb_explicit(lbl));
        CHECK(a == dcb_via_diagram(lbl));
        return a;
    };

    CHECK(routes("--++") == basis_tensor("--++"));
    CHECK(routes("+--+") ==
          sv({{"+--+", LaurentPoly(1)}, {"-+-+", LaurentPoly(-1) * qp(-1)}}));
    CHECK(routes("++--") == sv({{"++--", LaurentPoly(1)},
                                {"+-+-", LaurentPoly(-1) * qp(-1)},
                                {"-+-+", LaurentPoly(-1) * qp(-1)},
                                {"--++", qp(-2)}}));
    CHECK(routes("+-") == sv({{"+-", LaurentPoly(1)}, {"-+", LaurentPoly(-1) * qp(-1)}}));
    CHECK(routes("-+") == basis_tensor("-+"));
    CHECK(routes("++") == basis_tensor("++"));
    CHECK(routes("--") == basis_tensor("--"));

    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) CHECK(routes(base_label(n, k)) == basis_tensor(base_label(n, k)));

    for (int n = 1; n <= 8; ++n) {
        for (const auto& lbl : all_sign_strings(n)) {
            SpinVector v = routes(lbl);
            const int k = minus_count(lbl);
            CHECK(v.coords.at(lbl) == LaurentPoly(1));
            for (auto& [s, c] : v.coords) {
                CHECK(minus_count(s) == k);
                for (size_t len = 1; len < s.size(); ++len)
                    CHECK(prefix_minuses(s, len) >= prefix_minuses(lbl, len));
                if (s != lbl) CHECK(c.is_strictly_negative());
            }
        }
    }
}

TEST_CASE("spherical formula matches the canonical basis") {
    {
        ParabolicModule pm(2, 1);
        Permutation s1 = Permutation::transposition(1, 2);
        ParabolicElt got = spherical_canonical_formula(s1, pm);
        CHECK(got.kind == ParabolicKind::M);
        CHECK(got.coords.at(s1) == LaurentPoly(1));
        CHECK(got.coords.at(Permutation(2)) == LaurentPoly(-1) * qp(-1));
        CHECK(got == pm.canonical_M(s1));
    }
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            ParabolicModule pm(n, k);
            for (const auto& w : pm.reps()) {
                ParabolicElt got = spherical_canonical_formula(w, pm);
                CHECK(got.coords.at(w) == LaurentPoly(1));
                CHECK(got == pm.canonical_M(w));
            }
        }
    {
        // throws on permutations that move points inside the left block
        ParabolicModule pm(3, 2);
        CHECK_THROWS_AS(spherical_canonical_formula(Permutation({2, 1, 3}), pm),
                        std::invalid_argument);
    }
}

TEST_CASE("canonical basis and the duality pairing") {
    CHECK(canonical_basis("-+") == basis_tensor("-+"));
    CHECK(canonical_basis("+-") == sv({{"+-", LaurentPoly(1)}, {"-+", qp(-1)}}));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(canonical_basis(base_label(n, k)) == basis_tensor(base_label(n, k)));

    CHECK(pairing(basis_tensor("+-"), basis_tensor("-+")) == LaurentPoly(1));
    CHECK(pairing(basis_tensor("+-"), basis_tensor("+-")).is_zero());
    CHECK_THROWS_AS(pairing(basis_tensor("+-"), basis_tensor("+")), std::invalid_argument);
    {
        std::mt19937 rng(5);
        SpinVector a = random_vector(3, rng), b = random_vector(3, rng);
        LaurentPoly c = LaurentPoly::term(2, -1);
        CHECK(pairing(c * a, b) == c * pairing(a, b));
        CHECK(pairing(a, c * b) == c * pairing(a, b));
    }

    for (int n = 1; n <= 6; ++n) {
        auto strings = all_sign_strings(n);
        std::map<std::string, SpinVector> dual, canon;
        for (const auto& lbl : strings) dual.emplace(lbl, dcb_inductive(lbl));
        for (int k = 0; k <= n; ++k) {
            ParabolicModule pm(n, k);
            for (const auto& lbl : strings)
                if (minus_count(lbl) == k) canon.emplace(lbl, canonical_basis(lbl, pm));
        }
        for (const auto& a : strings)
            for (const auto& b : strings) {
                LaurentPoly want =
                    a == flip_label(b) ? LaurentPoly(1) : LaurentPoly();
                CHECK(pairing(dual.at(a), canon.at(b)) == want);
            }
    }
}

TEST_CASE("zeta star right action and the axiom") {
    std::mt19937 rng(37);
    for (int n = 0; n <= 4; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            SpinVector v = random_vector(n, rng);
            CHECK(zeta_star_apply(TLDiagram::identity(n), v) == v);
        }

    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            TLDiagram e = TLDiagram::generator_e(i, n);
            int slot = n - i;  // acts on tensor positions (n-i, n-i+1)
            for (const auto& t : all_sign_strings(n)) {
                char a = t[slot - 1], b = t[slot];
                SpinVector want = spin_zero(n);
                if (a != b) {
                    std::string swapped = t;
                    std::swap(swapped[slot - 1], swapped[slot]);
                    if (a == '+') {
                        want = LaurentPoly(-1) * qp(-1) * basis_tensor(t) + basis_tensor(swapped);
                    } else {
                        want = basis_tensor(swapped) + LaurentPoly(-1) * qp(1) * basis_tensor(t);
                    }
                }
                CHECK(zeta_star_apply(e, basis_tensor(t)) == want);
            }
        }

    // adjointness against the left action
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> half(0, 2);
        int m = 2 * half(rng), n = 2 * half(rng) + (m % 2);
        TLDiagram d = random_diagram(m, n, rng);
        for (const auto& x : all_sign_strings(m))
            for (const auto& y : all_sign_strings(n))
                CHECK(pairing(diagram_apply(d, basis_tensor(x)), basis_tensor(y)) ==
                      pairing(basis_tensor(x), zeta_star_apply(d, basis_tensor(y))));
    }

    // contravariant action law through stacking
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> half(0, 2);
        int m = 2 * half(rng), r = 2 * half(rng) + (m % 2), n = 2 * half(rng) + (m % 2);
        TLDiagram d1 = random_diagram(m, r, rng);
        TLDiagram d2 = random_diagram(r, n, rng);
        auto [stacked, loops] = compose_diagrams(d1, d2);
        LaurentPoly factor(1);
        for (int l = 0; l < loops; ++l) factor *= LaurentPoly::beta();
        SpinVector v = random_vector(n, rng);
        CHECK(factor * zeta_star_apply(stacked, v) ==
              zeta_star_apply(d1, zeta_star_apply(d2, v)));
    }

    {
        ParabolicModule pm(2, 1);
        SpinVector base = basis_tensor("-+");
        TLDiagram id2 = TLDiagram::identity(2), e1 = TLDiagram::generator_e(1, 2);
        SpinVector w = canonical_basis("+-", pm);
        CHECK(pairing(base, zeta_star_apply(id2, w)) == LaurentPoly(1));
        CHECK(pairing(base, zeta_star_apply(e1, w)).is_zero());
        SpinVector u = canonical_basis("-+", pm);
        CHECK(pairing(base, zeta_star_apply(id2, u)).is_zero());
        CHECK(pairing(base, zeta_star_apply(e1, u)) == LaurentPoly(1));
    }

    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            ParabolicModule pm(n, k);
            for (const auto& lbl : all_sign_strings(n)) {
                if (minus_count(lbl) != k) continue;
                CHECK(verify_canonical_axiom(lbl, pm));
                // uniqueness: a same-weight perturbation breaks the axiom
                std::string other;
                if (lbl != base_label(n, k)) {
                    other = base_label(n, k);
                } else if (k >= 1 && k < n) {
                    other = lbl;
                    std::swap(other[k - 1], other[k]);
                }
                if (!other.empty()) {
                    SpinVector w = canonical_basis(lbl, pm);
                    spin_add_scaled(w, basis_tensor(other), qp(-1));
                    CHECK_FALSE(satisfies_canonical_axiom(lbl, w, pm));
                }
            }
        }
}
