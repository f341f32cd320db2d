#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "canontl/barsolver.hpp"

using namespace canontl;

namespace {

struct MatrixModule : BarModule {
    std::vector<Coords> rows;
    int size() const override { return (int)rows.size(); }
    Coords bar_row(int x) const override { return rows.at(x); }
};

Coords bar_coords(const Coords& v) {
    Coords out;
    for (auto& [x, c] : v) out[x] = c.bar();
    return out;
}

// v expressed in the unitriangular column family, by hand
Coords solve_columns(const std::vector<Coords>& cols, Coords v) {
    Coords out;
    while (!v.empty()) {
        auto it = std::prev(v.end());
        int x = it->first;
        LaurentPoly a = it->second;
        out[x] = a;
        add_scaled(v, cols[x], -a);
    }
    return out;
}

// conjugate the plain coefficient bar by a unitriangular change of basis;
// the result is always a valid triangular involution
MatrixModule conjugated_module(const std::vector<Coords>& cols) {
    MatrixModule mod;
    for (int x = 0; x < (int)cols.size(); ++x) {
        Coords u = bar_coords(solve_columns(cols, Coords{{x, LaurentPoly(1)}}));
        Coords row;
        for (auto& [y, c] : u) add_scaled(row, cols[y], c);
        mod.rows.push_back(std::move(row));
    }
    return mod;
}

std::vector<Coords> random_columns(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2), nterms(0, 2);
    std::vector<Coords> cols(n);
    for (int x = 0; x < n; ++x) {
        cols[x][x] = LaurentPoly(1);
        for (int y = 0; y < x; ++y) {
            LaurentPoly p;
            for (int t = nterms(rng); t > 0; --t) p += LaurentPoly::term(coeff(rng), expo(rng));
            if (!p.is_zero()) cols[x][y] = p;
        }
    }
    return cols;
}

Coords random_vector(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(-3, 3);
    Coords v;
    for (int x = 0; x < n; ++x) {
        LaurentPoly p = LaurentPoly::term(coeff(rng), expo(rng)) +
                        LaurentPoly::term(coeff(rng), expo(rng));
        if (!p.is_zero()) v[x] = p;
    }
    return v;
}

}  // namespace

TEST_CASE("rank one and plain modules") {
    MatrixModule triv;
    triv.rows = {Coords{{0, LaurentPoly(1)}}};
    auto fam = compute_canonical_basis(triv);
    CHECK(fam.canonical[0] == Coords{{0, LaurentPoly(1)}});

    MatrixModule plain;
    for (int x = 0; x < 5; ++x) plain.rows.push_back(Coords{{x, LaurentPoly(1)}});
    fam = compute_canonical_basis(plain);
    for (int x = 0; x < 5; ++x) CHECK(fam.canonical[x] == Coords{{x, LaurentPoly(1)}});
}

TEST_CASE("two element module") {
    MatrixModule mod;
    mod.rows = {Coords{{0, LaurentPoly(1)}},
                Coords{{0, LaurentPoly::q(-1) - LaurentPoly::q(1)}, {1, LaurentPoly(1)}}};
    auto fam = compute_canonical_basis(mod);
    CHECK(fam.canonical[0] == Coords{{0, LaurentPoly(1)}});
    CHECK(fam.canonical[1] == Coords{{0, LaurentPoly::q(-1)}, {1, LaurentPoly(1)}});

    auto a = express_in_canonical(fam, Coords{{1, LaurentPoly(1)}});
    CHECK(a == Coords{{0, -LaurentPoly::q(-1)}, {1, LaurentPoly(1)}});
}

TEST_CASE("invalid modules are rejected") {
    MatrixModule bad;
    bad.rows = {Coords{{0, LaurentPoly::q()}}};
    CHECK_THROWS_AS(compute_canonical_basis(bad), BarModuleError);

    bad.rows = {Coords{{1, LaurentPoly(1)}}, Coords{{1, LaurentPoly(1)}}};
    CHECK_THROWS_AS(compute_canonical_basis(bad), BarModuleError);

    bad.rows = {Coords{{0, LaurentPoly(1)}},
                Coords{{0, LaurentPoly(1)}, {1, LaurentPoly(1)}}};
    CHECK_THROWS_AS(compute_canonical_basis(bad), BarModuleError);

    bad.rows = {Coords{}};
    CHECK_THROWS_AS(compute_canonical_basis(bad), BarModuleError);
}

TEST_CASE("random conjugated involutions") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + (int)(rng() % 8);
        auto cols = random_columns(n, rng);
        auto mod = conjugated_module(cols);
        auto fam = compute_canonical_basis(mod);
        for (int x = 0; x < n; ++x) {
            const Coords& c = fam.canonical[x];
            CHECK(std::prev(c.end())->first == x);
            CHECK(c.at(x) == LaurentPoly(1));
            for (auto& [y, p] : c)
                if (y != x) CHECK(p.is_strictly_negative());
            CHECK(mod.bar_vector(c) == c);
        }
        // expression round trip
        Coords v = random_vector(n, rng);
        Coords a = express_in_canonical(fam, v);
        Coords back;
        for (auto& [x, p] : a) add_scaled(back, fam.canonical[x], p);
        CHECK(back == v);
    }
}

TEST_CASE("bar_vector is semilinear") {
    std::mt19937 rng(99);
    auto cols = random_columns(6, rng);
    auto mod = conjugated_module(cols);
    Coords v = random_vector(6, rng);
    LaurentPoly s = LaurentPoly::q(2) - LaurentPoly(3);
    Coords sv;
    add_scaled(sv, v, s);
    Coords lhs = mod.bar_vector(sv), rhs;
    add_scaled(rhs, mod.bar_vector(v), s.bar());
    CHECK(lhs == rhs);
}
