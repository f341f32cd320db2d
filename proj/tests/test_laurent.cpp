#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "canontl/laurent.hpp"

using canontl::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), co(-9, 9);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += LaurentPoly::term(co(rng), expo(rng));
    return p;
}

}  // namespace

TEST_CASE("addition") {
    LaurentPoly q = LaurentPoly::q();
    CHECK((q + 1) + LaurentPoly(-1) == q);
    std::mt19937 rng(42);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly() + p == p);
    }
    CHECK(LaurentPoly::q(-1) + LaurentPoly::q(-1) == LaurentPoly::term(2, -1));
}

TEST_CASE("multiplication") {
    LaurentPoly q = LaurentPoly::q(), qi = LaurentPoly::q(-1);
    CHECK((q + qi) * (q - qi) == LaurentPoly::q(2) - LaurentPoly::q(-2));
    LaurentPoly b = LaurentPoly::beta();
    CHECK(b * b == LaurentPoly::q(2) + LaurentPoly(2) + LaurentPoly::q(-2));
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly(1) * p == p);
    }
}

TEST_CASE("bar involution") {
    LaurentPoly p = LaurentPoly::q(2) - LaurentPoly::q(-1);
    CHECK(p.bar() == LaurentPoly::q(-2) - LaurentPoly::q(1));
    CHECK(LaurentPoly(5).bar() == LaurentPoly(5));
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
}

TEST_CASE("strictly negative part") {
    LaurentPoly p = LaurentPoly::q(2) + LaurentPoly(3) + LaurentPoly::term(2, -1) -
                    LaurentPoly::q(-3);
    CHECK(p.strictly_negative_part() ==
          LaurentPoly::term(2, -1) - LaurentPoly::q(-3));
    CHECK(LaurentPoly::q(-1).strictly_negative_part() == LaurentPoly::q(-1));
    CHECK((LaurentPoly::q() + 1).strictly_negative_part() == LaurentPoly());
    CHECK(LaurentPoly::q(-2).is_strictly_negative());
    CHECK_FALSE((LaurentPoly::q(-2) + 1).is_strictly_negative());
}

TEST_CASE("evaluation") {
    CHECK((LaurentPoly::q() + LaurentPoly::q(-1)).eval_at(2) == mpq_class(5, 2));
    CHECK(LaurentPoly::beta().eval_at(1) == -2);
    CHECK(LaurentPoly().eval_at(mpq_class(3, 7)) == 0);
    CHECK_THROWS(LaurentPoly::q().eval_at(0));
}

TEST_CASE("negative/constant/bar decomposition") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = random_poly(rng);
        LaurentPoly rebuilt = p.strictly_negative_part() +
                              LaurentPoly(p.constant_term()) +
                              p.bar().strictly_negative_part().bar();
        CHECK(rebuilt == p);
    }
}

// if bar(f) = -f and f has no constant term, pi = strictly_negative_part(f)
// is the unique strictly negative solution of pi - bar(pi) = f
TEST_CASE("antisymmetric reconstruction") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly pi = random_poly(rng).strictly_negative_part();
        LaurentPoly f = pi - pi.bar();
        CHECK(f.bar() == -f);
        CHECK(f.constant_term() == 0);
        CHECK(f.strictly_negative_part() == pi);
    }
}

TEST_CASE("text form") {
    LaurentPoly p = LaurentPoly::q(2) - LaurentPoly(2) + LaurentPoly::q(-1);
    CHECK(p.str() == "q^2 - 2 + q^-1");
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly::beta().str() == "-q - q^-1");
    CHECK(LaurentPoly::term(2, -1).str() == "2q^-1");
    CHECK(LaurentPoly::q().str() == "q");
    CHECK(LaurentPoly(-7).str() == "-7");
}
