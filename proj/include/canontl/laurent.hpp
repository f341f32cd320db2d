#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace canontl {

// Exact Laurent polynomial in q over Z. Stored as exponent -> coefficient
// with no zero coefficients, so operator== is value equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(mpz_class(c)) {}
    LaurentPoly(const mpz_class& c) {
        if (c != 0) terms_[0] = c;
    }

    static LaurentPoly q(int e = 1) { return term(1, e); }
    static LaurentPoly term(const mpz_class& c, int e);
    // beta = -q - q^{-1}, the closed-loop scalar
    static LaurentPoly beta() { return term(-1, 1) + term(-1, -1); }

    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(int e) const;
    const std::map<int, mpz_class>& terms() const { return terms_; }
    int min_exp() const;  // throws on zero
    int max_exp() const;  // throws on zero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // q -> q^{-1}
    LaurentPoly bar() const;
    // sub-sum of terms with exponent <= -1
    LaurentPoly strictly_negative_part() const;
    // true iff every stored exponent is < 0 (zero polynomial passes)
    bool is_strictly_negative() const;
    mpz_class constant_term() const { return coeff(0); }

    // exact evaluation; x must be nonzero
    mpq_class eval_at(const mpq_class& x) const;

    // terms by descending exponent, e.g. "q^2 - 2 + q^-1"
    std::string str() const;

private:
    std::map<int, mpz_class> terms_;
};

}  // namespace canontl
