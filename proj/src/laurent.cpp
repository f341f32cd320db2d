#include "canontl/laurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace canontl {

LaurentPoly LaurentPoly::term(const mpz_class& c, int e) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

mpz_class LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e1 + e2, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::strictly_negative_part() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (e >= 0) break;
        r.terms_.emplace(e, c);
    }
    return r;
}

bool LaurentPoly::is_strictly_negative() const {
    return terms_.empty() || terms_.rbegin()->first < 0;
}

mpq_class LaurentPoly::eval_at(const mpq_class& x) const {
    if (x == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at 0");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class base = e >= 0 ? x : mpq_class(1) / x;
        mpq_class p = 1;
        for (int i = 0; i < std::abs(e); ++i) p *= base;
        acc += mpq_class(c) * p;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0 || a != 1) out << a.get_str();
        if (e != 0) {
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace canontl
