#pragma once

// Exact arithmetic in the ring A = Z[v^(1/2), v^(-1/2)] (equivalently Z[q, q^-1]).
// Exponents are stored as integer counts of half-steps, so v has exponent code 2
// and v^(1/2) has exponent code 1.  Coefficients are arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cellweb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_.emplace_back(0, c); }
    LaurentPoly(Int c) { if (c != 0) terms_.emplace_back(0, std::move(c)); }

    // coeff * v^(half_exp/2)
    static LaurentPoly monomial(Int coeff, int half_exp);
    static LaurentPoly v(int k = 1) { return monomial(1, 2 * k); }
    static LaurentPoly vhalf(int k = 1) { return monomial(1, k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

    // sorted by ascending exponent code; no zero coefficients
    const std::vector<std::pair<int, Int>>& terms() const { return terms_; }
    Int coeff(int half_exp) const;
    int min_exp() const; // half-step codes; poly must be nonzero
    int max_exp() const;
    bool has_half_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // bar involution: v^(1/2) -> v^(-1/2), i.e. exponent code e -> -e
    LaurentPoly bar() const;
    // multiply by v^(half_steps/2)
    LaurentPoly shifted(int half_steps) const;

    // Substitute v := x.  Requires x != 0 and all exponents integral; use the
    // two-argument form to evaluate polynomials with genuine half-integer
    // exponents at a chosen square root of x.
    Rational evaluate(const Rational& x) const;
    Rational evaluate(const Rational& x, const Rational& sqrt_x) const;

    // Text form: terms joined by " + "/" - ", descending exponent, e.g. "v + 2 + v^-1".
    std::string str(char var = 'v') const;
    static LaurentPoly parse(std::string_view s);

private:
    std::vector<std::pair<int, Int>> terms_;
    void prune();
};

} // namespace cellweb
