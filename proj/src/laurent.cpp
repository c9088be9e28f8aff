#include "cellweb/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cellweb {

LaurentPoly LaurentPoly::monomial(Int coeff, int half_exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(half_exp, std::move(coeff));
    return p;
}

Int LaurentPoly::coeff(int half_exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == half_exp) return it->second;
    return 0;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::invalid_argument("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::invalid_argument("max_exp of zero polynomial");
    return terms_.back().first;
}

bool LaurentPoly::has_half_exponents() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return true;
    return false;
}

void LaurentPoly::prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const auto& t) { return t.second == 0; }),
                 terms_.end());
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            Int c = a->second + b->second;
            if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::map<int, Int> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            acc[ea + eb] += ca * cb;
    LaurentPoly r;
    r.terms_.assign(acc.begin(), acc.end());
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.emplace_back(-it->first, it->second);
    return r;
}

LaurentPoly LaurentPoly::shifted(int half_steps) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) e += half_steps;
    return r;
}

static Rational rational_pow(const Rational& x, int k) {
    Rational r = 1;
    Rational base = k >= 0 ? x : Rational(1) / x;
    for (int i = 0; i < std::abs(k); ++i) r *= base;
    return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (x == 0) throw std::invalid_argument("evaluate: substitution at zero");
    if (has_half_exponents())
        throw std::invalid_argument("evaluate: half-integer exponents need an explicit square root");
    Rational r = 0;
    for (const auto& [e, c] : terms_) r += Rational(c) * rational_pow(x, e / 2);
    return r;
}

Rational LaurentPoly::evaluate(const Rational& x, const Rational& sqrt_x) const {
    if (x == 0) throw std::invalid_argument("evaluate: substitution at zero");
    if (sqrt_x * sqrt_x != x) throw std::invalid_argument("evaluate: sqrt_x^2 != x");
    Rational r = 0;
    for (const auto& [e, c] : terms_) r += Rational(c) * rational_pow(sqrt_x, e);
    return r;
}

std::string LaurentPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << abs_c.str();
            continue;
        }
        if (abs_c != 1) out << abs_c.str() << "*";
        out << var;
        if (e == 2) {
            // plain "v"
        } else if (e % 2 == 0) {
            out << "^" << e / 2;
        } else {
            out << "^(" << e << "/2)";
        }
    }
    return out.str();
}

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eof() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return s[i]; }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("LaurentPoly parse error at position " +
                                    std::to_string(i) + ": " + msg);
    }

    Int parse_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start || (i == start + 1 && !std::isdigit((unsigned char)s[start])))
            fail("expected integer");
        return Int(std::string(s.substr(start, i - start)));
    }

    // exponent after '^': "2", "-1", "(3/2)", "(-3/2)"; returns half-step code
    int parse_exponent() {
        skip_ws();
        if (i < s.size() && s[i] == '(') {
            ++i;
            Int num = parse_int();
            skip_ws();
            int code;
            if (i < s.size() && s[i] == '/') {
                ++i;
                Int den = parse_int();
                if (den != 2) fail("only denominator 2 supported");
                code = num.convert_to<int>();
            } else {
                code = 2 * num.convert_to<int>();
            }
            skip_ws();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            return code;
        }
        return 2 * parse_int().convert_to<int>();
    }

    // one term: [coeff ['*']] [var ['^' exp]]
    LaurentPoly parse_term(int sign) {
        skip_ws();
        Int c = 1;
        bool saw_coeff = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            c = parse_int();
            saw_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        }
        int e = 0;
        if (i < s.size() && (s[i] == 'v' || s[i] == 'q')) {
            ++i;
            e = 2;
            skip_ws();
            if (i < s.size() && s[i] == '^') { ++i; e = parse_exponent(); }
        } else if (!saw_coeff) {
            fail("expected coefficient or variable");
        }
        return LaurentPoly::monomial(sign * c, e);
    }

    LaurentPoly parse_poly() {
        LaurentPoly r;
        int sign = 1;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++i;
        }
        r += parse_term(sign);
        while (!eof()) {
            char c = peek();
            if (c == '+') sign = 1;
            else if (c == '-') sign = -1;
            else fail("expected '+' or '-'");
            ++i;
            r += parse_term(sign);
        }
        return r;
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view s) {
    Parser p{s};
    if (p.eof()) throw std::invalid_argument("LaurentPoly parse error: empty input");
    {
        // allow a plain "0"
        Parser probe{s};
        probe.skip_ws();
        if (probe.i < s.size() && s[probe.i] == '0') {
            size_t j = probe.i + 1;
            while (j < s.size() && std::isspace((unsigned char)s[j])) ++j;
            if (j == s.size()) return {};
        }
    }
    return p.parse_poly();
}

} // namespace cellweb
