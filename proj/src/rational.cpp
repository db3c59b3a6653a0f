#include "qde/rational.hpp"

#include <cctype>

#include "qde/error.hpp"

namespace qde {

namespace {

Integer pow10(long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number");
    bool neg = false;
    size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string body = s.substr(pos);
    Rational r;
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        std::string a = body.substr(0, slash), b = body.substr(slash + 1);
        if (!all_digits(a) || !all_digits(b)) throw ParseError("bad rational: " + in);
        Integer den(b, 10);
        if (den == 0) throw ZeroDenominator("zero denominator in " + in);
        r = Rational(Integer(a, 10), den);
        r.canonicalize();
    } else {
        long exp10 = 0;
        auto e = body.find_first_of("eE");
        if (e != std::string::npos) {
            std::string ex = body.substr(e + 1);
            body = body.substr(0, e);
            size_t p = 0;
            bool eneg = false;
            if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
                eneg = ex[0] == '-';
                p = 1;
            }
            if (!all_digits(ex.substr(p))) throw ParseError("bad exponent: " + in);
            exp10 = std::stol(ex.substr(p));
            if (eneg) exp10 = -exp10;
        }
        auto dot = body.find('.');
        std::string digits = body;
        if (dot != std::string::npos) {
            digits = body.substr(0, dot) + body.substr(dot + 1);
            exp10 -= static_cast<long>(body.size() - dot - 1);
        }
        if (!all_digits(digits)) throw ParseError("bad number: " + in);
        Integer m(digits, 10);
        if (exp10 >= 0)
            r = Rational(m * pow10(exp10));
        else {
            r = Rational(m, pow10(-exp10));
            r.canonicalize();
        }
    }
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

} // namespace qde
