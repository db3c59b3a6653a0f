#pragma once

#include <gmpxx.h>
#include <string>

namespace qde {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized a/b (mpq_class(a, b) alone does not reduce).
inline Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Accepts "3", "-2/5", "0.31", "-1.5e-2".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

} // namespace qde
