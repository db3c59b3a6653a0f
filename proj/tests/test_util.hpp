#pragma once

#include "doctest.h"

#include "qde/ratfunc.hpp"

namespace doctest {
template <> struct StringMaker<qde::RatFunc> {
    static String convert(const qde::RatFunc& f) { return f.str().c_str(); }
};
template <> struct StringMaker<qde::Poly> {
    static String convert(const qde::Poly& p) { return p.str().c_str(); }
};
} // namespace doctest
