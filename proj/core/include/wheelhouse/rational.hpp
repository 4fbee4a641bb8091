#pragma once

#include <gmpxx.h>
#include <string>

namespace wheelhouse {

// Exact rational scalar used throughout the engine. There is no floating
// point anywhere; every comparison is an exact equality.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline Rat factorial(int n) {
    Rat r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace wheelhouse
