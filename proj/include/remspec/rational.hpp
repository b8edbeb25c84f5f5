#pragma once

#include <gmpxx.h>

#include <string>

namespace remspec {

// Exact arithmetic ground types. mpq_class keeps fractions reduced with a
// positive denominator, which is the canonical form all modules rely on.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace remspec
