#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nw::exact {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: gcd(num, den) == 1 and den > 0 after every arithmetic op.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a" or "a/b" with optional sign; throws std::domain_error on junk.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::domain_error("rational: cannot parse '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline Rational div_checked(const Rational& a, const Rational& b) {
    if (b == 0) throw std::domain_error("rational: division by zero");
    return a / b;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace nw::exact
