#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qk {

// All arithmetic in this library is exact; Rational is the coefficient
// domain everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace qk
