#ifndef WEYLGP_RATIONAL_HPP
#define WEYLGP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace weylgp {

/// Exact rational scalar used throughout the symbolic stage.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// gcd of numerators over lcm of denominators; content(∅) = 0.
Rational content(const std::vector<Rational>& coeffs);

}  // namespace weylgp

#endif
