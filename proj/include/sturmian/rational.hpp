#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sturmian {

using Int = boost::multiprecision::cpp_int;

// Exact fraction, kept in lowest terms with positive denominator by the
// backend. All core geometry runs on these; no floating point.
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Floor division for a possibly negative numerator; d must be positive.
inline Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int floor_rat(const Rational& r) { return floor_div(rat_num(r), rat_den(r)); }

// Parses "p/q" or a bare integer "p". Denominator must be nonzero.
Rational parse_rational(std::string_view text);

// Always renders as "p/q", e.g. "0/1", "34/89".
std::string rational_str(const Rational& r);

}  // namespace sturmian
