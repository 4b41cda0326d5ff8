#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace p0cert {

using Integer = boost::multiprecision::cpp_int;

// Exact rational with positive denominator, kept in lowest terms by the
// backend after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) {
    return r.sign();
}

// Canonical serialization: "p" when the denominator is 1, else "p/q"
// with q > 0 and gcd(p, q) = 1.
inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

// Accepts "p" or "p/q" with optional leading minus signs on p (and q).
Rational parse_rational(const std::string& text);

}  // namespace p0cert
