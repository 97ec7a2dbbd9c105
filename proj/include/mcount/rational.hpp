#ifndef MCOUNT_RATIONAL_HPP
#define MCOUNT_RATIONAL_HPP

/*
 * Exact arbitrary-precision rational arithmetic.
 *
 * All point-count polynomials in this project have rational coefficients
 * (divisions by automorphism orders like 2(q^6 - q^2) introduce halves),
 * so everything downstream is built on an exact rational type. We use
 * boost::multiprecision's header-only cpp_int/cpp_rational rather than
 * rolling our own normalized fraction type.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace mcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats r as "num" or "num/den" (den > 0, lowest terms).
inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

/// Parses "num" or "num/den". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
    }
}

/// True when r is an integer.
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Integer value of r; throws if r is not an integer.
inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) {
        throw std::domain_error("expected integer, got " + rational_to_string(r));
    }
    return numerator(r);
}

}  // namespace mcount

#endif  // MCOUNT_RATIONAL_HPP
