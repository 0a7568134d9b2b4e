#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "polynet/errors.hpp"

namespace polynet {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; the canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical string form: "n" for integers, "n/d" otherwise (lowest terms,
/// d > 0).
inline std::string rational_str(const Rational& r) {
    return r.str();
}

/// Parses "n" or "n/d". Accepts non-canonical input (e.g. "2/4", "1/-2")
/// and canonicalizes; rejects everything else.
inline Rational parse_rational(const std::string& s) {
    const auto bad = [&]() -> ParseError {
        return ParseError("not a rational: '" + s + "'");
    };
    if (s.empty()) throw bad();
    auto parse_int = [&](const std::string& part) -> BigInt {
        std::size_t i = 0;
        if (part[i] == '+' || part[i] == '-') ++i;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return BigInt(part);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: '" + s + "'");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

} // namespace polynet
