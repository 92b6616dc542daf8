#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace verlinde {

// All results in this library are exact: big integers and big rationals,
// never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Int& n) { return n.str(); }

inline Int sq(const Int& x) { return x * x; }

// "p/q" with q omitted when 1; matches the JSON wire format.
inline std::string rat_to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

// Exact integer extraction; throws when r is not integral.
inline Int rat_to_int(const Rat& r) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::domain_error("expected integral value, got " + rat_to_string(r));
    return boost::multiprecision::numerator(r);
}

inline bool is_integral(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

}  // namespace verlinde
