#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace n7 {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// Parses "num", "num/den" or decimal-free signed integers.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

inline std::string to_string(const Rat& r) {
    const Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_pow(Rat base, unsigned e) {
    Rat out(1);
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

}  // namespace n7
