#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace logcsm {

using Integer = boost::multiprecision::cpp_int;

// Always stored in lowest terms with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

}  // namespace logcsm
