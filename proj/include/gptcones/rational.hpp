#pragma once

// Exact rational scalar used throughout the library. All cone geometry is
// computed over Q: no tolerances, no rounding.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace gptcones {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Parses "p/q" or "n". Constructed via exact division so the result is
// always in lowest terms with a positive denominator.
inline Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (text.empty() || slash == 0 || slash == text.size() - 1)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        return Rat(num) / Rat(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

// "p/q" for non-integers, plain "n" otherwise.
inline std::string rat_str(const Rat& value) { return value.str(); }

inline double rat_double(const Rat& value) { return value.convert_to<double>(); }

// Decimal rendering with 12 significant digits, used wherever a report file
// shows a float alongside the exact value.
inline std::string float12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::string(buf);
}

}  // namespace gptcones
