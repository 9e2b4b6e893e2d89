#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

#include "dtorus/errors.hpp"

namespace dtorus {

// Exact rational scalar. GMP keeps numerators/denominators arbitrary size,
// which matters once reduction chains start multiplying q- and z-coefficients.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q"; used by the CLI for --theta and --mu.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace dtorus
