#pragma once

#include <gmpxx.h>

#include <string>

namespace specalc {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 with den > 0 once
// canonicalized; rat_parse and all arithmetic below maintain that form.
using Rational = mpq_class;

// Counts (dimensions, ranks, path numbers). Everything at desk scale, but the
// integer sequences in mixedtate grow, so use a wide type throughout.
using Count = long long;

// Accepts "p", "-p/q", "+p/q" with optional surrounding whitespace.
Rational rat_parse(const std::string& text);

// Inverse of rat_parse: "p" when den = 1, else "p/q".
std::string rat_str(const Rational& x);

inline bool rat_is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace specalc
