#pragma once

#include <string>

#include "specalc/pathalg.hpp"

namespace specalc {

// Parses a linear combination of edge-label words over a path basis, e.g.
// "b*a - d*c" or "2*x*y + 1/3*z*w". Words compose right to left ("b*a" is a
// first, then b), coefficients are exact rationals written "p" or "p/q" and
// must precede the word in each term. Unlabeled edges are addressable as
// "e<id>".
AlgElement parse_relation(const PathBasis& pb, const std::string& text);

// Deterministic printable form, parseable back by parse_relation.
std::string elem_str(const AlgElement& v);

}  // namespace specalc
