#pragma once

// Weights are plain coordinate vectors in the ambient Euclidean realization
// of a root system: dimension n for the so families, dimension 8 for e6 and
// e7.  e6 weights satisfy x6 = x7 = -x8 and e7 weights x8 = -x7; both linear
// constraints are preserved by the Weyl reflections used here, so they are
// validated where weights enter the system (parsing, construction helpers)
// rather than rechecked in every operation.

#include <string>
#include <vector>

#include "hwm/rational.hpp"

namespace hwm {

using Weight = std::vector<Rat>;

Weight operator+(const Weight& u, const Weight& v);
Weight operator-(const Weight& u, const Weight& v);
Weight scaled(const Rat& c, const Weight& u);
Rat dot(const Weight& u, const Weight& v);
Rat norm2(const Weight& u);

// 1-based standard basis vector e_i in the given dimension.
Weight basis(int i, int dim);

// Comma-separated lowest-terms text, e.g. "0,1,2,3,4,-4,-4,4" or "3/2,1/2".
std::string weight_text(const Weight& w);

// Listing-style tuple text, e.g. "(0, 1, 2, 3, 4, -13, 1/2, -1/2)".
std::string tuple_text(const Weight& w);

// Parses comma-separated rationals ("p", "p/q", or decimal forms).
Weight parse_weight(const std::string& text);

}  // namespace hwm
