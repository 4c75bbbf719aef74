#pragma once

// K-type bookkeeping for the family Pi[m-2]' of e6 modules arising through
// the dual pair inside split E7, and the bridge identifying the isolated
// discrete points of the e6 classification with members of that family.
// The types at level n are the triples (a, b, c) with a + b + c = n and
// c - a = m; each carries the one-dimensional character weight 3n + m + 16.

#include <vector>

#include "hwm/weight.hpp"

namespace hwm {

struct ThetaType {
    int a = 0, b = 0, c = 0;
    int n = 0;              // level: a + b + c
    int hprime_weight = 0;  // 3n + m + 16

    friend bool operator==(const ThetaType&, const ThetaType&) = default;
};

// All types with level n <= max_level, sorted by (n, a).
std::vector<ThetaType> pi_types(int m, int max_level);

// The unique minimal K-type: (0,0,m) with weight 4m+16 for m >= 0,
// (|m|,0,0) with weight 2|m|+16 for m <= 0.
ThetaType minimal_type(int m);

// For k >= 0 with l = (k+8)/3 half-integral, the e6 highest weight
// chi = (0,0,0,0,k,l,l,-l) of the discrete classification point matched
// with Pi[-k-2]; returns (chi, m = -k).  chi pairs with the grading element
// h = 2(e8 - e7 - e6) to -2k - 16, the lowest h-weight of Pi[-k-2].
// Throws std::domain_error when k is negative or l is not half-integral.
struct DiscretePoint {
    Weight chi;
    int m = 0;
};

DiscretePoint discrete_point_bridge(int k);

}  // namespace hwm
