#pragma once

// Weyl-group machinery: root reflections, the W_k-dominant representative of
// a weight (by descent through the compact simple roots), and enumeration of
// all k-dominant-regular W_g-conjugates of a g-dominant weight.

#include <cstddef>
#include <vector>

#include "hwm/root_system.hpp"

namespace hwm {

struct OrbitEnumeration {
    Weight source;                   // the g-dominant input
    std::vector<Weight> conjugates;  // k-dominant-regular orbit members, sorted
    std::size_t orbit_size = 0;      // distinct orbit points visited
};

// s_a(w) = w - (2<w,a>/<a,a>) a.  Throws std::invalid_argument unless a is a
// root of the system (a positive root or the negative of one).
Weight reflect(const RootSystemSpec& rs, const Weight& a, const Weight& w);

// The unique W_k-dominant member of the W_k-orbit of w.
Weight k_dominant_representative(const RootSystemSpec& rs, const Weight& w);

// Breadth-first closure of {lam} under the simple reflections of g, carried
// out on denominator-cleared integer vectors with a hash-set for exact
// deduplication.  conjugates lists the k-dominant-regular members in
// lexicographic order.  Throws std::domain_error("The entered parameter is
// not g-dominant") when lam is not g-dominant.
OrbitEnumeration k_dominant_conjugates(const RootSystemSpec& rs, const Weight& lam);

}  // namespace hwm
