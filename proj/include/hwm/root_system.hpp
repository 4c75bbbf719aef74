#pragma once

// Root data for the four families of Hermitian pairs handled by this
// library, in ambient coordinates:
//
//   SoEven(n), n >= 3:  so(2, 2n-2), type D_n in R^n.
//       compact roots  e_i +- e_j (2 <= i < j <= n), noncompact e_1 +- e_j.
//   SoOdd(n), n >= 2:   so(2, 2n-1), type B_n in R^n.
//       adds the short roots: e_i (i >= 2) compact, e_1 noncompact.
//   E6:  e6(-14), realized in R^8 on the subspace x6 = x7 = -x8.
//       compact part so(10) + R:  e_i +- e_j for 1 <= j < i <= 5.
//   E7:  e7(-25), realized in R^8 on the subspace x8 = -x7.
//       compact part e6 + R: all 36 positive e6 roots.
//
// In all cases the first Schmid vector s_1 is the highest noncompact root
// beta; the Dirac inequality for s_1 drives the classification theorems.

#include <vector>

#include "hwm/weight.hpp"

namespace hwm {

enum class Family { SoEven, SoOdd, E6, E7 };

const char* family_name(Family f);

struct RootSystemSpec {
    Family family;
    int n;    // rank parameter for the so families; 6 or 7 for E
    int dim;  // ambient coordinate dimension (n, or 8 for E)

    std::vector<Weight> compact;     // positive compact roots
    std::vector<Weight> noncompact;  // positive noncompact roots
    std::vector<Weight> simple_g;    // simple roots of the full system
    std::vector<Weight> simple_k;    // indecomposables of the compact positives
    Weight rho;                      // half-sum of all positive roots
    std::vector<Weight> schmid;      // basic Schmid vectors s_1, s_2, ...
};

// Constructs the root data.  n is ignored for the E families.
// Throws std::domain_error when n is below the family's minimum rank.
RootSystemSpec build(Family family, int n = 0);

// Inner product in the ambient coordinates; throws std::invalid_argument on
// dimension mismatch with the system.
Rat inner(const RootSystemSpec& rs, const Weight& u, const Weight& v);

// (w1 - w2 - w3 - w4 - w5 - w6 - 2*w7) / 2: the pairing of an e7 weight with
// the simple root alpha1, used both in dominance tests and the e7 case split.
Rat g_of(const Weight& w);

bool is_k_dominant(const RootSystemSpec& rs, const Weight& w);
bool is_k_dominant_regular(const RootSystemSpec& rs, const Weight& w);
bool is_g_dominant(const RootSystemSpec& rs, const Weight& w);

// Integrality against the compact roots: <w, a^v> in Z for every compact a.
// For the so families this constrains only w2..wn (uniform integer or
// half-integer class); for e6 it constrains w1..w5; e7 additionally requires
// (w1 - w2 - ... - w6 - w7 + w8)/2 to be an integer.
bool is_k_integral(const RootSystemSpec& rs, const Weight& w);

}  // namespace hwm
