#pragma once

// The basic Dirac inequality.  For a Schmid vector s and a k-dominant,
// k-integral highest weight lam,
//
//     ||(lam - s)^+ + rho||^2  >=  ||lam + rho||^2
//
// is necessary for unitarity of L(lam); strictness for every basic Schmid
// vector certifies that the generalized Verma module N(lam) is itself
// irreducible and unitary.  (lam - s)^+ is the W_k-dominant representative.

#include "hwm/root_system.hpp"

namespace hwm {

enum class DiracStatus { Fails, Equality, StrictHolds };

const char* dirac_status_name(DiracStatus s);

struct DiracOutcome {
    DiracStatus status;
    Rat lhs;  // ||(lam - s)^+ + rho||^2
    Rat rhs;  // ||lam + rho||^2
};

// Evaluates the inequality for schmid[s_index].  Throws std::out_of_range
// when s_index is past the family's Schmid list and std::domain_error when
// lam is not k-dominant.
DiracOutcome basic_dirac(const RootSystemSpec& rs, const Weight& lam, std::size_t s_index);

// Closed form of the s_1 = e1+e2 inequality for the so families, split into
// the three shapes a k-dominant integral weight can take:
//
//   scalar   lam = (x, 0, ..., 0):        x <= 0
//   spinor   lam = (x, 1/2, ..., +-1/2):  x <= 3/2 - n   (even),  1 - n (odd)
//   general  lam2 >= 1:                   lam1 + lam2 <= 2 + p - 2n  (even),
//                                                        1 + p - 2n  (odd)
//
// p is the largest index with lam2 = ... = lam_p, read off the raw
// coordinates.  In the even family the final coordinate enters k-dominance
// through its absolute value, and when lam_n = -lam2 != 0 the descent that
// computes (lam - s_1)^+ folds |lam_n| into the run; the closed form here
// deliberately keeps the sign-sensitive p of the classification case lists,
// so on that single boundary shape its strictness can differ from
// basic_dirac (see the unit tests for the exact divergence).
struct DiracScalarForm {
    enum class Case { Scalar, Spinor, General };
    Case form;
    int p;        // meaningful in the general case only; 0 otherwise
    bool holds;   // case inequality satisfied
    bool strict;  // satisfied strictly
};

// Throws std::domain_error for the E families.
DiracScalarForm dirac_scalar_form(const RootSystemSpec& rs, const Weight& lam);

}  // namespace hwm
