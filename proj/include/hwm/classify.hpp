#pragma once

// Unitarity classification of highest weight modules L(lam), in two
// independent forms:
//
//   classify_lambda    decides from the highest weight lam itself,
//   classify_inf_char  decides from the infinitesimal character
//                      Lambda = lam + rho,
//
// implemented from separate case lists so their agreement is a genuine
// cross-check rather than a tautology.  inf_char_report enumerates all
// k-dominant-regular conjugates of a g-dominant Lambda and partitions them,
// i.e. it lists every unitary and nonunitary parameter sharing that
// infinitesimal character.  closed_form_conjugates_so produces the same
// partition for the so families from closed-form case theorems, without
// touching the orbit enumerator.

#include <cstddef>
#include <vector>

#include "hwm/dirac.hpp"
#include "hwm/root_system.hpp"
#include "hwm/weyl.hpp"

namespace hwm {

enum class Status { NotParameter, Nonunitary, Unitary };

// Which clause of the family's classification fired.  The so families split
// by the shape of the tail; e6 has eight lambda-form cases, e7 nine.
enum class CaseLabel {
    None,
    Scalar,
    Spinor,
    General,
    Case1, Case2, Case3, Case4, Case5, Case6, Case7, Case8, Case9,
};

const char* status_name(Status s);
const char* case_label_name(CaseLabel c);

struct UnitarityVerdict {
    Status status = Status::NotParameter;
    bool verma_irreducible = false;  // meaningful only when status == Unitary
    CaseLabel case_label = CaseLabel::None;
};

struct InfCharReport {
    Weight dominant;
    std::vector<Weight> unitary;     // sorted lexicographically
    std::vector<Weight> nonunitary;  // sorted lexicographically
    std::size_t orbit_size = 0;      // orbit points visited (0 for closed form)
};

// Verdict for the highest weight lam.  Weights failing k-dominance or
// k-integrality are NotParameter.
UnitarityVerdict classify_lambda(const RootSystemSpec& rs, const Weight& lam);

// Verdict for the infinitesimal character w = lam + rho.  Weights failing
// k-dominant-regularity or k-integrality are NotParameter.  Equivalent to
// classify_lambda(rs, w - rho) on valid parameters.
UnitarityVerdict classify_inf_char(const RootSystemSpec& rs, const Weight& w);

// Partitions the k-dominant-regular conjugates of a g-dominant dominant
// weight by classify_inf_char; conjugates that are not parameters (fail
// integrality) are dropped.  Throws std::domain_error("The entered parameter
// is not g-dominant") on bad input.
InfCharReport inf_char_report(const RootSystemSpec& rs, const Weight& dominant);

// Raised by closed_form_conjugates_so when the dominant weight fits neither
// closed-form case.
struct NotCovered : std::domain_error {
    using std::domain_error::domain_error;
};

// The same partition as inf_char_report for the so families, computed from
// the closed-form conjugate theorems:
//   Case 1: n-1 coordinates form a strictly decreasing half/integer chain
//           and the leftover coordinate x is either non-congruent to the
//           chain or collides with it in the allowed positions;
//   Case 2: all n coordinates are congruent and strictly decreasing.
// Serves as an independent oracle for the enumerator.
InfCharReport closed_form_conjugates_so(const RootSystemSpec& rs, const Weight& dominant);

}  // namespace hwm
