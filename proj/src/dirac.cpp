#include "hwm/dirac.hpp"

#include <stdexcept>

#include "hwm/weyl.hpp"

namespace hwm {

const char* dirac_status_name(DiracStatus s) {
    switch (s) {
        case DiracStatus::Fails: return "Fails";
        case DiracStatus::Equality: return "Equality";
        case DiracStatus::StrictHolds: return "StrictHolds";
    }
    return "?";
}

DiracOutcome basic_dirac(const RootSystemSpec& rs, const Weight& lam, std::size_t s_index) {
    if (s_index >= rs.schmid.size())
        throw std::out_of_range("basic_dirac: Schmid index out of range");
    if (!is_k_dominant(rs, lam))
        throw std::domain_error("basic_dirac: weight is not k-dominant");
    Weight dropped = k_dominant_representative(rs, lam - rs.schmid[s_index]);
    DiracOutcome out;
    out.lhs = norm2(dropped + rs.rho);
    out.rhs = norm2(lam + rs.rho);
    out.status = out.lhs > out.rhs   ? DiracStatus::StrictHolds
                 : out.lhs == out.rhs ? DiracStatus::Equality
                                      : DiracStatus::Fails;
    return out;
}

// Largest p with lam2 = ... = lam_p, on the raw tail (lam2, ..., lam_n).
static int run_p(const Weight& lam) {
    int p = 2;
    const int n = static_cast<int>(lam.size());
    while (p < n && lam[p] == lam[1]) ++p;
    return p;
}

DiracScalarForm dirac_scalar_form(const RootSystemSpec& rs, const Weight& lam) {
    if (rs.family != Family::SoEven && rs.family != Family::SoOdd)
        throw std::domain_error("dirac_scalar_form applies to the so families only");
    const bool even = rs.family == Family::SoEven;
    const int n = rs.n;
    bool zero_tail = true;
    for (std::size_t i = 1; i < lam.size(); ++i)
        if (lam[i] != Rat(0)) { zero_tail = false; break; }
    DiracScalarForm out;
    if (zero_tail) {
        out.form = DiracScalarForm::Case::Scalar;
        out.p = 0;
        out.holds = lam[0] <= Rat(0);
        out.strict = lam[0] < Rat(0);
        return out;
    }
    if (lam[1] == Rat(1, 2)) {
        Rat bound = even ? Rat(3, 2) - Rat(n) : Rat(1 - n);
        out.form = DiracScalarForm::Case::Spinor;
        out.p = 0;
        out.holds = lam[0] <= bound;
        out.strict = lam[0] < bound;
        return out;
    }
    out.form = DiracScalarForm::Case::General;
    out.p = run_p(lam);
    Rat bound = Rat((even ? 2 : 1) + out.p - 2 * n);
    Rat lhs = lam[0] + lam[1];
    out.holds = lhs <= bound;
    out.strict = lhs < bound;
    return out;
}

}  // namespace hwm
