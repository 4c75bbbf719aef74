#include "hwm/classify.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace hwm {

const char* status_name(Status s) {
    switch (s) {
        case Status::NotParameter: return "NotParameter";
        case Status::Nonunitary: return "Nonunitary";
        case Status::Unitary: return "Unitary";
    }
    return "?";
}

const char* case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::None: return "none";
        case CaseLabel::Scalar: return "scalar";
        case CaseLabel::Spinor: return "spinor";
        case CaseLabel::General: return "general";
        case CaseLabel::Case1: return "case-1";
        case CaseLabel::Case2: return "case-2";
        case CaseLabel::Case3: return "case-3";
        case CaseLabel::Case4: return "case-4";
        case CaseLabel::Case5: return "case-5";
        case CaseLabel::Case6: return "case-6";
        case CaseLabel::Case7: return "case-7";
        case CaseLabel::Case8: return "case-8";
        case CaseLabel::Case9: return "case-9";
    }
    return "?";
}

namespace {

UnitarityVerdict verdict(bool uni, bool verma, CaseLabel label) {
    return {uni ? Status::Unitary : Status::Nonunitary, uni && verma, label};
}

// f(w) = 3*w6 - (w1 + ... + w5), the e6 unitarity coordinate.
Rat f6(const Weight& w) {
    return Rat(3) * w[5] - (w[0] + w[1] + w[2] + w[3] + w[4]);
}

bool strict_s1(const RootSystemSpec& rs, const Weight& lam) {
    return basic_dirac(rs, lam, 0).status == DiracStatus::StrictHolds;
}

// Largest p with lam2 = ... = lam_p on the raw coordinates.
int run_equal_p(const Weight& lam) {
    int p = 2;
    const int n = static_cast<int>(lam.size());
    while (p < n && lam[p] == lam[1]) ++p;
    return p;
}

UnitarityVerdict classify_lambda_so(const RootSystemSpec& rs, const Weight& lam) {
    const int n = rs.n;
    const bool even = rs.family == Family::SoEven;
    bool zero_tail = true;
    for (std::size_t i = 1; i < lam.size(); ++i)
        if (lam[i] != Rat(0)) { zero_tail = false; break; }
    if (zero_tail) {
        Rat cut = even ? Rat(2 - n) : Rat(3, 2) - Rat(n);
        bool uni = lam[0] == Rat(0) || lam[0] <= cut;
        return verdict(uni, lam[0] < cut, CaseLabel::Scalar);
    }
    if (lam[1] == Rat(1, 2)) {
        Rat cut = even ? Rat(3, 2) - Rat(n) : Rat(1 - n);
        bool uni = lam[0] <= cut;
        return verdict(uni, lam[0] < cut, CaseLabel::Spinor);
    }
    int p = run_equal_p(lam);
    Rat cut = Rat((even ? 2 : 1) + p - 2 * n);
    Rat lhs = lam[0] + lam[1];
    return verdict(lhs <= cut, lhs < cut, CaseLabel::General);
}

UnitarityVerdict classify_lambda_e6(const RootSystemSpec& rs, const Weight& lam) {
    const Rat l1 = lam[0], l2 = lam[1], l3 = lam[2], l4 = lam[3], l5 = lam[4];
    const Rat zero = 0;
    const Rat f = f6(lam);
    if (l1 == zero && l2 == zero && l3 == zero && l4 == zero && l5 == zero)
        return verdict(f == Rat(0) || f >= Rat(6), f > Rat(6), CaseLabel::Case1);
    if (l1 == zero && l2 == zero && l3 == zero && l4 == zero && l5 > zero)
        return verdict(f == Rat(8) || f >= Rat(14), f > Rat(14), CaseLabel::Case2);
    if (l1 + l2 >= Rat(1))
        return verdict(f >= Rat(20), strict_s1(rs, lam), CaseLabel::Case3);
    if (l2 == -l1 && l3 - l2 >= Rat(1))
        return verdict(f >= Rat(18), strict_s1(rs, lam), CaseLabel::Case4);
    if (l3 == l2 && l2 == -l1 && l2 > zero && l4 - l2 >= Rat(1))
        return verdict(f >= Rat(16), strict_s1(rs, lam), CaseLabel::Case5);
    if (l1 == zero && l2 == zero && l3 == zero && l4 >= Rat(1))
        return verdict(f >= Rat(14), strict_s1(rs, lam), CaseLabel::Case6);
    if (l4 == l3 && l3 == l2 && l2 == -l1 && l2 > zero && l5 - l2 >= Rat(1))
        return verdict(f >= Rat(14), strict_s1(rs, lam), CaseLabel::Case7);
    if (l5 == l4 && l4 == l3 && l3 == l2 && l2 == -l1 && l2 > zero)
        return verdict(f >= Rat(12), strict_s1(rs, lam), CaseLabel::Case8);
    return {Status::Nonunitary, false, CaseLabel::None};  // unreachable for parameters
}

UnitarityVerdict classify_lambda_e7(const RootSystemSpec& rs, const Weight& lam) {
    const Rat l1 = lam[0], l2 = lam[1], l3 = lam[2], l4 = lam[3], l5 = lam[4];
    const Rat zero = 0;
    const Rat f = lam[6];
    const Rat g = g_of(lam);
    if (g >= Rat(1))
        return verdict(f >= Rat(8), strict_s1(rs, lam), CaseLabel::Case1);
    if (l1 < l2)
        return verdict(f >= Rat(15, 2), strict_s1(rs, lam), CaseLabel::Case2);
    if (l1 == l2 && l2 < l3)
        return verdict(f >= Rat(7), strict_s1(rs, lam), CaseLabel::Case3);
    if (zero < l1 && l1 == l2 && l2 == l3 && l3 < l4)
        return verdict(f >= Rat(13, 2), strict_s1(rs, lam), CaseLabel::Case4);
    if (l1 == zero && l2 == zero && l3 == zero && l4 > zero)
        return verdict(f >= Rat(6), strict_s1(rs, lam), CaseLabel::Case5);
    if (zero < l1 && l1 == l2 && l2 == l3 && l3 == l4 && l4 < l5)
        return verdict(f >= Rat(6), strict_s1(rs, lam), CaseLabel::Case6);
    if (l1 == zero && l2 == zero && l3 == zero && l4 == zero && l5 > zero)
        return verdict(f >= Rat(6) || f == Rat(4), f > Rat(6), CaseLabel::Case7);
    if (zero < l1 && l1 == l2 && l2 == l3 && l3 == l4 && l4 == l5)
        return verdict(f >= Rat(11, 2), strict_s1(rs, lam), CaseLabel::Case8);
    if (l1 == zero && l2 == zero && l3 == zero && l4 == zero && l5 == zero)
        return verdict(f >= Rat(4) || f == Rat(2) || f == Rat(0), f > Rat(4), CaseLabel::Case9);
    return {Status::Nonunitary, false, CaseLabel::None};
}

}  // namespace

UnitarityVerdict classify_lambda(const RootSystemSpec& rs, const Weight& lam) {
    if (!(is_k_dominant(rs, lam) && is_k_integral(rs, lam)))
        return {Status::NotParameter, false, CaseLabel::None};
    switch (rs.family) {
        case Family::SoEven:
        case Family::SoOdd: return classify_lambda_so(rs, lam);
        case Family::E6: return classify_lambda_e6(rs, lam);
        case Family::E7: return classify_lambda_e7(rs, lam);
    }
    throw std::logic_error("unknown family");
}

// ----------------------------------------------------------------------
// Infinitesimal-character form.  The case lists below are written directly
// in Lambda coordinates and share no thresholds with the lambda form above;
// the equivalence of the two classifiers is a library-wide test invariant.

namespace {

Weight so_scalar_chain(const RootSystemSpec& rs) {
    // rho tail: (n-2, ..., 1, 0) even, (n-3/2, ..., 3/2, 1/2) odd.
    const int n = rs.n;
    Weight out;
    for (int i = 2; i <= n; ++i)
        out.push_back(rs.family == Family::SoEven ? Rat(n - i) : Rat(2 * (n - i) + 1, 2));
    return out;
}

Weight so_spinor_chain(const RootSystemSpec& rs) {
    // spinor + rho tail: (n-3/2, ..., 1/2) even, (n-1, ..., 1) odd.
    const int n = rs.n;
    Weight out;
    for (int i = 2; i <= n; ++i)
        out.push_back(rs.family == Family::SoEven ? Rat(2 * (n - i) + 1, 2) : Rat(n - i + 1));
    return out;
}

// Maximal run of consecutive descent Lambda_i - 1 = Lambda_{i+1} starting at
// the second coordinate, on the raw values.
int consecutive_run(const Weight& w, int n) {
    int p = 2;
    while (p < n && w[p] == w[p - 1] - Rat(1)) ++p;
    return p;
}

UnitarityVerdict classify_inf_char_so(const RootSystemSpec& rs, const Weight& w) {
    const int n = rs.n;
    const bool even = rs.family == Family::SoEven;
    Weight tail(w.begin() + 1, w.end());
    Weight sc = so_scalar_chain(rs);
    Weight sp = so_spinor_chain(rs);
    if (tail == sc) {
        Rat top = even ? Rat(n - 1) : Rat(2 * n - 1, 2);
        bool uni = w[0] == top || w[0] <= Rat(1);
        return verdict(uni, w[0] < Rat(1), CaseLabel::Scalar);
    }
    Weight sp_neg = sp;
    sp_neg.back() = -sp_neg.back();
    if (tail == sp || (even && tail == sp_neg)) {
        bool uni = w[0] <= Rat(1, 2);
        return verdict(uni, w[0] < Rat(1, 2), CaseLabel::Spinor);
    }
    int p = consecutive_run(w, n);
    Rat cut = Rat(p - 1);
    bool uni = w[0] + w[1] <= cut;
    return verdict(uni, w[0] + w[1] < cut, CaseLabel::General);
}

UnitarityVerdict classify_inf_char_e6(const RootSystemSpec& rs, const Weight& w) {
    const Rat x1 = w[0], x2 = w[1], x3 = w[2], x4 = w[3], x5 = w[4];
    const Rat f = f6(w);
    const Weight lam = w - rs.rho;
    if (x1 == Rat(0) && x2 == Rat(1) && x3 == Rat(2) && x4 == Rat(3) && x5 == Rat(4))
        return verdict(f == Rat(-22) || f >= Rat(-16), f > Rat(-16), CaseLabel::Case1);
    if (x1 == Rat(0) && x2 == Rat(1) && x3 == Rat(2) && x4 == Rat(3) && x5 > Rat(4))
        return verdict(f == Rat(-14) || f >= Rat(-8), f > Rat(-8), CaseLabel::Case2);
    if (x1 + x2 >= Rat(2))
        return verdict(f >= Rat(-2), strict_s1(rs, lam), CaseLabel::Case3);
    if (x2 == -x1 + Rat(1) && x3 - x2 >= Rat(2))
        return verdict(f >= Rat(-4), strict_s1(rs, lam), CaseLabel::Case4);
    if (x3 == x2 + Rat(1) && x2 + Rat(1) == -x1 + Rat(2) && x2 > Rat(1) && x4 - x2 >= Rat(3))
        return verdict(f >= Rat(-6), strict_s1(rs, lam), CaseLabel::Case5);
    if (x1 == Rat(0) && x2 == Rat(1) && x3 == Rat(2) && x4 >= Rat(4))
        return verdict(f >= Rat(-8), strict_s1(rs, lam), CaseLabel::Case6);
    if (x4 == x3 + Rat(1) && x3 + Rat(1) == x2 + Rat(2) && x2 + Rat(2) == -x1 + Rat(3) &&
        x2 > Rat(1) && x5 - x2 >= Rat(4))
        return verdict(f >= Rat(-8), strict_s1(rs, lam), CaseLabel::Case7);
    if (x5 == x4 + Rat(1) && x4 + Rat(1) == x3 + Rat(2) && x3 + Rat(2) == x2 + Rat(3) &&
        x2 + Rat(3) == -x1 + Rat(4) && x2 > Rat(1))
        return verdict(f >= Rat(-10), strict_s1(rs, lam), CaseLabel::Case8);
    return {Status::Nonunitary, false, CaseLabel::None};
}

UnitarityVerdict classify_inf_char_e7(const RootSystemSpec& rs, const Weight& w) {
    const Rat x1 = w[0], x2 = w[1], x3 = w[2], x4 = w[3], x5 = w[4];
    const Rat f = w[6];
    const Rat g = g_of(w);
    const Weight lam = w - rs.rho;
    const bool c1 = x1 == x2 - Rat(1);
    const bool c2 = c1 && x2 - Rat(1) == x3 - Rat(2);
    const bool c3 = c2 && x3 - Rat(2) == x4 - Rat(3);
    const bool c4 = c3 && x4 - Rat(3) == x5 - Rat(4);
    if (g >= Rat(2))
        return verdict(f >= Rat(-1, 2), strict_s1(rs, lam), CaseLabel::Case1);
    if (g == Rat(1) && x1 < x2 - Rat(1))
        return verdict(f >= Rat(-1), strict_s1(rs, lam), CaseLabel::Case2);
    if (g == Rat(1) && c1 && x1 < x3 - Rat(2))
        return verdict(f >= Rat(-3, 2), strict_s1(rs, lam), CaseLabel::Case3);
    if (g == Rat(1) && c2 && x1 > Rat(0) && x1 < x4 - Rat(3))
        return verdict(f >= Rat(-2), strict_s1(rs, lam), CaseLabel::Case4);
    if (g == Rat(1) && c2 && x1 == Rat(0) && x4 > Rat(3))
        return verdict(f >= Rat(-5, 2), strict_s1(rs, lam), CaseLabel::Case5);
    if (g == Rat(1) && c3 && x1 > Rat(0) && x1 < x5 - Rat(4))
        return verdict(f >= Rat(-5, 2), strict_s1(rs, lam), CaseLabel::Case6);
    if (g == Rat(1) && c3 && x1 == Rat(0) && x5 > Rat(4))
        return verdict(f >= Rat(-5, 2) || f == Rat(-9, 2), f > Rat(-5, 2), CaseLabel::Case7);
    if (g == Rat(1) && c4 && x1 > Rat(0))
        return verdict(f >= Rat(-3), strict_s1(rs, lam), CaseLabel::Case8);
    if (g == Rat(1) && c4 && x1 == Rat(0))
        return verdict(f >= Rat(-9, 2) || f == Rat(-13, 2) || f == Rat(-17, 2),
                       f > Rat(-9, 2), CaseLabel::Case9);
    return {Status::Nonunitary, false, CaseLabel::None};
}

}  // namespace

UnitarityVerdict classify_inf_char(const RootSystemSpec& rs, const Weight& w) {
    if (!(is_k_dominant_regular(rs, w) && is_k_integral(rs, w)))
        return {Status::NotParameter, false, CaseLabel::None};
    switch (rs.family) {
        case Family::SoEven:
        case Family::SoOdd: return classify_inf_char_so(rs, w);
        case Family::E6: return classify_inf_char_e6(rs, w);
        case Family::E7: return classify_inf_char_e7(rs, w);
    }
    throw std::logic_error("unknown family");
}

InfCharReport inf_char_report(const RootSystemSpec& rs, const Weight& dominant) {
    OrbitEnumeration orbit = k_dominant_conjugates(rs, dominant);
    InfCharReport rep;
    rep.dominant = dominant;
    rep.orbit_size = orbit.orbit_size;
    for (Weight& c : orbit.conjugates) {
        switch (classify_inf_char(rs, c).status) {
            case Status::Unitary: rep.unitary.push_back(std::move(c)); break;
            case Status::Nonunitary: rep.nonunitary.push_back(std::move(c)); break;
            case Status::NotParameter: break;  // non-integral conjugates are dropped
        }
    }
    return rep;
}

// ----------------------------------------------------------------------
// Closed-form so conjugate partition.

namespace {

bool congruent(const Rat& x, const Rat& y) { return (x - y).is_integer(); }

bool uniform_class_all(const Weight& w) {
    int cls = -1;
    for (const Rat& c : w) {
        int k;
        if (c.den() == 1) k = 0;
        else if (c.den() == 2) k = 1;
        else return false;
        if (cls == -1) cls = k;
        else if (cls != k) return false;
    }
    return true;
}

// The Case-1 chain: n-1 congruent coordinates, strictly decreasing, with the
// family's regularity at the bottom (|last| strict for even, last > 0 odd).
bool chain_ok(const RootSystemSpec& rs, const Weight& chain) {
    if (!uniform_class_all(chain)) return false;
    const int m = static_cast<int>(chain.size());
    if (rs.family == Family::SoEven) {
        for (int i = 0; i + 2 < m; ++i)
            if (chain[i] <= chain[i + 1]) return false;
        return m < 2 || chain[m - 2] > abs(chain[m - 1]);
    }
    for (int i = 0; i + 1 < m; ++i)
        if (chain[i] <= chain[i + 1]) return false;
    return chain[m - 1] > Rat(0);
}

struct CaseSplit {
    bool case2 = false;
    Weight chain;  // case 1 only
    Rat x;         // case 1 only
};

CaseSplit detect_case(const RootSystemSpec& rs, const Weight& lad) {
    const int n = rs.n;
    if (uniform_class_all(lad)) {
        bool strict = true;
        if (rs.family == Family::SoEven) {
            for (int i = 0; i + 2 < n; ++i)
                if (lad[i] <= lad[i + 1]) { strict = false; break; }
            if (strict && !(lad[n - 2] > abs(lad[n - 1]))) strict = false;
        } else {
            for (int i = 0; i + 1 < n; ++i)
                if (lad[i] <= lad[i + 1]) { strict = false; break; }
            if (strict && !(lad[n - 1] > Rat(0))) strict = false;
        }
        if (strict) return {true, {}, Rat(0)};
    }
    for (int t = 0; t < n; ++t) {
        Weight chain;
        for (int i = 0; i < n; ++i)
            if (i != t) chain.push_back(lad[i]);
        Rat x = lad[t];
        if (!chain_ok(rs, chain)) continue;
        bool allowed;
        if (rs.family == Family::SoEven) {
            bool in_front = false;
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                if (chain[i] == x) { in_front = true; break; }
            allowed = !congruent(x, chain[0]) || in_front || x == chain.back() ||
                      x == -chain.back();
        } else {
            bool in_chain = false;
            for (const Rat& c : chain)
                if (c == x) { in_chain = true; break; }
            allowed = !congruent(x, chain[0]) || in_chain || x == Rat(0);
        }
        if (allowed) return {false, std::move(chain), x};
    }
    throw NotCovered("dominant weight fits neither closed-form case");
}

// All k-dominant-regular signed-permutation conjugates, combinatorially.
// W(D_n) allows only even sign-change counts unless a coordinate vanishes;
// W(B_n) has no parity constraint.
std::vector<Weight> conjugates_so_even(const Weight& lad) {
    const int n = static_cast<int>(lad.size());
    Weight absvals(lad.size());
    for (int i = 0; i < n; ++i) absvals[i] = abs(lad[i]);
    std::sort(absvals.begin(), absvals.end(), [](const Rat& a, const Rat& b) { return b < a; });
    bool has_zero = false;
    int neg0 = 0;
    for (const Rat& c : lad) {
        if (c == Rat(0)) has_zero = true;
        if (c < Rat(0)) ++neg0;
    }
    std::set<Weight> out;
    for (int j = 0; j < n; ++j) {
        Weight rest;
        for (int i = 0; i < n; ++i)
            if (i != j) rest.push_back(absvals[i]);
        for (int fs : {1, -1}) {
            for (int ts : {1, -1}) {
                Weight w;
                w.push_back(Rat(fs) * absvals[j]);
                for (const Rat& c : rest) w.push_back(c);
                w.back() = Rat(ts) * w.back();
                int negs = 0;
                for (const Rat& c : w)
                    if (c < Rat(0)) ++negs;
                if (!has_zero && (negs % 2) != (neg0 % 2)) continue;
                bool ok = true;
                for (int i = 1; i + 2 < n && ok; ++i)
                    if (!(w[i] > w[i + 1])) ok = false;
                if (!ok || !(w[n - 2] > abs(w[n - 1]))) continue;
                out.insert(std::move(w));
            }
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Weight> conjugates_so_odd(const Weight& lad) {
    const int n = static_cast<int>(lad.size());
    Weight absvals(lad.size());
    for (int i = 0; i < n; ++i) absvals[i] = abs(lad[i]);
    std::sort(absvals.begin(), absvals.end(), [](const Rat& a, const Rat& b) { return b < a; });
    std::set<Weight> out;
    for (int j = 0; j < n; ++j) {
        for (int fs : {1, -1}) {
            Weight w;
            w.push_back(Rat(fs) * absvals[j]);
            for (int i = 0; i < n; ++i)
                if (i != j) w.push_back(absvals[i]);
            bool ok = true;
            for (int i = 1; i + 1 < n && ok; ++i)
                if (!(w[i] > w[i + 1])) ok = false;
            if (!ok || !(w[n - 1] > Rat(0))) continue;
            out.insert(std::move(w));
        }
    }
    return {out.begin(), out.end()};
}

int lambda_side_run(const Weight& w, int n) {
    int p = 2;
    while (p < n && w[p] == w[p - 1] - Rat(1)) ++p;
    return p;
}

Weight prepend(const Rat& head, const Weight& rest) {
    Weight w;
    w.push_back(head);
    for (const Rat& c : rest) w.push_back(c);
    return w;
}

}  // namespace

InfCharReport closed_form_conjugates_so(const RootSystemSpec& rs, const Weight& dominant) {
    if (rs.family != Family::SoEven && rs.family != Family::SoOdd)
        throw std::domain_error("closed_form_conjugates_so applies to the so families only");
    if (!is_g_dominant(rs, dominant))
        throw std::domain_error("The entered parameter is not g-dominant");
    const int n = rs.n;
    const bool even = rs.family == Family::SoEven;
    CaseSplit split = detect_case(rs, dominant);

    std::set<Weight> uni;
    std::vector<Weight> all;

    if (!split.case2) {
        // Case 1: exactly two k-dominant-regular conjugates, (x | chain) and
        // its partner with the leftover coordinate negated.
        const Weight& chain = split.chain;
        const Rat x = split.x;
        const Rat c1 = chain[0];
        Weight lam_in = prepend(x, chain);
        Weight lam_tw;
        if (even) {
            Weight flipped = chain;
            flipped.back() = -flipped.back();
            lam_tw = prepend(-x, flipped);
        } else {
            lam_tw = prepend(-x, chain);
        }
        all = {lam_in};
        if (lam_tw != lam_in) all.push_back(lam_tw);  // x = 0 can collapse the pair
        Weight sc = so_scalar_chain(rs);
        Weight sp = so_spinor_chain(rs);
        if (even) {
            Weight sp_neg = sp;
            sp_neg.back() = -sp_neg.back();
            if (chain == sc) {
                if (Rat(0) <= x && x <= Rat(1)) uni.insert(lam_in);
                if (x >= Rat(0)) uni.insert(lam_tw);
            } else if (chain == sp) {
                if (Rat(-1, 2) <= x && x <= Rat(1, 2)) uni.insert(lam_in);
                if (x >= Rat(-1, 2)) uni.insert(lam_tw);
            } else if (chain == sp_neg) {
                if (x == Rat(1, 2)) uni.insert(lam_in);
                if (x >= Rat(1, 2)) uni.insert(lam_tw);
            } else {
                if (x > Rat(0)) {
                    int pt = lambda_side_run(lam_tw, n);
                    if (-x + c1 <= Rat(pt - 1)) uni.insert(lam_tw);
                } else if (x < Rat(0)) {
                    int p = lambda_side_run(lam_in, n);
                    if (x + c1 <= Rat(p - 1)) uni.insert(lam_in);
                }
                // x == 0: both conjugates nonunitary
            }
        } else {
            if (chain == sc) {
                if (x <= Rat(1)) uni.insert(lam_in);
                uni.insert(lam_tw);
            } else if (chain == sp) {
                if (x <= Rat(1, 2)) uni.insert(lam_in);
                uni.insert(lam_tw);
            } else {
                if (x > Rat(1, 2)) {
                    int pt = lambda_side_run(lam_tw, n);
                    if (-x + c1 <= Rat(pt - 1)) uni.insert(lam_tw);
                }
                // x <= 1/2: neither conjugate unitary
            }
        }
    } else {
        // Case 2: all coordinates congruent and strictly decreasing.
        all = even ? conjugates_so_even(dominant) : conjugates_so_odd(dominant);
        const Weight& vals = dominant;
        if (even) {
            Weight sc_full = so_scalar_chain(rs);   // (n-2, ..., 0)
            Weight sp_abs = so_spinor_chain(rs);    // (n-3/2, ..., 1/2)
            Weight tail(vals.begin() + 1, vals.end());
            bool spinor_tail = true;
            for (int i = 0; i + 1 < n - 1; ++i)
                if (tail[i] != sp_abs[i]) { spinor_tail = false; break; }
            spinor_tail = spinor_tail && abs(vals[n - 1]) == Rat(1, 2);
            if (tail == sc_full && vals[0] >= Rat(n - 1) && vals[0].is_integer()) {
                if (vals[0] == Rat(n - 1)) {
                    uni.insert(vals);
                    // every front value of the rho-like chain works negated
                    for (int v = 0; v <= n - 1; ++v) {
                        Weight rest;
                        for (int u = n - 1; u >= 0; --u)
                            if (u != v) rest.push_back(Rat(u));
                        uni.insert(prepend(Rat(-v), rest));
                    }
                } else {
                    uni.insert(prepend(-vals[0], sc_full));
                }
            } else if (spinor_tail && vals[0] >= Rat(2 * n - 1, 2) && vals[0].den() == 2) {
                const int e = vals[n - 1] > Rat(0) ? 1 : -1;
                if (vals[0] >= Rat(2 * n + 1, 2)) {
                    Weight w = sp_abs;
                    w.back() = Rat(-e, 2);
                    uni.insert(prepend(-vals[0], w));
                } else {  // vals[0] == n - 1/2
                    Weight mids;  // n-1/2 .. 3/2
                    for (int i = 1; i < n; ++i) mids.push_back(Rat(2 * (n - i) + 1, 2));
                    {
                        Weight rest;
                        for (int i = 2; i < n; ++i) rest.push_back(Rat(2 * (n - i) + 1, 2));
                        rest.push_back(Rat(-e, 2));
                        uni.insert(prepend(Rat(-(2 * n - 1), 2), rest));
                    }
                    for (int i = 2; i < n; ++i) {
                        Rat v = Rat(2 * (n - i) + 1, 2);
                        Weight rest;
                        for (const Rat& u : mids)
                            if (u != v) rest.push_back(u);
                        rest.push_back(Rat(-e, 2));
                        uni.insert(prepend(-v, rest));
                    }
                    if (e == -1) uni.insert(prepend(Rat(-1, 2), mids));
                }
            } else {
                const Rat a = vals[0];
                int q = 1;
                while (q < n && vals[q] == a - Rat(q)) ++q;
                const bool spec_form =
                    q >= n - 1 && abs(vals[n - 1]) == a - Rat(n - 1) && a >= Rat(n);
                if (spec_form && q == n - 1) {
                    const int e = vals[n - 1] > Rat(0) ? 1 : -1;
                    Weight allv;  // a .. a-n+2
                    for (int i = 0; i < n - 1; ++i) allv.push_back(a - Rat(i));
                    for (int i = 0; i < n - 1; ++i) {
                        Weight rest;
                        for (const Rat& u : allv)
                            if (u != a - Rat(i)) rest.push_back(u);
                        rest.push_back(Rat(-e) * (a - Rat(n - 1)));
                        uni.insert(prepend(-a + Rat(i), rest));
                    }
                    if (e == -1) uni.insert(prepend(-(a - Rat(n - 1)), allv));
                } else if (q == n && a >= Rat(n)) {
                    // full positive run (a, ..., a-n+1)
                    Weight allv;
                    for (int i = 0; i < n - 1; ++i) allv.push_back(a - Rat(i));
                    for (int i = 0; i < n - 1; ++i) {
                        Weight rest;
                        for (const Rat& u : allv)
                            if (u != a - Rat(i)) rest.push_back(u);
                        rest.push_back(-(a - Rat(n - 1)));
                        uni.insert(prepend(-a + Rat(i), rest));
                    }
                } else {
                    assert(q < n && abs(vals[q]) <= a - Rat(q) - Rat(1));
                    for (int i = 0; i < q; ++i) {
                        Weight rest;
                        for (int k = 0; k < n; ++k)
                            if (k != i) rest.push_back(vals[k]);
                        rest.back() = -rest.back();
                        uni.insert(prepend(-a + Rat(i), rest));
                    }
                }
            }
        } else {
            Weight sc_full = so_scalar_chain(rs);  // (n-3/2, ..., 1/2)
            Weight sp_full = so_spinor_chain(rs);  // (n-1, ..., 1)
            Weight tail(vals.begin() + 1, vals.end());
            if (tail == sc_full && vals[0] >= Rat(2 * n - 1, 2) && vals[0].den() == 2) {
                if (vals[0] == Rat(2 * n - 1, 2)) {
                    uni.insert(vals);
                    Weight allv;  // n-1/2 .. 1/2
                    for (int i = 1; i <= n; ++i) allv.push_back(Rat(2 * (n - i) + 1, 2));
                    for (const Rat& v : allv) {
                        Weight rest;
                        for (const Rat& u : allv)
                            if (u != v) rest.push_back(u);
                        uni.insert(prepend(-v, rest));
                    }
                } else {
                    uni.insert(prepend(-vals[0], sc_full));
                }
            } else if (tail == sp_full && vals[0] >= Rat(n) && vals[0].is_integer()) {
                if (vals[0] == Rat(n)) {
                    Weight allv;  // n .. 1
                    for (int i = 0; i < n; ++i) allv.push_back(Rat(n - i));
                    for (const Rat& v : allv) {
                        Weight rest;
                        for (const Rat& u : allv)
                            if (u != v) rest.push_back(u);
                        uni.insert(prepend(-v, rest));
                    }
                } else {
                    uni.insert(prepend(-vals[0], sp_full));
                }
            } else {
                const Rat a = vals[0];
                int q = 1;
                while (q < n && vals[q] == a - Rat(q)) ++q;
                if (q < n) assert(vals[q] <= a - Rat(q) - Rat(1));
                for (int i = 0; i < q; ++i) {
                    Weight rest;
                    for (int k = 0; k < n; ++k)
                        if (k != i) rest.push_back(vals[k]);
                    uni.insert(prepend(-a + Rat(i), rest));
                }
            }
        }
    }

    InfCharReport rep;
    rep.dominant = dominant;
    for (const Weight& w : all) {
        if (uni.count(w)) rep.unitary.push_back(w);
        else rep.nonunitary.push_back(w);
    }
    std::sort(rep.unitary.begin(), rep.unitary.end());
    std::sort(rep.nonunitary.begin(), rep.nonunitary.end());
    // every theorem-produced unitary point must be an actual conjugate
    assert(uni.size() == rep.unitary.size());
    return rep;
}

}  // namespace hwm
