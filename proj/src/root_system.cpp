#include "hwm/root_system.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace hwm {

const char* family_name(Family f) {
    switch (f) {
        case Family::SoEven: return "so-even";
        case Family::SoOdd: return "so-odd";
        case Family::E6: return "e6";
        case Family::E7: return "e7";
    }
    return "?";
}

namespace {

// The compact simple roots are the indecomposable elements of the positive
// compact roots: a is decomposable exactly when a - b is again a positive
// compact root for some positive compact b.
std::vector<Weight> indecomposables(const std::vector<Weight>& compact) {
    std::set<Weight> cs(compact.begin(), compact.end());
    const Weight zero(compact.empty() ? 0 : compact.front().size(), Rat(0));
    std::vector<Weight> simple;
    for (const Weight& a : compact) {
        bool dec = false;
        for (const Weight& b : compact) {
            if (b == a) continue;
            Weight d = a - b;
            if (d != zero && cs.count(d)) { dec = true; break; }
        }
        if (!dec) simple.push_back(a);
    }
    return simple;
}

RootSystemSpec finish(RootSystemSpec rs) {
    rs.simple_k = indecomposables(rs.compact);
    return rs;
}

RootSystemSpec build_so(Family fam, int n) {
    const bool even = fam == Family::SoEven;
    if (even && n < 3) throw std::domain_error("so-even requires n >= 3");
    if (!even && n < 2) throw std::domain_error("so-odd requires n >= 2");
    RootSystemSpec rs;
    rs.family = fam;
    rs.n = n;
    rs.dim = n;
    for (int i = 2; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            rs.compact.push_back(basis(i, n) - basis(j, n));
            rs.compact.push_back(basis(i, n) + basis(j, n));
        }
    }
    if (!even)
        for (int i = 2; i <= n; ++i) rs.compact.push_back(basis(i, n));
    for (int j = 2; j <= n; ++j) {
        rs.noncompact.push_back(basis(1, n) - basis(j, n));
        rs.noncompact.push_back(basis(1, n) + basis(j, n));
    }
    if (!even) rs.noncompact.push_back(basis(1, n));
    for (int i = 1; i < n; ++i) rs.simple_g.push_back(basis(i, n) - basis(i + 1, n));
    rs.simple_g.push_back(even ? basis(n - 1, n) + basis(n, n) : basis(n, n));
    rs.rho.resize(n);
    for (int i = 1; i <= n; ++i)
        rs.rho[i - 1] = even ? Rat(n - i) : Rat(2 * (n - i) + 1, 2);
    rs.schmid = {basis(1, n) + basis(2, n), scaled(2, basis(1, n))};
    return finish(std::move(rs));
}

Weight half_vector(std::initializer_list<int> signs) {
    Weight v;
    for (int s : signs) v.push_back(Rat(s, 2));
    return v;
}

RootSystemSpec build_e6() {
    RootSystemSpec rs;
    rs.family = Family::E6;
    rs.n = 6;
    rs.dim = 8;
    for (int i = 2; i <= 5; ++i) {
        for (int j = 1; j < i; ++j) {
            rs.compact.push_back(basis(i, 8) - basis(j, 8));
            rs.compact.push_back(basis(i, 8) + basis(j, 8));
        }
    }
    // Noncompact: (1/2)(+-1,...,+-1, -1, -1, 1) with an even number of minus
    // signs among the first five entries.
    for (int mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        Weight v(8);
        for (int i = 0; i < 5; ++i) v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        v[5] = Rat(-1, 2);
        v[6] = Rat(-1, 2);
        v[7] = Rat(1, 2);
        rs.noncompact.push_back(std::move(v));
    }
    rs.simple_g = {
        half_vector({1, -1, -1, -1, -1, -1, -1, 1}),
        basis(2, 8) + basis(1, 8),
        basis(2, 8) - basis(1, 8),
        basis(3, 8) - basis(2, 8),
        basis(4, 8) - basis(3, 8),
        basis(5, 8) - basis(4, 8),
    };
    rs.rho = {0, 1, 2, 3, 4, -4, -4, 4};
    rs.schmid = {half_vector({1, 1, 1, 1, 1, -1, -1, 1}),
                 Weight{0, 0, 0, 0, 1, -1, -1, 1}};
    return finish(std::move(rs));
}

RootSystemSpec build_e7() {
    RootSystemSpec e6 = build_e6();
    RootSystemSpec rs;
    rs.family = Family::E7;
    rs.n = 7;
    rs.dim = 8;
    rs.compact = e6.compact;  // all positive e6 roots are compact in e7
    rs.compact.insert(rs.compact.end(), e6.noncompact.begin(), e6.noncompact.end());
    for (int i = 1; i <= 5; ++i) {
        rs.noncompact.push_back(basis(6, 8) - basis(i, 8));
        rs.noncompact.push_back(basis(6, 8) + basis(i, 8));
    }
    rs.noncompact.push_back(basis(8, 8) - basis(7, 8));
    // (1/2)(+-1,...,+-1, 1, -1, 1) with an odd number of minus signs in the
    // first five entries.
    for (int mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) % 2 != 1) continue;
        Weight v(8);
        for (int i = 0; i < 5; ++i) v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        v[5] = Rat(1, 2);
        v[6] = Rat(-1, 2);
        v[7] = Rat(1, 2);
        rs.noncompact.push_back(std::move(v));
    }
    rs.simple_g = e6.simple_g;
    rs.simple_g.push_back(basis(6, 8) - basis(5, 8));
    rs.rho = {0, 1, 2, 3, 4, 5, Rat(-17, 2), Rat(17, 2)};
    rs.schmid = {Weight{0, 0, 0, 0, 0, 0, -1, 1},
                 Weight{0, 0, 0, 0, 1, 1, -1, 1},
                 Weight{0, 0, 0, 0, 0, 2, -1, 1}};
    return finish(std::move(rs));
}

}  // namespace

RootSystemSpec build(Family family, int n) {
    switch (family) {
        case Family::SoEven: return build_so(Family::SoEven, n);
        case Family::SoOdd: return build_so(Family::SoOdd, n);
        case Family::E6: return build_e6();
        case Family::E7: return build_e7();
    }
    throw std::domain_error("unknown family");
}

Rat inner(const RootSystemSpec& rs, const Weight& u, const Weight& v) {
    if (static_cast<int>(u.size()) != rs.dim || static_cast<int>(v.size()) != rs.dim)
        throw std::invalid_argument("weight dimension does not match root system");
    return dot(u, v);
}

Rat g_of(const Weight& w) {
    return (w[0] - w[1] - w[2] - w[3] - w[4] - w[5] - Rat(2) * w[6]) / Rat(2);
}

bool is_k_dominant(const RootSystemSpec& rs, const Weight& w) {
    switch (rs.family) {
        case Family::SoEven: {
            const int n = rs.n;
            for (int i = 1; i < n - 2; ++i)
                if (w[i] < w[i + 1]) return false;
            return w[n - 2] >= abs(w[n - 1]);
        }
        case Family::SoOdd: {
            const int n = rs.n;
            for (int i = 1; i < n - 1; ++i)
                if (w[i] < w[i + 1]) return false;
            return w[n - 1] >= Rat(0);
        }
        case Family::E6:
            return abs(w[0]) <= w[1] && w[1] <= w[2] && w[2] <= w[3] && w[3] <= w[4];
        case Family::E7:
            return abs(w[0]) <= w[1] && w[1] <= w[2] && w[2] <= w[3] && w[3] <= w[4] &&
                   g_of(w) >= Rat(0);
    }
    return false;
}

bool is_k_dominant_regular(const RootSystemSpec& rs, const Weight& w) {
    switch (rs.family) {
        case Family::SoEven: {
            const int n = rs.n;
            for (int i = 1; i < n - 2; ++i)
                if (w[i] <= w[i + 1]) return false;
            return w[n - 2] > abs(w[n - 1]);
        }
        case Family::SoOdd: {
            const int n = rs.n;
            for (int i = 1; i < n - 1; ++i)
                if (w[i] <= w[i + 1]) return false;
            return w[n - 1] > Rat(0);
        }
        case Family::E6:
            return abs(w[0]) < w[1] && w[1] < w[2] && w[2] < w[3] && w[3] < w[4];
        case Family::E7:
            return abs(w[0]) < w[1] && w[1] < w[2] && w[2] < w[3] && w[3] < w[4] &&
                   g_of(w) > Rat(0);
    }
    return false;
}

bool is_g_dominant(const RootSystemSpec& rs, const Weight& w) {
    switch (rs.family) {
        case Family::SoEven: {
            const int n = rs.n;
            for (int i = 0; i < n - 2; ++i)
                if (w[i] < w[i + 1]) return false;
            return w[n - 2] >= abs(w[n - 1]);
        }
        case Family::SoOdd: {
            const int n = rs.n;
            for (int i = 0; i < n - 1; ++i)
                if (w[i] < w[i + 1]) return false;
            return w[n - 1] >= Rat(0);
        }
        case Family::E6:
            return abs(w[0]) <= w[1] && w[1] <= w[2] && w[2] <= w[3] && w[3] <= w[4] &&
                   w[0] - w[1] - w[2] - w[3] - w[4] - Rat(3) * w[5] >= Rat(0);
        case Family::E7:
            return abs(w[0]) <= w[1] && w[1] <= w[2] && w[2] <= w[3] && w[3] <= w[4] &&
                   w[4] <= w[5] && g_of(w) >= Rat(0);
    }
    return false;
}

namespace {

// All entries integers, or all entries half-odd-integers.
bool uniform_class(const Weight& w, std::size_t lo, std::size_t hi) {
    int cls = -1;
    for (std::size_t i = lo; i < hi; ++i) {
        int c;
        if (w[i].den() == 1) c = 0;
        else if (w[i].den() == 2) c = 1;
        else return false;
        if (cls == -1) cls = c;
        else if (cls != c) return false;
    }
    return true;
}

}  // namespace

bool is_k_integral(const RootSystemSpec& rs, const Weight& w) {
    switch (rs.family) {
        case Family::SoEven:
        case Family::SoOdd:
            return uniform_class(w, 1, w.size());
        case Family::E6:
            return uniform_class(w, 0, 5);
        case Family::E7: {
            Rat half = (w[0] - w[1] - w[2] - w[3] - w[4] - w[5] - w[6] + w[7]) / Rat(2);
            return uniform_class(w, 0, 5) && half.is_integer();
        }
    }
    return false;
}

}  // namespace hwm
