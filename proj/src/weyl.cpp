#include "hwm/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hwm {

Weight reflect(const RootSystemSpec& rs, const Weight& a, const Weight& w) {
    bool is_root = false;
    for (const auto* list : {&rs.compact, &rs.noncompact}) {
        for (const Weight& r : *list) {
            if (r == a || scaled(-1, r) == a) { is_root = true; break; }
        }
        if (is_root) break;
    }
    if (!is_root)
        throw std::invalid_argument("reflect: not a root of the system");
    Rat c = Rat(2) * dot(w, a) / dot(a, a);
    return w - scaled(c, a);
}

Weight k_dominant_representative(const RootSystemSpec& rs, const Weight& w) {
    Weight cur = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const Weight& a : rs.simple_k) {
            if (dot(cur, a) < Rat(0)) {
                Rat c = Rat(2) * dot(cur, a) / dot(a, a);
                cur = cur - scaled(c, a);
                moved = true;
                break;
            }
        }
    }
    return cur;
}

namespace {

// The orbit walk runs on denominator-cleared integer vectors: with
// D = 4 * lcm(coordinate denominators) and V = D*w, the reflection in a root
// a (stored as A = 2a, den = 2<a,a>) is V' = V - (<V,A>/den) * A, which is
// exact because D absorbs the half-integer root coordinates.

using IVec = std::vector<std::int64_t>;

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::int64_t x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

struct ScaledRoot {
    IVec a2;           // 2 * root
    std::int64_t den;  // 2 * <root, root>
};

ScaledRoot scale_root(const Weight& a) {
    ScaledRoot r;
    for (const Rat& c : a) {
        Rat two_c = Rat(2) * c;
        if (!two_c.is_integer())
            throw std::logic_error("root coordinates must be half-integral");
        r.a2.push_back(two_c.num());
    }
    Rat nn = Rat(2) * norm2(a);
    r.den = nn.num();
    return r;
}

bool reflect_scaled(const IVec& v, const ScaledRoot& r, IVec& out) {
    std::int64_t t = 0;
    for (std::size_t j = 0; j < v.size(); ++j) t += v[j] * r.a2[j];
    if (t == 0) return false;  // fixed point
    out = v;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (r.a2[j] == 0) continue;
        std::int64_t num = t * r.a2[j];
        assert(num % r.den == 0 && "scaled reflection must stay integral");
        out[j] -= num / r.den;
    }
    return true;
}

}  // namespace

OrbitEnumeration k_dominant_conjugates(const RootSystemSpec& rs, const Weight& lam) {
    if (!is_g_dominant(rs, lam))
        throw std::domain_error("The entered parameter is not g-dominant");

    std::int64_t L = 1;
    for (const Rat& c : lam) L = std::lcm(L, c.den());
    const std::int64_t D = 4 * L;

    IVec v0;
    for (const Rat& c : lam) v0.push_back(c.num() * (D / c.den()));

    std::vector<ScaledRoot> roots;
    for (const Weight& a : rs.simple_g) roots.push_back(scale_root(a));
    std::vector<ScaledRoot> ksimple;
    for (const Weight& a : rs.simple_k) ksimple.push_back(scale_root(a));

    std::unordered_set<IVec, IVecHash> seen;
    seen.insert(v0);
    // unordered_set nodes are stable, so the frontier can hold pointers.
    std::vector<const IVec*> frontier{&*seen.begin()};

    // Strict positivity against every compact simple root is exactly
    // k-dominant-regularity; collect those orbit members as we go.
    std::vector<IVec> conj;
    auto consider = [&](const IVec& v) {
        for (const ScaledRoot& b : ksimple) {
            std::int64_t t = 0;
            for (std::size_t j = 0; j < v.size(); ++j) t += v[j] * b.a2[j];
            if (t <= 0) return;
        }
        conj.push_back(v);
    };
    consider(v0);

    IVec tmp;
    std::vector<const IVec*> next;
    while (!frontier.empty()) {
        next.clear();
        for (const IVec* v : frontier) {
            for (const ScaledRoot& r : roots) {
                if (!reflect_scaled(*v, r, tmp)) continue;
                auto [it, inserted] = seen.insert(tmp);
                if (inserted) {
                    next.push_back(&*it);
                    consider(*it);
                }
            }
        }
        frontier.swap(next);
    }

    std::sort(conj.begin(), conj.end());
    OrbitEnumeration out;
    out.source = lam;
    out.orbit_size = seen.size();
    for (const IVec& v : conj) {
        Weight w(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) w[j] = Rat(v[j], D);
        out.conjugates.push_back(std::move(w));
    }
    return out;
}

}  // namespace hwm
