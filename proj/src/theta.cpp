#include "hwm/theta.hpp"

#include <algorithm>
#include <stdexcept>

namespace hwm {

std::vector<ThetaType> pi_types(int m, int max_level) {
    std::vector<ThetaType> out;
    for (int n = 0; n <= max_level; ++n) {
        for (int a = 0; a <= n; ++a) {
            int c = a + m;
            int b = n - a - c;
            if (c >= 0 && b >= 0)
                out.push_back({a, b, c, n, 3 * n + m + 16});
        }
    }
    std::sort(out.begin(), out.end(), [](const ThetaType& s, const ThetaType& t) {
        return s.n != t.n ? s.n < t.n : s.a < t.a;
    });
    return out;
}

ThetaType minimal_type(int m) {
    if (m >= 0) return {0, 0, m, m, 4 * m + 16};
    int k = -m;
    return {k, 0, 0, k, 2 * k + 16};
}

DiscretePoint discrete_point_bridge(int k) {
    if (k < 0)
        throw std::domain_error("discrete_point_bridge: k must be non-negative");
    Rat l = Rat(k + 8, 3);
    if (l.den() > 2)
        throw std::domain_error("discrete_point_bridge: (k+8)/3 is not half-integral");
    return {Weight{0, 0, 0, 0, Rat(k), l, l, -l}, -k};
}

}  // namespace hwm
