#pragma once

// Exact rational scalar used throughout the library.  All weight and root
// coordinates are rationals; no floating point appears anywhere in the
// decision procedures.  Values stay tiny (numerators of norm-squares of the
// weights we handle fit comfortably in a few decimal digits), but every
// product is computed in 128-bit before narrowing, so intermediate overflow
// cannot silently corrupt a verdict.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hwm {

class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_, already_normalized{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend Rat abs(const Rat& a) { return a.num_ < 0 ? -a : a; }

    // Lowest-terms text: "p" when integral, otherwise "p/q" with q > 0.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts "p", "p/q", and finite decimals ("1.5", ".5", "-0.25").
    static Rat parse(const std::string& text);

private:
    using i128 = __int128;
    struct already_normalized {};
    constexpr Rat(std::int64_t n, std::int64_t d, already_normalized) : num_(n), den_(d) {}

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational out of 64-bit range");
        return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), already_normalized{});
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rat Rat::parse(const std::string& text) {
    auto bad = [&]() -> Rat {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    };
    std::size_t i = 0, n = text.size();
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t end = n;
    while (end > i && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    if (i >= end) return bad();
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') { neg = text[i] == '-'; ++i; }
    std::int64_t whole = 0, frac_num = 0, frac_den = 1, denom = 0;
    bool have_digits = false, have_dot = false, have_slash = false;
    for (; i < end; ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            have_digits = true;
            if (have_slash) denom = denom * 10 + (c - '0');
            else if (have_dot) { frac_num = frac_num * 10 + (c - '0'); frac_den *= 10; }
            else whole = whole * 10 + (c - '0');
            if (whole > (INT64_MAX >> 8) || frac_den > (INT64_MAX >> 8) || denom > (INT64_MAX >> 8))
                throw std::overflow_error("rational literal too large: '" + text + "'");
        } else if (c == '.' && !have_dot && !have_slash) {
            have_dot = true;
        } else if (c == '/' && !have_slash && !have_dot && have_digits) {
            have_slash = true;
            have_digits = false;  // require digits after the slash too
        } else {
            return bad();
        }
    }
    if (!have_digits) return bad();
    Rat r;
    if (have_slash) r = Rat(whole, denom);
    else r = Rat(whole) + Rat(frac_num, frac_den);
    return neg ? -r : r;
}

}  // namespace hwm

template <>
struct std::hash<hwm::Rat> {
    std::size_t operator()(const hwm::Rat& r) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ULL;
        };
        mix(static_cast<std::uint64_t>(r.num()));
        mix(static_cast<std::uint64_t>(r.den()));
        return static_cast<std::size_t>(h);
    }
};
