#include "hwm/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace hwm {

static void check_same_dim(const Weight& u, const Weight& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("weight dimension mismatch");
}

Weight operator+(const Weight& u, const Weight& v) {
    check_same_dim(u, v);
    Weight out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
    return out;
}

Weight operator-(const Weight& u, const Weight& v) {
    check_same_dim(u, v);
    Weight out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
    return out;
}

Weight scaled(const Rat& c, const Weight& u) {
    Weight out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = c * u[i];
    return out;
}

Rat dot(const Weight& u, const Weight& v) {
    check_same_dim(u, v);
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rat norm2(const Weight& u) { return dot(u, u); }

Weight basis(int i, int dim) {
    Weight e(static_cast<std::size_t>(dim), Rat(0));
    e[static_cast<std::size_t>(i - 1)] = 1;
    return e;
}

std::string weight_text(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i].str();
    }
    return s;
}

std::string tuple_text(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += w[i].str();
    }
    return s + ")";
}

Weight parse_weight(const std::string& text) {
    Weight out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        out.push_back(Rat::parse(piece));
    if (out.empty())
        throw std::invalid_argument("empty weight text");
    return out;
}

}  // namespace hwm
