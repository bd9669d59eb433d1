#pragma once

// Berlekamp–Massey over a field. The result is the monic characteristic
// polynomial p of smallest degree L such that
//   p_L s_n + p_{L-1} s_{n-1} + ... + p_0 s_{n-L} = 0   for L <= n < len(s).
// Trailing transients show up as a power of x dividing p.

#include <cstddef>
#include <span>
#include <vector>

#include "petersen/poly.hpp"

namespace petersen {

// Connection polynomial C(z) = 1 + c_1 z + ... + c_L z^L, returned as {c_0..c_L}
// together with L (C may have trailing zeros when L exceeds its degree).
template <class Field>
std::pair<std::vector<Field>, std::size_t> berlekamp_massey_connection(std::span<const Field> s) {
    std::vector<Field> c{Field(1)};
    std::vector<Field> b{Field(1)};
    std::size_t length = 0;
    std::size_t shift = 1;
    Field last_discrepancy(1);
    for (std::size_t n = 0; n < s.size(); ++n) {
        Field d = s[n];
        for (std::size_t i = 1; i <= length && i < c.size(); ++i) d += c[i] * s[n - i];
        if (d == 0) {
            ++shift;
            continue;
        }
        Field coef = d / last_discrepancy;
        std::vector<Field> t = c;
        if (c.size() < b.size() + shift) c.resize(b.size() + shift, Field(0));
        for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= coef * b[i];
        if (2 * length <= n) {
            length = n + 1 - length;
            b = std::move(t);
            last_discrepancy = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    c.resize(length + 1, Field(0));
    return {std::move(c), length};
}

inline Poly berlekamp_massey(std::span<const Rational> s) {
    auto [c, length] = berlekamp_massey_connection<Rational>(s);
    // p(x) = x^L C(1/x)
    std::vector<Rational> p(length + 1);
    for (std::size_t i = 0; i <= length; ++i) p[length - i] = c[i];
    return Poly(std::move(p));
}

inline Poly berlekamp_massey(const std::vector<Integer>& s) {
    std::vector<Rational> q(s.begin(), s.end());
    return berlekamp_massey(std::span<const Rational>(q));
}

}  // namespace petersen
