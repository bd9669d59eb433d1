#pragma once

// Dense univariate polynomials with exact rational coefficients, stored in
// ascending degree order and always trimmed (no zero leading coefficient).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "petersen/integer.hpp"

namespace petersen {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<long> ascending) {
        for (long c : ascending) c_.emplace_back(c);
        trim();
    }
    explicit Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
    explicit Poly(const std::vector<Integer>& ascending) {
        c_.reserve(ascending.size());
        for (const auto& c : ascending) c_.emplace_back(c);
        trim();
    }

    static Poly constant(const Rational& value) { return Poly(std::vector<Rational>{value}); }
    static Poly one() { return constant(1); }
    static Poly x() { return monomial(1); }
    static Poly monomial(int degree, const Rational& coeff = 1) {
        std::vector<Rational> c(std::size_t(degree) + 1);
        c[std::size_t(degree)] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[std::size_t(i)] : Rational(0); }
    const Rational& operator[](int i) const { return c_[std::size_t(i)]; }
    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.get_den() == 1; });
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly out = *this;
        Rational lead = c_.back();
        for (auto& c : out.c_) c /= lead;
        return out;
    }

    std::vector<Integer> integer_coefficients() const {
        std::vector<Integer> out;
        out.reserve(c_.size());
        for (const auto& c : c_) {
            if (c.get_den() != 1) throw std::domain_error("polynomial has non-integer coefficients");
            out.push_back(c.get_num());
        }
        return out;
    }

    // Scaled to integer coefficients with content 1 and positive leading coefficient.
    std::vector<Integer> primitive_integer_form() const {
        if (is_zero()) return {};
        Integer den_lcm = 1;
        for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Integer> out;
        out.reserve(c_.size());
        Integer content = 0;
        for (const auto& c : c_) {
            Integer v = c.get_num() * (den_lcm / c.get_den());
            out.push_back(v);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
        if (sgn(out.back()) < 0) content = -content;
        for (auto& v : out) v /= content;
        return out;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(int e) const {
        Poly out = one();
        for (int i = 0; i < e; ++i) out *= *this;
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Quotient and remainder with deg(remainder) < deg(divisor).
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quot(std::size_t(a.degree() - b.degree()) + 1);
    const Rational& lead = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Rational factor = rem[std::size_t(i)] / lead;
        if (sgn(factor) == 0) continue;
        int shift = i - b.degree();
        quot[std::size_t(shift)] = factor;
        for (int j = 0; j <= b.degree(); ++j) rem[std::size_t(shift + j)] -= factor * b[j];
    }
    rem.resize(std::size_t(b.degree()));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline bool divides(const Poly& d, const Poly& p) { return poly_divmod(p, d).second.is_zero(); }

namespace detail {

using IntPoly = std::vector<Integer>;  // ascending, trimmed

inline void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline void make_primitive(IntPoly& p) {
    trim(p);
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(p.back()) < 0) g = -g;
    for (auto& c : p) c /= g;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, over the integers.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        Integer la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

}  // namespace detail

// Monic gcd via the primitive polynomial remainder sequence.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: both arguments are zero");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    detail::IntPoly x = a.primitive_integer_form();
    detail::IntPoly y = b.primitive_integer_form();
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        detail::IntPoly r = detail::pseudo_remainder(x, y);
        detail::make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    return Poly(x).monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return poly_divmod(a * b, poly_gcd(a, b)).first.monic();
}

// Removes the largest power of x dividing p and normalizes to monic.
inline Poly strip_x_power(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("strip_x_power: zero polynomial");
    const auto& c = p.coefficients();
    std::size_t low = 0;
    while (sgn(c[low]) == 0) ++low;
    return Poly(std::vector<Rational>(c.begin() + long(low), c.end())).monic();
}

inline int x_power_exponent(const Poly& p) {
    int e = 0;
    while (e <= p.degree() && sgn(p[e]) == 0) ++e;
    return e;
}

// Comma-separated coefficients in ascending degree, e.g. "-1,-1,0,-1,0,0,1".
inline std::string format_coefficients(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ',';
        out += to_decimal(p[i]);
    }
    return out;
}

inline Poly parse_coefficients(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t\r\n");
        auto e = item.find_last_not_of(" \t\r\n");
        if (b == std::string::npos) throw std::invalid_argument("empty coefficient in '" + text + "'");
        Rational value;
        if (value.set_str(item.substr(b, e - b + 1), 10) != 0)
            throw std::invalid_argument("bad coefficient '" + item + "'");
        value.canonicalize();
        c.push_back(value);
    }
    return Poly(std::move(c));
}

// Human-readable form, highest degree first: "x^6 - x^3 - x - 1".
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p[i];
        if (sgn(c) == 0) continue;
        bool negative = sgn(c) < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        bool unit = mag == 1;
        if (!unit || i == 0) out += to_decimal(mag);
        if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

}  // namespace petersen
