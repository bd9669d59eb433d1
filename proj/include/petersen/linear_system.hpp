#pragma once

// Sparse square 0/1 transition systems  state_n = M * state_{n-1},  their
// minimal polynomials, and recurrence checks on integer sequences.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "petersen/berlekamp_massey.hpp"
#include "petersen/integer.hpp"
#include "petersen/poly.hpp"
#include "petersen/scc.hpp"

namespace petersen {

struct LinearSystem {
    // rows[i] lists the columns j with M[i][j] = 1, i.e. the predecessors of node i.
    std::vector<std::vector<std::uint32_t>> rows;

    std::size_t dimension() const { return rows.size(); }

    static LinearSystem identity(std::size_t n) {
        LinearSystem m;
        m.rows.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) m.rows[i] = {i};
        return m;
    }
    static LinearSystem zero(std::size_t n) {
        LinearSystem m;
        m.rows.resize(n);
        return m;
    }
    // Transition matrix of a digraph given by successor lists (arc u -> v adds u to row v).
    static LinearSystem from_successors(const AdjacencyList& succ) {
        LinearSystem m;
        m.rows.resize(succ.size());
        for (std::uint32_t u = 0; u < succ.size(); ++u)
            for (auto v : succ[u]) m.rows[v].push_back(u);
        return m;
    }

    template <class T>
    std::vector<T> apply(const std::vector<T>& x) const {
        std::vector<T> y(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (auto j : rows[i]) y[i] += x[j];
        return y;
    }
};

// sum_i p_i M^i x, by Horner's rule. Requires integer coefficients.
inline std::vector<Integer> apply_poly(const LinearSystem& m, const Poly& p, const std::vector<Integer>& x) {
    std::vector<Integer> acc(x.size());
    if (p.is_zero()) return acc;
    auto coeffs = p.integer_coefficients();
    for (int i = p.degree(); i >= 0; --i) {
        acc = m.apply(acc);
        Integer c = coeffs[std::size_t(i)];
        if (sgn(c) != 0)
            for (std::size_t j = 0; j < x.size(); ++j) acc[j] += c * x[j];
    }
    return acc;
}

inline bool is_zero_vector(const std::vector<Integer>& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

// Exact check that p(M) is the zero matrix, column by column.
inline bool annihilates(const LinearSystem& m, const Poly& p) {
    Poly q = Poly(p.primitive_integer_form());
    const std::size_t n = m.dimension();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Integer> e(n);
        e[j] = 1;
        if (!is_zero_vector(apply_poly(m, q, e))) return false;
    }
    return true;
}

// Minimal polynomial of M over the rationals. Each Berlekamp–Massey run on a
// scalar projection u^T M^t v returns a divisor of the minimal polynomial; the
// LCM of such divisors is accepted once p(M) = 0 is confirmed exactly.
inline Poly matrix_minpoly(const LinearSystem& m, std::uint64_t seed = 1, int max_draws = 32) {
    const std::size_t n = m.dimension();
    if (n == 0) return Poly::one();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(-9, 9);
    Poly candidate = Poly::one();
    for (int draw = 0; draw < max_draws; ++draw) {
        std::vector<Integer> u(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = weight(rng);
            v[i] = weight(rng);
        }
        std::vector<Rational> seq;
        seq.reserve(2 * n + 2);
        for (std::size_t t = 0; t < 2 * n + 2; ++t) {
            Integer dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i];
            seq.emplace_back(dot);
            v = m.apply(v);
        }
        Poly p = berlekamp_massey(std::span<const Rational>(seq));
        Poly next = poly_lcm(candidate, p);
        bool grew = next.degree() > candidate.degree();
        candidate = next;
        if ((grew || draw == 0) && annihilates(m, candidate)) return candidate;
    }
    throw std::runtime_error("matrix_minpoly: no annihilator found after " + std::to_string(max_draws) + " draws");
}

// An integer sequence with an index offset: values[i] is the term at index first + i.
struct IndexedSequence {
    long first = 0;
    std::vector<Integer> values;

    long last() const { return first + long(values.size()) - 1; }
    const Integer& at(long index) const {
        if (index < first || index > last()) throw std::out_of_range("sequence index " + std::to_string(index));
        return values[std::size_t(index - first)];
    }
};

// Value of sum_i p_i s(n - d + i), with d = deg p.
inline Rational recurrence_residual(const Poly& p, const IndexedSequence& s, long n) {
    Rational r = 0;
    const int d = p.degree();
    for (int i = 0; i <= d; ++i)
        if (sgn(p[i]) != 0) r += p[i] * s.at(n - d + i);
    return r;
}

// True iff the recurrence with characteristic polynomial p holds at every index
// from from_index through the end of the sequence.
inline bool check_recurrence(const Poly& p, const IndexedSequence& s, long from_index) {
    if (p.is_zero()) throw std::invalid_argument("check_recurrence: zero polynomial");
    if (from_index - p.degree() < s.first || from_index > s.last())
        throw std::invalid_argument("check_recurrence: insufficient terms");
    for (long n = from_index; n <= s.last(); ++n)
        if (sgn(recurrence_residual(p, s, n)) != 0) return false;
    return true;
}

// Smallest index from which p holds through the end of the sequence, or -1.
inline long recurrence_start(const Poly& p, const IndexedSequence& s) {
    long start = s.last() + 1;
    for (long n = s.last(); n >= s.first + p.degree(); --n) {
        if (sgn(recurrence_residual(p, s, n)) != 0) break;
        start = n;
    }
    return start > s.last() ? -1 : start;
}

}  // namespace petersen
