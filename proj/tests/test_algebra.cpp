#include <gtest/gtest.h>

#include <random>

#include "petersen/berlekamp_massey.hpp"
#include "petersen/digraph_isomorphism.hpp"
#include "petersen/linear_system.hpp"
#include "petersen/poly.hpp"
#include "petersen/scc.hpp"

namespace {

using namespace petersen;

Poly random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> c(-9, 9);
    std::vector<Integer> coeffs;
    for (int i = 0; i < degree; ++i) coeffs.emplace_back(c(rng));
    coeffs.emplace_back(1);
    return Poly(coeffs);
}

TEST(Poly, ArithmeticAndPrinting) {
    Poly a{-1, 1};  // x - 1
    Poly b{1, 1, 1, 1, 1};
    EXPECT_EQ(a * b, Poly::monomial(5) - Poly::one());
    EXPECT_EQ(to_string(Poly{-1, -1, 0, -1, 0, 0, 1}), "x^6 - x^3 - x - 1");
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_TRUE(Poly().is_zero());
    EXPECT_EQ((Poly{2, 3}.pow(2)), (Poly{4, 12, 9}));
}

TEST(Poly, DivmodIdentity) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Poly a = random_poly(rng, 3 + t % 7);
        Poly b = random_poly(rng, 1 + t % 4);
        auto [q, r] = poly_divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(poly_divmod(Poly{1, 1}, Poly()), std::domain_error);
}

TEST(Poly, GcdAndLcmOfConstructedProducts) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Poly g = random_poly(rng, 1 + t % 3);
        Poly u = random_poly(rng, 2), v = random_poly(rng, 3);
        if (poly_gcd(u, v).degree() > 0) continue;
        Poly a = g * u, b = g * v;
        EXPECT_EQ(poly_gcd(a, b), g.monic());
        Poly l = poly_lcm(a, b);
        EXPECT_TRUE(divides(a, l));
        EXPECT_TRUE(divides(b, l));
        EXPECT_EQ(l.degree(), a.degree() + b.degree() - g.degree());
    }
}

TEST(Poly, StripXPower) {
    Poly p = Poly::monomial(4) * Poly{-1, -1, 0, -1, 0, 0, 1};
    EXPECT_EQ(x_power_exponent(p), 4);
    EXPECT_EQ(strip_x_power(p), (Poly{-1, -1, 0, -1, 0, 0, 1}));
    EXPECT_EQ(strip_x_power(Poly::monomial(3)), Poly::one());
}

TEST(Poly, CoefficientRoundTrip) {
    Poly p{1, 1, 0, 1, 0, -1, -2, 0, -1, 0, 0, 1};
    EXPECT_EQ(format_coefficients(p), "1,1,0,1,0,-1,-2,0,-1,0,0,1");
    EXPECT_EQ(parse_coefficients(format_coefficients(p)), p);
    EXPECT_THROW(parse_coefficients("1,x"), std::invalid_argument);
    std::vector<Rational> half{Rational(1, 2), Rational(1)};
    EXPECT_THROW(Poly(half).integer_coefficients(), std::domain_error);
}

TEST(BerlekampMassey, Fibonacci) {
    std::vector<Integer> f{0, 1};
    for (int i = 0; i < 20; ++i) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    EXPECT_EQ(berlekamp_massey(f), (Poly{-1, -1, 1}));
}

TEST(BerlekampMassey, Geometric) {
    EXPECT_EQ(berlekamp_massey(std::vector<Integer>{1, 2, 4, 8, 16, 32}), (Poly{-2, 1}));
}

TEST(BerlekampMassey, TransientBecomesXPower) {
    // 5 then the period-3 sequence 1,2,3,...: annihilated by x(x^3 - 1).
    std::vector<Integer> s{5};
    for (int i = 0; i < 20; ++i) s.emplace_back(1 + i % 3);
    Poly p = berlekamp_massey(s);
    EXPECT_EQ(strip_x_power(p), (Poly{-1, 0, 0, 1}));
    EXPECT_EQ(x_power_exponent(p), 1);
}

TEST(BerlekampMassey, RecoversRandomRecurrence) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        Poly p = random_poly(rng, 2 + t);
        if (sgn(p[0]) == 0) continue;
        auto c = p.integer_coefficients();
        int d = p.degree();
        std::vector<Integer> s;
        for (int i = 0; i < d; ++i) s.emplace_back(long(rng() % 21) - 10);
        while (int(s.size()) < 4 * d + 8) {
            Integer next = 0;
            for (int i = 0; i < d; ++i) next -= c[std::size_t(i)] * s[s.size() - std::size_t(d) + std::size_t(i)];
            s.push_back(next);
        }
        Poly found = berlekamp_massey(s);
        EXPECT_TRUE(divides(found, p));
        IndexedSequence seq{0, s};
        EXPECT_TRUE(check_recurrence(found, seq, found.degree()));
    }
}

TEST(LinearSystem, MinimalPolynomials) {
    EXPECT_EQ(matrix_minpoly(LinearSystem::identity(4)), (Poly{-1, 1}));
    EXPECT_EQ(matrix_minpoly(LinearSystem::zero(1)), Poly::x());
    AdjacencyList cycle{{1}, {2}, {0}};
    EXPECT_EQ(matrix_minpoly(LinearSystem::from_successors(cycle)), (Poly{-1, 0, 0, 1}));
    AdjacencyList path{{1}, {2}, {}};
    EXPECT_EQ(matrix_minpoly(LinearSystem::from_successors(path)), Poly::monomial(3));
}

TEST(LinearSystem, ApplyFollowsPredecessors) {
    AdjacencyList succ{{1, 2}, {2}, {}};
    auto m = LinearSystem::from_successors(succ);
    std::vector<Integer> x{1, 10, 100};
    auto y = m.apply(x);
    EXPECT_EQ(y, (std::vector<Integer>{0, 1, 11}));
    EXPECT_TRUE(annihilates(m, Poly::monomial(3)));
    EXPECT_FALSE(annihilates(m, Poly::monomial(2)));
}

TEST(Recurrences, StartIndexAndChecks) {
    // 7, then 2^n: x - 2 holds from index 2.
    IndexedSequence s{0, {7, 2, 4, 8, 16, 32}};
    EXPECT_EQ(recurrence_start(Poly{-2, 1}, s), 2);
    EXPECT_TRUE(check_recurrence(Poly{-2, 1}, s, 2));
    EXPECT_FALSE(check_recurrence(Poly{-2, 1}, s, 1));
    EXPECT_THROW(check_recurrence(Poly{-2, 1}, s, 0), std::invalid_argument);
    EXPECT_THROW(s.at(6), std::out_of_range);
}

TEST(Scc, TopologicalComponents) {
    // 0 -> 1 <-> 2 -> 3 (self-loop), 4 isolated
    AdjacencyList g{{1}, {2}, {1, 3}, {3}, {}};
    auto d = scc_decompose(g);
    ASSERT_EQ(d.size(), 4u);
    EXPECT_EQ(d.component_of[1], d.component_of[2]);
    EXPECT_LT(d.component_of[0], d.component_of[1]);
    EXPECT_LT(d.component_of[1], d.component_of[3]);
    EXPECT_TRUE(d.has_self_loop[d.component_of[3]]);
    EXPECT_TRUE(d.is_trivial(d.component_of[0]));
    auto up = ancestors_of(g, {3});
    EXPECT_EQ(up, (std::vector<bool>{true, true, true, true, false}));
}

TEST(Isomorphism, RelabeledGraphsMatch) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const std::uint32_t n = 12;
        AdjacencyList g(n);
        for (std::uint32_t v = 0; v < n; ++v)
            for (std::uint32_t w = 0; w < n; ++w)
                if (rng() % 5 == 0) g[v].push_back(w);
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        AdjacencyList h(n);
        for (std::uint32_t v = 0; v < n; ++v)
            for (auto w : g[v]) h[perm[v]].push_back(perm[w]);
        auto f = find_isomorphism(g, h);
        ASSERT_TRUE(f.has_value());
        for (std::uint32_t v = 0; v < n; ++v)
            for (auto w : g[v]) EXPECT_NE(std::find(h[(*f)[v]].begin(), h[(*f)[v]].end(), (*f)[w]), h[(*f)[v]].end());
    }
}

TEST(Isomorphism, DistinguishesDirection) {
    AdjacencyList out_star{{1, 2}, {}, {}};
    AdjacencyList in_star{{}, {0}, {0}};
    AdjacencyList path{{1}, {2}, {}};
    EXPECT_FALSE(isomorphic(out_star, in_star));
    EXPECT_FALSE(isomorphic(out_star, path));
    EXPECT_TRUE(isomorphic(in_star, AdjacencyList{{2}, {2}, {}}));
    // Same degree sequences, different structure: two 3-cycles vs one 6-cycle.
    AdjacencyList two{{1}, {2}, {0}, {4}, {5}, {3}};
    AdjacencyList one{{1}, {2}, {3}, {4}, {5}, {0}};
    EXPECT_FALSE(isomorphic(two, one));
}

}  // namespace
