#include <gtest/gtest.h>

#include <random>

#include "petersen/golden.hpp"
#include "petersen/recurrence_lab.hpp"

namespace {

using namespace petersen;

// Values of node v over time by plain iteration of u_{n+1}(w) = sum over arcs u->w of u_n(u).
std::vector<Integer> iterate_node(const AdjacencyList& succ, std::vector<Integer> x, std::uint32_t v, int steps) {
    auto m = LinearSystem::from_successors(succ);
    std::vector<Integer> out;
    for (int t = 0; t < steps; ++t) {
        out.push_back(x[v]);
        x = m.apply(x);
    }
    return out;
}

// Random digraph made of a few small strongly connected blocks chained by forward arcs.
AdjacencyList random_layered(std::mt19937_64& rng, std::size_t blocks) {
    AdjacencyList g;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges;
    for (std::size_t b = 0; b < blocks; ++b) {
        std::uint32_t begin = std::uint32_t(g.size());
        std::uint32_t size = 1 + std::uint32_t(rng() % 4);
        g.resize(g.size() + size);
        for (std::uint32_t i = 0; i < size; ++i) {
            if (size > 1) g[begin + i].push_back(begin + (i + 1) % size);
            for (std::uint32_t j = 0; j < size; ++j)
                if (rng() % 4 == 0) g[begin + i].push_back(begin + j);
        }
        ranges.emplace_back(begin, begin + size);
    }
    for (std::size_t a = 0; a < blocks; ++a)
        for (std::size_t b = a + 1; b < blocks; ++b)
            if (rng() % 2 == 0) g[ranges[a].first].push_back(ranges[b].first + std::uint32_t(rng() % (ranges[b].second - ranges[b].first)));
    for (auto& out : g) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return g;
}

TEST(Algorithm1, SelfLoopChain) {
    // 0 (loop) -> 1 (loop): u(1) = n + c grows linearly, so (x-1)^2.
    AdjacencyList g{{0, 1}, {1}};
    auto r = algorithm1(g, {1, 0}, {1});
    EXPECT_EQ(r.polynomial, (Poly{1, -2, 1}));
}

TEST(Algorithm1, ZeroInitialGivesOne) {
    AdjacencyList g{{0, 1}, {1}};
    EXPECT_EQ(algorithm1(g, {0, 0}, {1}).polynomial, Poly::one());
}

TEST(Algorithm1, VanishingSourceIsDropped) {
    // Source 0 has no self-loop; after one step the 3-cycle carries a periodic sequence.
    AdjacencyList g{{1}, {2}, {3}, {1}};
    auto r = algorithm1(g, {5, 0, 0, 0}, {3});
    EXPECT_EQ(r.polynomial, (Poly{-1, 0, 0, 1}));
}

TEST(Algorithm1, AnnihilatesIteratedSequences) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        AdjacencyList g = random_layered(rng, 2 + std::size_t(t % 4));
        std::vector<Integer> x(g.size());
        for (auto& v : x) v = long(rng() % 7) - 3;
        std::uint32_t target = std::uint32_t(g.size() - 1);
        auto r = algorithm1(g, x, {target});
        auto s = iterate_node(g, x, target, int(3 * g.size() + 2 * r.polynomial.degree() + 10));
        IndexedSequence seq{0, s};
        // Transients last at most one step per node.
        long from = long(g.size()) + r.polynomial.degree();
        EXPECT_TRUE(check_recurrence(r.polynomial, seq, from)) << "trial " << t;
        // The sequence's own minimal annihilator divides the result.
        Poly own = strip_x_power(berlekamp_massey(s));
        EXPECT_TRUE(divides(own, r.polynomial)) << "trial " << t << ": " << to_string(own) << " vs "
                                                << to_string(r.polynomial);
    }
}

TEST(SccClasses, GroupsIsomorphicComponents) {
    // Two 3-cycles, one 2-cycle, a lone node; arcs between them.
    AdjacencyList g{{1}, {2}, {0, 3}, {4}, {5}, {3, 6}, {7}, {6, 8}, {}};
    auto d = scc_decompose(g);
    auto report = classify_sccs(g, d);
    ASSERT_EQ(report.classes.size(), 3u);
    EXPECT_EQ(report.classes[0].size, 1u);
    EXPECT_EQ(report.classes[1].size, 2u);
    EXPECT_EQ(report.classes[2].size, 3u);
    EXPECT_EQ(report.classes[2].members.size(), 2u);
    EXPECT_EQ(report.classes[2].universal, (Poly{-1, 0, 0, 1}));
    EXPECT_EQ(report.classes[1].universal, (Poly{-1, 0, 1}));
    EXPECT_EQ(report.classes[0].universal, Poly::one());
}

TEST(SccClasses, ThirteenNodeClassOfSigma3MatchesRelationTable) {
    TransferPipeline p(3);
    auto succ = p.sigma().successor_lists();
    auto d = scc_decompose(succ);
    auto report = classify_sccs(succ, d);
    auto relations = golden::read_relations(golden::data_dir() / "xi4_relations.txt");
    const SccClass* thirteen = nullptr;
    for (const auto& c : report.classes)
        if (c.size == 13) thirteen = &c;
    ASSERT_NE(thirteen, nullptr);
    EXPECT_TRUE(isomorphic(component_graph(succ, d, thirteen->representative), relations));
    EXPECT_EQ(thirteen->universal, (Poly{-1, -1, 0, -1, 0, 0, 1}));
}

TEST(SccClasses, SingleSequencesDivideTheSystemPolynomial) {
    auto relations = golden::read_relations(golden::data_dir() / "xi4_relations.txt");
    Poly system = matrix_minpoly(LinearSystem::from_successors(relations));
    for (std::uint32_t start = 0; start < relations.size(); ++start) {
        std::vector<Integer> x(relations.size());
        x[start] = 1;
        for (std::uint32_t v = 0; v < relations.size(); ++v) {
            Poly own = berlekamp_massey(iterate_node(relations, x, v, 80));
            EXPECT_TRUE(divides(own, system)) << "start " << start << " node " << v;
        }
    }
}

// Nonnegative states on a strongly connected component that is not a lone
// loopless node never become zero, so "zero now" and "eventually zero" agree.
TEST(SccClasses, NonNegativeStatesInNontrivialComponentsStayNonZero) {
    std::mt19937_64 rng(31);
    for (int k = 3; k <= 4; ++k) {
        TransferPipeline p(k);
        auto succ = p.sigma().successor_lists();
        auto d = scc_decompose(succ);
        auto report = classify_sccs(succ, d);
        for (const auto& c : report.classes) {
            if (c.size == 1 && !c.self_loop) continue;
            auto g = component_graph(succ, d, c.representative);
            auto m = LinearSystem::from_successors(g);
            std::vector<Integer> x(g.size());
            x[rng() % g.size()] = 1;
            for (std::size_t t = 0; t < 2 * g.size(); ++t) {
                x = m.apply(x);
                ASSERT_FALSE(is_zero_vector(x)) << "k=" << k << " class " << c.label;
            }
        }
    }
}

TEST(MinimalCharpoly, SmallKAgreesWithCounts) {
    TransferPipeline p(2);
    auto m = minimal_charpoly_on_initial(p.sigma(), p.initial(), int(p.catalog().size()));
    ASSERT_TRUE(m.verified);
    EXPECT_TRUE(is_zero_vector(residual_vector(p.sigma(), p.initial(), m.polynomial)));
    CountSeries s = hamiltonian_counts(p, p.n0() + 2 * m.polynomial.degree() + 20);
    auto h = h_annihilator(s.sequence());
    EXPECT_TRUE(divides(strip_x_power(h.polynomial), m.stripped));
    EXPECT_TRUE(check_recurrence(m.polynomial, s.sequence(), m.valid_from));
    // Removing a factor x - 1, when present, must break the residual check.
    if (m.stripped.degree() > 0) {
        Poly smaller = poly_divmod(m.polynomial, Poly{-1, 1}).first;
        if (divides(Poly{-1, 1}, m.polynomial))
            EXPECT_FALSE(is_zero_vector(residual_vector(p.sigma(), p.initial(), smaller)));
    }
}

TEST(MinimalCharpoly, AlgorithmOneIsAMultiple) {
    TransferPipeline p(3);
    auto succ = p.sigma().successor_lists();
    auto d = scc_decompose(succ);
    auto report = classify_sccs(succ, d);
    auto a1 = algorithm1(succ, d, report.universal_per_component(), p.initial().values);
    auto m = minimal_charpoly_on_initial(p.sigma(), p.initial(), a1.polynomial.degree() + 16);
    EXPECT_TRUE(divides(m.stripped, a1.polynomial));
    EXPECT_EQ(m.stripped.degree(), 38);
}

TEST(Inhomogeneous, PeriodicRightHandSide) {
    // s(n) = n satisfies s(n) - s(n-1) = 1.
    IndexedSequence s{0, {}};
    for (long n = 0; n < 20; ++n) s.values.emplace_back(n);
    PeriodicTerm one{{1}};
    EXPECT_TRUE(check_inhomogeneous(Poly{-1, 1}, s, one, 1, 19));
    PeriodicTerm alternating{{1, 0}};
    EXPECT_FALSE(check_inhomogeneous(Poly{-1, 1}, s, alternating, 1, 19));
    EXPECT_EQ((PeriodicTerm{{5, 6, 7}}.at(-1)), 7);
}

TEST(HAnnihilator, RejectsShortSeries) {
    IndexedSequence s{1, {1, 2, 3, 5, 8}};
    EXPECT_THROW(h_annihilator(s), std::invalid_argument);
}

}  // namespace
