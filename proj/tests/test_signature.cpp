#include <gtest/gtest.h>

#include <set>

#include "petersen/admissible.hpp"
#include "petersen/graph.hpp"
#include "petersen/signature.hpp"

namespace {

using namespace petersen;

// Window edge masks realized by admissible subgraphs of G'(n,k), read on the
// right side and (mirrored) on the left side.
std::pair<std::set<std::uint32_t>, std::set<std::uint32_t>> realized_masks(int n, int k) {
    FramedGraph g = build_framed(n, k);
    FrameSides sides(g);
    std::set<std::uint32_t> right, left;
    for_each_admissible_subgraph(g, [&](const std::vector<Edge>& chosen, bool) {
        std::uint32_t r = 0, l = 0;
        for (const auto& e : chosen) {
            if (int b = sides.right_bit(e); b >= 0) r |= 1u << b;
            if (int b = sides.left_bit(e); b >= 0) l |= 1u << b;
        }
        right.insert(r);
        left.insert(l);
    });
    return {right, left};
}

TEST(SideCatalog, KnownSizes) {
    // k=1: the spoke is either used (2 x 2 choices at its ends) or not (1 way).
    EXPECT_EQ(enumerate_side_intersections(1).size(), 5u);
    EXPECT_EQ(enumerate_side_intersections(3).size(), 33u);
    EXPECT_EQ(enumerate_side_intersections(4).size(), 85u);
}

TEST(SideCatalog, EqualsRestrictionsOfAdmissibleSubgraphs) {
    for (int k = 1; k <= 3; ++k) {
        SideCatalog catalog(k);
        std::set<std::uint32_t> masks;
        for (const auto& s : catalog.sides()) masks.insert(s.edge_mask);
        auto [right, left] = realized_masks(3 * k + 2, k);
        EXPECT_EQ(right, masks) << "k=" << k;
        EXPECT_EQ(left, masks) << "k=" << k;
    }
}

TEST(SideCatalog, FindRoundTrips) {
    SideCatalog catalog(3);
    for (std::size_t id = 0; id < catalog.size(); ++id) EXPECT_EQ(catalog.find(catalog[id].edge_mask), int(id));
    EXPECT_EQ(catalog.find(0), -1);
}

TEST(SideCatalog, ForcedPairsAreLoose) {
    SideCatalog catalog(4);
    for (const auto& s : catalog.sides()) {
        for (auto [a, b] : s.forced_pairs) {
            EXPECT_TRUE(s.is_loose(a));
            EXPECT_TRUE(s.is_loose(b));
            EXPECT_TRUE(s.forced(a, b));
        }
        // Every path has two ends, each a loose stub or an open attachment.
        EXPECT_EQ((s.loose_count() + int(s.open_ends.size())) % 2, 0);
        EXPECT_GE(s.loose_count(), int(2 * s.forced_pairs.size()));
    }
}

TEST(SignatureCatalog, KnownSizes) {
    EXPECT_EQ(enumerate_signatures(3).size(), 1705u);
    EXPECT_EQ(enumerate_signatures(4).size(), 25675u);
}

TEST(SignatureCatalog, PairingsCoverExactlyTheLooseEnds) {
    SignatureCatalog catalog(3);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& sig = catalog[i];
        EXPECT_EQ(sig.pairing.end_count(), catalog.loose_count_left(i) + catalog.loose_count_right(i));
        for (int label : side_end_labels(catalog.sides()[sig.left], true)) EXPECT_TRUE(sig.pairing.contains(label));
        for (int label : side_end_labels(catalog.sides()[sig.right], false)) EXPECT_TRUE(sig.pairing.contains(label));
        EXPECT_EQ(catalog.find(sig), long(i));
    }
}

TEST(SignatureCatalog, EveryAdmissibleSubgraphHasACatalogSignature) {
    for (int k = 1; k <= 3; ++k) {
        SignatureCatalog catalog(k);
        FramedGraph g = build_framed(3 * k + 1, k);
        FrameSides sides(g);
        std::size_t seen = 0;
        for_each_admissible_subgraph(g, [&](const std::vector<Edge>& chosen, bool) {
            Signature sig = signature_of(g, sides, catalog.sides(), chosen);
            EXPECT_GE(catalog.find(sig), 0) << catalog.describe(sig);
            ++seen;
        });
        EXPECT_GT(seen, 0u);
    }
}

Pairing pairing(std::initializer_list<std::pair<int, int>> pairs) {
    Pairing p;
    for (auto [a, b] : pairs) p.join(a, b);
    return p;
}

TEST(Hamiltonicity, Examples) {
    const int L0 = left_end(0), L1 = left_end(1), L2 = left_end(2);
    const int R0 = right_end(0), R1 = right_end(1), R2 = right_end(2);
    EXPECT_TRUE(is_hamiltonian_signature(Signature{0, 0, Pairing{}}));
    EXPECT_TRUE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, R0}})}));
    EXPECT_TRUE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, L1}, {R0, R1}})}));
    EXPECT_TRUE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, R1}, {L1, R0}})}));
    EXPECT_FALSE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, R0}, {L1, R1}})}));
    EXPECT_FALSE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, L1}})}));
    EXPECT_FALSE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, L1}, {R0, R2}})}));
    EXPECT_TRUE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, R1}, {L1, L2}, {R2, R0}})}));
    EXPECT_FALSE(is_hamiltonian_signature(Signature{0, 0, pairing({{L0, L1}, {R0, R1}, {L2, R2}})}));
}

TEST(Hamiltonicity, GluingTheSeamMatchesTheOracle) {
    // Summing admissible subgraphs of G'(n,k) whose signature is Hamiltonian
    // must give the number of Hamiltonian cycles of G(n,k).
    for (int k = 1; k <= 3; ++k) {
        SignatureCatalog catalog(k);
        for (int n = 3 * k; n <= 3 * k + 3; ++n) {
            StateVector s = tally_signatures(catalog, n);
            Integer h = 0;
            for (std::size_t i = 0; i < catalog.size(); ++i)
                if (is_hamiltonian_signature(catalog[i])) h += s[i];
            EXPECT_EQ(h, Integer(static_cast<unsigned long>(count_ham_cycles_oracle(n, k)))) << "n=" << n << " k=" << k;
        }
    }
}

}  // namespace
