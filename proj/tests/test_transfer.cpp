#include <gtest/gtest.h>

#include <random>

#include "petersen/counts.hpp"
#include "petersen/graph.hpp"
#include "petersen/transfer.hpp"

namespace {

using namespace petersen;

StateVector random_state(std::size_t size, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> value(-1000, 1000);
    StateVector s;
    s.n = n;
    for (std::size_t i = 0; i < size; ++i) s.values.emplace_back(value(rng));
    return s;
}

TEST(Transfer, StepMatchesDirectEnumeration) {
    for (int k = 1; k <= 3; ++k) {
        SignatureCatalog catalog(k);
        SigmaGraph sigma(catalog);
        StateVector s = initial_state(catalog);
        for (int n = 3 * k + 1; n <= 3 * k + 3; ++n) {
            s = step(s, sigma);
            EXPECT_EQ(s, tally_signatures(catalog, n)) << "k=" << k << " n=" << n;
        }
    }
}

TEST(Transfer, StepIsLinear) {
    SignatureCatalog catalog(3);
    SigmaGraph sigma(catalog);
    std::mt19937_64 rng(7);
    auto a = random_state(catalog.size(), 9, rng);
    auto b = random_state(catalog.size(), 9, rng);
    StateVector sum = a;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = 3 * a[i] - b[i];
    auto sa = step(a, sigma), sb = step(b, sigma), ss = step(sum, sigma);
    for (std::size_t i = 0; i < ss.size(); ++i) EXPECT_EQ(ss[i], 3 * sa[i] - sb[i]);
}

TEST(Transfer, ThreadedStepMatchesSerial) {
    TransferPipeline p(4);
    std::mt19937_64 rng(11);
    auto s = random_state(p.catalog().size(), 12, rng);
    EXPECT_EQ(step(s, p.sigma(), 1), step(s, p.sigma(), 4));
}

TEST(Transfer, ArcsPreserveTheLeftSide) {
    for (int k = 2; k <= 4; ++k) {
        SignatureCatalog catalog(k);
        SigmaGraph sigma(catalog);
        for (const auto& arc : sigma.arcs()) EXPECT_EQ(catalog[arc.from].left, catalog[arc.to].left);
    }
}

TEST(Transfer, AdjacencyViewsAgreeWithArcList) {
    SignatureCatalog catalog(3);
    SigmaGraph sigma(catalog);
    std::size_t out = 0, in = 0;
    for (std::size_t v = 0; v < sigma.node_count(); ++v) {
        out += sigma.successors(v).size();
        in += sigma.predecessors(v).size();
        for (auto w : sigma.successors(v)) {
            auto preds = sigma.predecessors(w);
            EXPECT_NE(std::find(preds.begin(), preds.end(), std::uint32_t(v)), preds.end());
        }
    }
    EXPECT_EQ(out, sigma.arcs().size());
    EXPECT_EQ(in, sigma.arcs().size());
    EXPECT_LE(out, 5 * sigma.node_count());
}

TEST(Transfer, PredecessorsAreDistinct) {
    for (int k = 2; k <= 4; ++k) {
        SignatureCatalog catalog(k);
        SigmaGraph sigma(catalog);
        for (std::size_t v = 0; v < sigma.node_count(); ++v) {
            std::vector<std::uint32_t> preds(sigma.predecessors(v).begin(), sigma.predecessors(v).end());
            std::sort(preds.begin(), preds.end());
            EXPECT_EQ(std::adjacent_find(preds.begin(), preds.end()), preds.end()) << "k=" << k << " v=" << v;
        }
    }
}

TEST(Transfer, InitialStateOfKThreeSumsToNine) {
    TransferPipeline p(3);
    EXPECT_EQ(p.initial().n, 9);
    EXPECT_EQ(p.hamiltonian_sum(p.initial()), 9);
}

TEST(Transfer, StepRejectsSizeMismatch) {
    SignatureCatalog catalog(2);
    SigmaGraph sigma(catalog);
    StateVector s;
    s.values.resize(3);
    EXPECT_THROW(step(s, sigma), std::invalid_argument);
}

TEST(Counts, PipelineMatchesOracle) {
    for (int k = 1; k <= 4; ++k) {
        TransferPipeline p(k);
        int n_max = std::min(16, 3 * k + 8);
        CountSeries s = hamiltonian_counts(p, n_max);
        ASSERT_EQ(s.first_n, 3 * k);
        ASSERT_EQ(s.last_n(), n_max);
        for (int n = std::max(3 * k, 2 * k + 1); n <= n_max; ++n)
            EXPECT_EQ(s.at(n), Integer(static_cast<unsigned long>(count_ham_cycles_oracle(n, k))))
                << "n=" << n << " k=" << k;
    }
}

TEST(Counts, ParitySplitSumsToTotal) {
    TransferPipeline p(3);
    CountSeries s = parity_split_counts(p, 40);
    ASSERT_TRUE(s.has_parity());
    for (std::size_t i = 0; i < s.h.size(); ++i) {
        EXPECT_EQ(s.h_even[i] + s.h_odd[i], s.h[i]);
        EXPECT_GE(s.h_even[i], 0);
        EXPECT_GE(s.h_odd[i], 0);
    }
}

TEST(Counts, StateStaysNonNegative) {
    TransferPipeline p(3);
    StateVector s = p.initial();
    for (int i = 0; i < 30; ++i) {
        s = step(s, p.sigma());
        for (const auto& v : s.values) ASSERT_GE(v, 0);
    }
}

TEST(Counts, RejectsShortRange) {
    TransferPipeline p(3);
    EXPECT_THROW(hamiltonian_counts(p, 8), std::invalid_argument);
}

TEST(Counts, PrefixJoinsSmallN) {
    TransferPipeline p(2);
    CountSeries tail = hamiltonian_counts(p, 10);
    std::vector<Integer> prefix;
    for (int n = 1; n < 6; ++n) prefix.emplace_back(n);
    CountSeries full = with_prefix(tail, prefix);
    EXPECT_EQ(full.first_n, 1);
    EXPECT_EQ(full.at(3), 3);
    EXPECT_EQ(full.at(10), tail.at(10));
    EXPECT_THROW(with_prefix(tail, {Integer(1)}), std::invalid_argument);
}

}  // namespace
