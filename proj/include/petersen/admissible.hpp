#pragma once

// Direct enumeration of admissible subgraphs of G'(n,k): every non-stub vertex
// has degree 2, and no cycle exists unless a single cycle is the whole subgraph.
// Each subgraph is reduced to its signature; the tally at n = 3k seeds the
// transfer iteration and the tally at n = 3k+1 cross-checks one transfer step.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "petersen/graph.hpp"
#include "petersen/signature.hpp"
#include "petersen/state_vector.hpp"

namespace petersen {

// Which window bit (if any) each framed-graph edge occupies on either side.
class FrameSides {
public:
    explicit FrameSides(const FramedGraph& g) : g_(g), layout_(g.k) {
        const int n = g.n;
        const int k = g.k;
        auto col_v = [&](int c) { return g.outer(n - k + c); };
        auto col_w = [&](int c) { return g.inner(n - k + c); };
        right_.emplace(Edge(g.outer(n - 1), g.right_stub(0)), layout_.stub_bit(0));
        for (int c = 0; c < k; ++c) {
            right_.emplace(Edge(col_w(c), g.right_stub(c + 1)), layout_.stub_bit(c + 1));
            right_.emplace(Edge(col_v(c), col_w(c)), layout_.spoke_bit(c));
            right_.emplace(Edge(g.outer(n - k + c - 1), col_v(c)), layout_.ring_bit(c));
            right_.emplace(Edge(g.inner(n - 2 * k + c), col_w(c)), layout_.chord_bit(c));
        }
    }

    int mirror(int x) const {
        const int n = g_.n;
        const int k = g_.k;
        if (x < n) return n - 1 - x;
        if (x < 2 * n) return n + (n - 1 - (x - n));
        if (x < 2 * n + k + 1) return g_.right_stub(layout_.mirror_stub(x - 2 * n));
        return g_.left_stub(layout_.mirror_stub(x - (2 * n + k + 1)));
    }

    int right_bit(const Edge& e) const {
        auto it = right_.find(e);
        return it == right_.end() ? -1 : it->second;
    }
    int left_bit(const Edge& e) const { return right_bit(Edge(mirror(e.a), mirror(e.b))); }

private:
    const FramedGraph& g_;
    WindowLayout layout_;
    std::map<Edge, int> right_;
};

// Calls visit(chosen_edges, closed) for every admissible subgraph of G'(n,k);
// closed is true when the subgraph is a single cycle through all 2n vertices.
inline void for_each_admissible_subgraph(const FramedGraph& g,
                                         const std::function<void(const std::vector<Edge>&, bool)>& visit) {
    const int internal = 2 * g.n;
    std::vector<Edge> edges = g.edges;
    auto column = [&](int x) {
        if (x >= 2 * g.n) return x < 2 * g.n + g.k + 1 ? -1 : g.n;
        return x % g.n;
    };
    std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
        auto key = [&](const Edge& e) {
            int lo = std::min(column(e.a), column(e.b));
            int hi = std::max(column(e.a), column(e.b));
            return std::pair{hi, lo};
        };
        return key(x) < key(y);
    });

    std::vector<int> pending(g.vertex_count(), 0);
    for (const auto& e : edges) {
        ++pending[e.a];
        ++pending[e.b];
    }
    std::vector<int> degree(g.vertex_count(), 0);
    std::vector<Edge> chosen;
    RollbackUnionFind uf(g.vertex_count());
    auto cap = [&](int x) { return g.is_stub(x) ? 1 : 2; };
    auto satisfiable = [&](int x) { return g.is_stub(x) || degree[x] + pending[x] >= 2; };

    std::function<void(std::size_t, bool)> search = [&](std::size_t idx, bool closed) {
        if (idx == edges.size()) {
            visit(chosen, closed);
            return;
        }
        const Edge e = edges[idx];
        --pending[e.a];
        --pending[e.b];
        if (!closed && degree[e.a] < cap(e.a) && degree[e.b] < cap(e.b)) {
            bool joined = uf.unite(e.a, e.b);
            if (joined || uf.component_size(e.a) == internal) {
                ++degree[e.a];
                ++degree[e.b];
                chosen.push_back(e);
                search(idx + 1, !joined);
                chosen.pop_back();
                --degree[e.a];
                --degree[e.b];
                if (joined) uf.undo();
            }
        }
        if (satisfiable(e.a) && satisfiable(e.b)) search(idx + 1, closed);
        ++pending[e.a];
        ++pending[e.b];
    };
    search(0, false);
}

// Signature of one admissible subgraph.
inline Signature signature_of(const FramedGraph& g, const FrameSides& sides, const SideCatalog& catalog,
                              const std::vector<Edge>& chosen) {
    std::uint32_t left_mask = 0;
    std::uint32_t right_mask = 0;
    RollbackUnionFind uf(g.vertex_count());
    for (const auto& e : chosen) {
        if (int bit = sides.left_bit(e); bit >= 0) left_mask |= 1u << bit;
        if (int bit = sides.right_bit(e); bit >= 0) right_mask |= 1u << bit;
        uf.unite(e.a, e.b);
    }
    Signature sig;
    sig.left = catalog.find(left_mask);
    sig.right = catalog.find(right_mask);
    if (sig.left < 0 || sig.right < 0) throw std::logic_error("admissible subgraph with inadmissible side");

    std::vector<int> used_stubs;
    std::vector<int> labels;
    for (const auto& e : chosen) {
        for (int x : {e.a, e.b}) {
            if (!g.is_stub(x)) continue;
            used_stubs.push_back(x);
            int j = x - 2 * g.n;
            labels.push_back(j <= g.k ? left_end(j) : right_end(j - (g.k + 1)));
        }
    }
    for (std::size_t i = 0; i < used_stubs.size(); ++i)
        for (std::size_t j = i + 1; j < used_stubs.size(); ++j)
            if (uf.find(used_stubs[i]) == uf.find(used_stubs[j])) sig.pairing.join(labels[i], labels[j]);
    return sig;
}

// Number of admissible subgraphs of G'(n,k) per signature, by direct enumeration.
inline StateVector tally_signatures(const SignatureCatalog& catalog, int n) {
    const int k = catalog.k();
    if (n < 3 * k) throw std::invalid_argument("tally_signatures: requires n >= 3k so the two sides are disjoint");
    FramedGraph g = build_framed(n, k);
    FrameSides sides(g);
    std::vector<std::uint64_t> counts(catalog.size(), 0);
    for_each_admissible_subgraph(g, [&](const std::vector<Edge>& chosen, bool) {
        Signature sig = signature_of(g, sides, catalog.sides(), chosen);
        ++counts[catalog.find_or_throw(sig)];
    });
    StateVector state;
    state.n = n;
    state.values.reserve(counts.size());
    for (auto c : counts) state.values.emplace_back(static_cast<unsigned long>(c));
    return state;
}

// Initial conditions I_k, placed at n0 = 3k where the two sides are edge-disjoint.
inline StateVector initial_state(const SignatureCatalog& catalog) {
    return tally_signatures(catalog, 3 * catalog.k());
}

}  // namespace petersen
