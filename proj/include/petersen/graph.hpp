#pragma once

// Generalized Petersen graphs G(n,k), the framed graph G'(n,k) with its seam
// cut open into stubs, and a brute-force Hamiltonian cycle counter that is
// independent of the transfer machinery.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace petersen {

struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct PetersenGraph {
    int n = 0;
    int k = 0;
    // True when n <= 2k and the mod-n edge list had to be collapsed.
    bool degenerate = false;
    std::vector<Edge> edges;

    int vertex_count() const { return 2 * n; }
    int outer(int i) const { return ((i % n) + n) % n; }
    int inner(int i) const { return n + outer(i); }

    std::vector<int> degrees() const {
        std::vector<int> deg(vertex_count(), 0);
        for (const auto& e : edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        return deg;
    }
};

inline void sort_unique(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

inline PetersenGraph build_petersen(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("build_petersen: n and k must be positive");
    PetersenGraph g;
    g.n = n;
    g.k = k;
    std::vector<Edge> raw;
    for (int i = 0; i < n; ++i) {
        raw.emplace_back(g.outer(i), g.outer(i + 1));
        raw.emplace_back(g.inner(i), g.inner(i + k));
        raw.emplace_back(g.outer(i), g.inner(i));
    }
    // Self-loops (n == 1, or k a multiple of n) are dropped along with duplicates.
    std::erase_if(raw, [](const Edge& e) { return e.a == e.b; });
    std::size_t before = raw.size();
    sort_unique(raw);
    g.edges = std::move(raw);
    g.degenerate = n <= 2 * k || g.edges.size() != before || g.edges.size() != std::size_t(3 * n);
    return g;
}

// G'(n,k): the seam edges v_0v_{n-1} and w_iw_{n-k+i} (0 <= i < k) are replaced by
// the stubs v_0L_0, w_iL_{i+1}, v_{n-1}R_0 and w_{n-k+i}R_{i+1}.
struct FramedGraph {
    int n = 0;
    int k = 0;
    std::vector<Edge> edges;

    int outer(int i) const { return i; }
    int inner(int i) const { return n + i; }
    int left_stub(int j) const { return 2 * n + j; }
    int right_stub(int j) const { return 2 * n + k + 1 + j; }
    int vertex_count() const { return 2 * n + 2 * (k + 1); }
    bool is_stub(int vertex) const { return vertex >= 2 * n; }

    std::vector<int> degrees() const {
        std::vector<int> deg(vertex_count(), 0);
        for (const auto& e : edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        return deg;
    }

    bool has_edge(int x, int y) const {
        return std::binary_search(edges.begin(), edges.end(), Edge(x, y));
    }
};

inline FramedGraph build_framed(int n, int k) {
    if (k < 1 || n < 2 * k + 1)
        throw std::invalid_argument("build_framed: requires k >= 1 and n >= 2k+1 (got n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) + ")");
    FramedGraph g;
    g.n = n;
    g.k = k;
    for (int i = 0; i < n; ++i) {
        g.edges.emplace_back(g.outer(i), g.inner(i));
        if (i + 1 < n) g.edges.emplace_back(g.outer(i), g.outer(i + 1));
        if (i + k < n) g.edges.emplace_back(g.inner(i), g.inner(i + k));
    }
    g.edges.emplace_back(g.outer(0), g.left_stub(0));
    g.edges.emplace_back(g.outer(n - 1), g.right_stub(0));
    for (int i = 0; i < k; ++i) {
        g.edges.emplace_back(g.inner(i), g.left_stub(i + 1));
        g.edges.emplace_back(g.inner(n - k + i), g.right_stub(i + 1));
    }
    sort_unique(g.edges);
    return g;
}

// Union-find with undo, for backtracking searches that add edges one at a time.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int size) : parent_(size), size_(size, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    int component_size(int x) const { return size_[find(x)]; }

    // Returns false (and records nothing) when x and y are already joined.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        history_.push_back(y);
        return true;
    }

    void undo() {
        int y = history_.back();
        history_.pop_back();
        int x = parent_[y];
        size_[x] -= size_[y];
        parent_[y] = y;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

// Depth-first edge-choice search: every vertex must end with degree exactly 2 and
// a cycle may only close once it spans all vertices. Calls visit(cycle_edges)
// once per Hamiltonian cycle (cycles are unrooted and undirected). Edges must be
// distinct; their order is the branching order.
inline void for_each_hamiltonian_cycle(int vertex_count, const std::vector<Edge>& edges,
                                       const std::function<void(const std::vector<Edge>&)>& visit) {
    if (vertex_count < 3) return;
    std::vector<int> pending(vertex_count, 0);
    for (const auto& e : edges) {
        ++pending[e.a];
        ++pending[e.b];
    }
    if (std::any_of(pending.begin(), pending.end(), [](int d) { return d < 2; })) return;

    std::vector<int> degree(vertex_count, 0);
    std::vector<Edge> chosen;
    RollbackUnionFind uf(vertex_count);

    std::function<void(std::size_t, bool)> search = [&](std::size_t idx, bool closed) {
        if (idx == edges.size()) {
            if (closed) visit(chosen);
            return;
        }
        const Edge e = edges[idx];
        --pending[e.a];
        --pending[e.b];
        // include
        if (!closed && degree[e.a] < 2 && degree[e.b] < 2) {
            bool joined = uf.unite(e.a, e.b);
            if (joined || uf.component_size(e.a) == vertex_count) {
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
        // exclude
        if (degree[e.a] + pending[e.a] >= 2 && degree[e.b] + pending[e.b] >= 2) search(idx + 1, closed);
        ++pending[e.a];
        ++pending[e.b];
    };
    search(0, false);
}

inline std::uint64_t count_hamiltonian_cycles(int vertex_count, const std::vector<Edge>& edges) {
    std::uint64_t count = 0;
    for_each_hamiltonian_cycle(vertex_count, edges, [&](const std::vector<Edge>&) { ++count; });
    return count;
}

// Orders edges column by column so the search frontier stays narrow.
inline std::vector<Edge> column_ordered_edges(const PetersenGraph& g) {
    auto column = [&](int vertex) { return vertex % g.n; };
    std::vector<Edge> edges = g.edges;
    std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
        auto key = [&](const Edge& e) {
            int lo = std::min(column(e.a), column(e.b));
            int hi = std::max(column(e.a), column(e.b));
            return std::pair{hi, lo};
        };
        return key(x) < key(y);
    });
    return edges;
}

inline std::uint64_t count_ham_cycles_oracle(int n, int k) {
    PetersenGraph g = build_petersen(n, k);
    if (g.degenerate)
        throw std::invalid_argument("count_ham_cycles_oracle: G(" + std::to_string(n) + "," +
                                    std::to_string(k) + ") is degenerate (n <= 2k)");
    std::vector<Edge> edges = column_ordered_edges(g);
    std::uint64_t count = 0;
    for_each_hamiltonian_cycle(g.vertex_count(), edges, [&](const std::vector<Edge>&) { ++count; });
    return count;
}

}  // namespace petersen
