#pragma once

// Strongly connected components (iterative Tarjan) and the condensation DAG.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace petersen {

using AdjacencyList = std::vector<std::vector<std::uint32_t>>;

struct SccDecomposition {
    // Components in topological order of the condensation (sources first);
    // nodes inside a component are sorted ascending.
    std::vector<std::vector<std::uint32_t>> components;
    std::vector<std::uint32_t> component_of;
    // Condensation arcs between distinct components, deduplicated and sorted.
    AdjacencyList condensation;
    std::vector<bool> has_self_loop;

    std::size_t size() const { return components.size(); }

    // Single node without a self-loop: every sequence on it vanishes after one step.
    bool is_trivial(std::size_t c) const { return components[c].size() == 1 && !has_self_loop[c]; }

    std::vector<std::size_t> in_degree() const {
        std::vector<std::size_t> deg(components.size(), 0);
        for (const auto& outs : condensation)
            for (auto t : outs) ++deg[t];
        return deg;
    }

    std::vector<std::uint32_t> sources() const {
        auto deg = in_degree();
        std::vector<std::uint32_t> out;
        for (std::size_t c = 0; c < deg.size(); ++c)
            if (deg[c] == 0) out.push_back(std::uint32_t(c));
        return out;
    }

    std::vector<std::uint32_t> sinks() const {
        std::vector<std::uint32_t> out;
        for (std::size_t c = 0; c < condensation.size(); ++c)
            if (condensation[c].empty()) out.push_back(std::uint32_t(c));
        return out;
    }
};

inline SccDecomposition scc_decompose(const AdjacencyList& graph) {
    const std::size_t n = graph.size();
    constexpr std::uint32_t unvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::size_t>> call;  // node, next successor position
    std::vector<std::vector<std::uint32_t>> found;             // reverse topological order
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < graph[v].size()) {
                std::uint32_t w = graph[v][pos++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            std::uint32_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<std::uint32_t> comp;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
        }
    }

    // Tarjan emits sinks first; reverse for a topological order, then make the
    // order independent of DFS details by a deterministic Kahn pass keyed on the
    // smallest node of each component.
    std::reverse(found.begin(), found.end());
    std::vector<std::uint32_t> comp_of(n);
    for (std::size_t c = 0; c < found.size(); ++c)
        for (auto v : found[c]) comp_of[v] = std::uint32_t(c);
    AdjacencyList cond(found.size());
    std::vector<bool> loop(found.size(), false);
    for (std::uint32_t v = 0; v < n; ++v) {
        for (auto w : graph[v]) {
            if (comp_of[v] == comp_of[w]) {
                if (v == w) loop[comp_of[v]] = true;
            } else {
                cond[comp_of[v]].push_back(comp_of[w]);
            }
        }
    }
    std::vector<std::size_t> indeg(found.size(), 0);
    for (auto& outs : cond) {
        std::sort(outs.begin(), outs.end());
        outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
        for (auto t : outs) ++indeg[t];
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ready;  // (min node, component), min-heap
    auto push = [&](std::uint32_t c) {
        ready.emplace_back(found[c].front(), c);
        std::push_heap(ready.begin(), ready.end(), std::greater<>{});
    };
    for (std::uint32_t c = 0; c < found.size(); ++c)
        if (indeg[c] == 0) push(c);
    std::vector<std::uint32_t> order;
    order.reserve(found.size());
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
        std::uint32_t c = ready.back().second;
        ready.pop_back();
        order.push_back(c);
        for (auto t : cond[c])
            if (--indeg[t] == 0) push(t);
    }
    std::vector<std::uint32_t> rank(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = std::uint32_t(i);

    SccDecomposition out;
    out.components.resize(found.size());
    out.condensation.resize(found.size());
    out.has_self_loop.resize(found.size());
    for (std::size_t c = 0; c < found.size(); ++c) {
        out.components[rank[c]] = std::move(found[c]);
        out.has_self_loop[rank[c]] = loop[c];
        for (auto t : cond[c]) out.condensation[rank[c]].push_back(rank[t]);
        std::sort(out.condensation[rank[c]].begin(), out.condensation[rank[c]].end());
    }
    out.component_of.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) out.component_of[v] = rank[comp_of[v]];
    return out;
}

// Nodes that can reach any of the targets (targets included).
inline std::vector<bool> ancestors_of(const AdjacencyList& graph, const std::vector<std::uint32_t>& targets) {
    AdjacencyList reverse(graph.size());
    for (std::uint32_t v = 0; v < graph.size(); ++v)
        for (auto w : graph[v]) reverse[w].push_back(v);
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::uint32_t> frontier;
    for (auto t : targets)
        if (!seen[t]) {
            seen[t] = true;
            frontier.push_back(t);
        }
    while (!frontier.empty()) {
        auto v = frontier.back();
        frontier.pop_back();
        for (auto u : reverse[v])
            if (!seen[u]) {
                seen[u] = true;
                frontier.push_back(u);
            }
    }
    return seen;
}

// Subgraph induced by a node subset, renumbered in ascending node order.
inline AdjacencyList induced_subgraph(const AdjacencyList& graph, const std::vector<std::uint32_t>& nodes) {
    std::vector<std::int64_t> local(graph.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = std::int64_t(i);
    AdjacencyList sub(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (auto w : graph[nodes[i]])
            if (local[w] >= 0) sub[i].push_back(std::uint32_t(local[w]));
    for (auto& outs : sub) std::sort(outs.begin(), outs.end());
    return sub;
}

}  // namespace petersen
