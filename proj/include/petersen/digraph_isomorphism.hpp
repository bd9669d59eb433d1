#pragma once

// Exact isomorphism test for small digraphs: joint colour refinement on
// (in-degree, out-degree, self-loop) followed by backtracking over vertices of
// equal colour, checking arcs in both directions against the partial map.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "petersen/scc.hpp"

namespace petersen {

namespace detail {

struct DigraphView {
    const AdjacencyList* out;
    AdjacencyList in;
    std::vector<std::vector<bool>> adj;

    explicit DigraphView(const AdjacencyList& g) : out(&g), in(g.size()), adj(g.size(), std::vector<bool>(g.size())) {
        for (std::uint32_t v = 0; v < g.size(); ++v)
            for (auto w : g[v]) {
                in[w].push_back(v);
                adj[v][w] = true;
            }
    }
    std::size_t size() const { return out->size(); }
};

// Refines colours of both graphs with a shared palette until stable.
inline std::pair<std::vector<int>, std::vector<int>> refine_jointly(const DigraphView& a, const DigraphView& b) {
    auto initial = [](const DigraphView& g) {
        std::vector<int> c(g.size());
        for (std::size_t v = 0; v < g.size(); ++v)
            c[v] = int((*g.out)[v].size() * 4096 + g.in[v].size() * 2 + (g.adj[v][v] ? 1 : 0));
        return c;
    };
    std::vector<int> ca = initial(a), cb = initial(b);
    std::size_t classes = 0;
    for (;;) {
        using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
        auto keys = [](const DigraphView& g, const std::vector<int>& c) {
            std::vector<Key> k(g.size());
            for (std::size_t v = 0; v < g.size(); ++v) {
                std::vector<int> outs, ins;
                for (auto w : (*g.out)[v]) outs.push_back(c[w]);
                for (auto w : g.in[v]) ins.push_back(c[w]);
                std::sort(outs.begin(), outs.end());
                std::sort(ins.begin(), ins.end());
                k[v] = Key{c[v], std::move(outs), std::move(ins)};
            }
            return k;
        };
        auto ka = keys(a, ca);
        auto kb = keys(b, cb);
        std::map<Key, int> palette;
        for (const auto& k : ka) palette.emplace(k, 0);
        for (const auto& k : kb) palette.emplace(k, 0);
        int next = 0;
        for (auto& [k, id] : palette) id = next++;
        for (std::size_t v = 0; v < ka.size(); ++v) ca[v] = palette[ka[v]];
        for (std::size_t v = 0; v < kb.size(); ++v) cb[v] = palette[kb[v]];
        if (palette.size() == classes) break;
        classes = palette.size();
    }
    return {ca, cb};
}

}  // namespace detail

// Returns a bijection f with u->v in a iff f(u)->f(v) in b, if one exists.
inline std::optional<std::vector<std::uint32_t>> find_isomorphism(const AdjacencyList& a, const AdjacencyList& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::size_t arcs_a = 0, arcs_b = 0;
    for (const auto& o : a) arcs_a += o.size();
    for (const auto& o : b) arcs_b += o.size();
    if (arcs_a != arcs_b) return std::nullopt;
    const std::size_t n = a.size();
    if (n == 0) return std::vector<std::uint32_t>{};

    detail::DigraphView va(a), vb(b);
    auto [ca, cb] = detail::refine_jointly(va, vb);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    // Visit order of a: BFS over the underlying undirected graph, rarest colour first.
    std::map<int, int> frequency;
    for (int c : ca) ++frequency[c];
    std::vector<std::uint32_t> order;
    std::vector<bool> queued(n, false);
    while (order.size() < n) {
        std::uint32_t seed = 0;
        bool have = false;
        for (std::uint32_t v = 0; v < n; ++v)
            if (!queued[v] && (!have || frequency[ca[v]] < frequency[ca[seed]])) {
                seed = v;
                have = true;
            }
        std::size_t head = order.size();
        order.push_back(seed);
        queued[seed] = true;
        while (head < order.size()) {
            auto v = order[head++];
            for (const std::vector<std::uint32_t>* list : {&a[v], &std::as_const(va.in)[v]})
                for (auto w : *list)
                    if (!queued[w]) {
                        queued[w] = true;
                        order.push_back(w);
                    }
        }
    }

    std::vector<std::vector<std::uint32_t>> by_colour;
    std::map<int, std::size_t> colour_slot;
    for (std::uint32_t v = 0; v < n; ++v) {
        auto [it, fresh] = colour_slot.emplace(cb[v], by_colour.size());
        if (fresh) by_colour.emplace_back();
        by_colour[it->second].push_back(v);
    }

    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> map(n, unset);
    std::vector<bool> used(n, false);
    std::vector<std::uint32_t> placed;  // vertices of a already mapped, in order

    auto consistent = [&](std::uint32_t u, std::uint32_t x) {
        if (va.adj[u][u] != vb.adj[x][x]) return false;
        for (auto p : placed) {
            auto y = map[p];
            if (va.adj[u][p] != vb.adj[x][y] || va.adj[p][u] != vb.adj[y][x]) return false;
        }
        return true;
    };

    std::vector<std::size_t> cursor(n, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == n) return map;
        auto u = order[depth];
        const auto& candidates = by_colour[colour_slot.at(ca[u])];
        bool advanced = false;
        while (cursor[depth] < candidates.size()) {
            auto x = candidates[cursor[depth]++];
            if (used[x] || !consistent(u, x)) continue;
            map[u] = x;
            used[x] = true;
            placed.push_back(u);
            ++depth;
            if (depth < n) cursor[depth] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) return std::nullopt;
        --depth;
        auto prev = order[depth];
        used[map[prev]] = false;
        map[prev] = unset;
        placed.pop_back();
    }
}

inline bool isomorphic(const AdjacencyList& a, const AdjacencyList& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace petersen
