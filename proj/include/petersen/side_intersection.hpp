#pragma once

// Possible intersections of an admissible subgraph with the outer edges on one
// side of G'(n,k).
//
// Every side is described in right-hand window coordinates: columns 0..k-1,
// column c sitting at graph column n-k+c. The left side is the mirror image
// under i -> n-1-i, which sends L_0 to R_0 and L_j to R_{k+1-j}; both sides
// therefore share one catalog.
//
// Canonical edge (bit) order of a window:
//   bits 0..k         stub edges R_0 (at v_{k-1}) and R_1..R_k (R_{c+1} at w_c)
//   bits k+1..2k      spokes v_c w_c
//   bits 2k+1..3k     ring edges entering v_c from the left (v_{-1} for c = 0)
//   bits 3k+1..4k     chords entering w_c from the left, from w_{c-k}
// Catalog entries are sorted by this bitmask.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "petersen/graph.hpp"

namespace petersen {

inline constexpr int kMaxK = 5;

class WindowLayout {
public:
    explicit WindowLayout(int k) : k_(k) {
        if (k < 1 || k > kMaxK) throw std::invalid_argument("window: k must be in 1.." + std::to_string(kMaxK));
    }

    int k() const { return k_; }
    int edge_count() const { return 4 * k_ + 1; }

    int stub_bit(int i) const { return i; }
    int spoke_bit(int c) const { return k_ + 1 + c; }
    int ring_bit(int c) const { return 2 * k_ + 1 + c; }
    int chord_bit(int c) const { return 3 * k_ + 1 + c; }

    // Window vertices: v_c, w_c, the attachment points v_{-1} and w_{c-k}, and stubs.
    int v(int c) const { return c; }
    int w(int c) const { return k_ + c; }
    int ring_attachment() const { return 2 * k_; }
    int chord_attachment(int c) const { return 2 * k_ + 1 + c; }
    int stub(int i) const { return 3 * k_ + 1 + i; }
    int vertex_count() const { return 4 * k_ + 2; }

    bool is_internal(int vertex) const { return vertex < 2 * k_; }
    bool is_attachment(int vertex) const { return vertex >= 2 * k_ && vertex < 3 * k_ + 1; }
    bool is_stub(int vertex) const { return vertex >= 3 * k_ + 1; }
    int stub_index(int vertex) const { return vertex - (3 * k_ + 1); }
    // 0 for v_{-1}, 1+c for w_{c-k}.
    int attachment_index(int vertex) const { return vertex - 2 * k_; }

    Edge edge(int bit) const {
        if (bit == 0) return {v(k_ - 1), stub(0)};
        if (bit <= k_) return {w(bit - 1), stub(bit)};
        if (bit <= 2 * k_) {
            int c = bit - k_ - 1;
            return {v(c), w(c)};
        }
        if (bit <= 3 * k_) {
            int c = bit - 2 * k_ - 1;
            return {c == 0 ? ring_attachment() : v(c - 1), v(c)};
        }
        int c = bit - 3 * k_ - 1;
        return {chord_attachment(c), w(c)};
    }

    // Left stub index L_j corresponding to the mirrored right stub index.
    int mirror_stub(int i) const { return i == 0 ? 0 : k_ + 1 - i; }

private:
    int k_;
};

struct SideIntersection {
    int k = 0;
    std::uint32_t edge_mask = 0;
    // Bitset over stub indices 0..k (in the side's own R-orientation).
    std::uint32_t loose_ends = 0;
    // Pairs of loose stubs joined by a path inside the window, a < b.
    std::vector<std::pair<int, int>> forced_pairs;
    // Attachment points where a path leaves the window (0 = v_{-1}, 1+c = w_{c-k}).
    std::vector<int> open_ends;
    // For each loose stub: partner stub index if forced, else -1.
    std::array<int, kMaxK + 1> stub_partner{};

    int loose_count() const { return std::popcount(loose_ends); }
    bool is_loose(int stub) const { return (loose_ends >> stub) & 1u; }
    bool has_edge(int bit) const { return (edge_mask >> bit) & 1u; }
    bool forced(int a, int b) const { return is_loose(a) && stub_partner[a] == b; }
};

// Analyses an edge subset of the window. Returns false if it is not an admissible
// side intersection (some v_c or w_c not of degree 2, or a cycle).
inline bool analyse_side(const WindowLayout& layout, std::uint32_t mask, SideIntersection& out) {
    const int k = layout.k();
    std::vector<std::vector<int>> adj(layout.vertex_count());
    for (int bit = 0; bit < layout.edge_count(); ++bit) {
        if (!((mask >> bit) & 1u)) continue;
        Edge e = layout.edge(bit);
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (int c = 0; c < k; ++c)
        if (adj[layout.v(c)].size() != 2 || adj[layout.w(c)].size() != 2) return false;

    out = SideIntersection{};
    out.k = k;
    out.edge_mask = mask;
    out.stub_partner.fill(-1);

    // Walk each path from its boundary endpoints; count edges visited to detect cycles.
    std::vector<bool> seen(layout.vertex_count(), false);
    int edges_walked = 0;
    for (int start = 0; start < layout.vertex_count(); ++start) {
        if (layout.is_internal(start) || adj[start].size() != 1 || seen[start]) continue;
        int prev = start;
        int cur = adj[start][0];
        seen[start] = true;
        ++edges_walked;
        while (layout.is_internal(cur)) {
            seen[cur] = true;
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++edges_walked;
        }
        seen[cur] = true;
        for (int end : {start, cur}) {
            if (layout.is_stub(end)) out.loose_ends |= 1u << layout.stub_index(end);
            else out.open_ends.push_back(layout.attachment_index(end));
        }
        if (layout.is_stub(start) && layout.is_stub(cur)) {
            int a = layout.stub_index(start);
            int b = layout.stub_index(cur);
            out.stub_partner[a] = b;
            out.stub_partner[b] = a;
            out.forced_pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    // Any edge not on a boundary-to-boundary path lies on a cycle.
    if (edges_walked != std::popcount(mask)) return false;
    std::sort(out.forced_pairs.begin(), out.forced_pairs.end());
    std::sort(out.open_ends.begin(), out.open_ends.end());
    return true;
}

class SideCatalog {
public:
    explicit SideCatalog(int k) : layout_(k) {
        const std::uint32_t limit = 1u << layout_.edge_count();
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            SideIntersection side;
            if (analyse_side(layout_, mask, side)) sides_.push_back(std::move(side));
        }
    }

    int k() const { return layout_.k(); }
    const WindowLayout& layout() const { return layout_; }
    std::size_t size() const { return sides_.size(); }
    const SideIntersection& operator[](std::size_t id) const { return sides_[id]; }
    const std::vector<SideIntersection>& sides() const { return sides_; }

    // Catalog id of an edge mask, or -1 if the mask is not admissible.
    int find(std::uint32_t mask) const {
        auto it = std::lower_bound(sides_.begin(), sides_.end(), mask,
                                   [](const SideIntersection& s, std::uint32_t m) { return s.edge_mask < m; });
        if (it == sides_.end() || it->edge_mask != mask) return -1;
        return int(it - sides_.begin());
    }

private:
    WindowLayout layout_;
    std::vector<SideIntersection> sides_;
};

inline SideCatalog enumerate_side_intersections(int k) { return SideCatalog(k); }

}  // namespace petersen
