#pragma once

// The signature digraph sigma_k and the linear iteration
//   u_n(sig) = sum over arcs (pred -> sig) of u_{n-1}(pred).
//
// Arcs are produced by extending a hypothetical admissible subgraph of G'(n-1,k)
// by one column. The old stubs R_0' (ring edge v_{n-2}v_{n-1}) and R_1' (chord
// w_{n-k-1}w_{n-1}) become real edges into the new column, old R_j' becomes R_{j-1},
// and the new column chooses among v_{n-1}R_0, v_{n-1}w_{n-1}, w_{n-1}R_k so that
// v_{n-1} and w_{n-1} end with degree 2. These are exactly the five cases of the
// column-removal rules read backwards.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <span>
#include <thread>
#include <vector>

#include "petersen/admissible.hpp"
#include "petersen/signature.hpp"
#include "petersen/state_vector.hpp"

namespace petersen {

enum class ColumnCase : std::uint8_t {
    all_three,     // v R_0, v w, w R_k
    stub_r0_spoke, // v R_0, v w
    spoke_stub_rk, // v w, w R_k
    both_stubs,    // v R_0, w R_k
    spoke_only,    // v w
};

struct Arc {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    ColumnCase via = ColumnCase::all_three;
};

// Edge mask of the right side after shifting the window one column to the right,
// before the new column's own edges are added.
inline std::uint32_t shift_window(const WindowLayout& layout, const SideIntersection& old_side) {
    const int k = layout.k();
    std::uint32_t mask = 0;
    auto set = [&](int bit) { mask |= 1u << bit; };
    for (int c = 0; c + 1 < k; ++c) {
        if (old_side.has_edge(layout.spoke_bit(c + 1))) set(layout.spoke_bit(c));
        if (old_side.has_edge(layout.ring_bit(c + 1))) set(layout.ring_bit(c));
        if (old_side.has_edge(layout.chord_bit(c + 1))) set(layout.chord_bit(c));
        if (old_side.has_edge(layout.stub_bit(c + 2))) set(layout.stub_bit(c + 1));
    }
    if (old_side.is_loose(0)) set(layout.ring_bit(k - 1));
    if (old_side.is_loose(1)) set(layout.chord_bit(k - 1));
    return mask;
}

// Successor of one signature under one column case; returns false if the case is
// impossible or would close a cycle that does not cover the whole graph.
inline bool extend_signature(const SignatureCatalog& catalog, const Signature& sig, ColumnCase via, Signature& out) {
    const SideCatalog& sides = catalog.sides();
    const WindowLayout& layout = sides.layout();
    const int k = layout.k();
    const SideIntersection& old_side = sides[sig.right];
    const Pairing& old = sig.pairing;
    const bool r0 = old_side.is_loose(0);
    const bool r1 = old_side.is_loose(1);

    // An empty pairing means the old subgraph is already a closed cycle.
    if (old.empty()) return false;

    std::uint32_t mask = shift_window(layout, old_side);
    const int old_r0 = right_end(0);
    const int old_r1 = right_end(1);
    const int new_r0 = right_end(0);
    const int new_rk = right_end(k);
    // Placeholder labels for the old R_0'/R_1' while the pairing is rebuilt.
    int map_r0 = -1;
    int map_r1 = -1;

    switch (via) {
        case ColumnCase::all_three:
            if (r0 || r1) return false;
            mask |= 1u << layout.stub_bit(0) | 1u << layout.spoke_bit(k - 1) | 1u << layout.stub_bit(k);
            break;
        case ColumnCase::stub_r0_spoke:
            if (r0 || !r1) return false;
            mask |= 1u << layout.stub_bit(0) | 1u << layout.spoke_bit(k - 1);
            map_r1 = new_r0;
            break;
        case ColumnCase::spoke_stub_rk:
            if (!r0 || r1) return false;
            mask |= 1u << layout.spoke_bit(k - 1) | 1u << layout.stub_bit(k);
            map_r0 = new_rk;
            break;
        case ColumnCase::both_stubs:
            if (!r0 || !r1) return false;
            mask |= 1u << layout.stub_bit(0) | 1u << layout.stub_bit(k);
            map_r0 = new_r0;
            map_r1 = new_rk;
            break;
        case ColumnCase::spoke_only:
            if (!r0 || !r1) return false;
            mask |= 1u << layout.spoke_bit(k - 1);
            break;
    }

    Pairing next;
    auto relabel = [&](int label) {
        if (is_left_end(label)) return label;
        if (label == old_r0) return map_r0;
        if (label == old_r1) return map_r1;
        return right_end(end_index(label) - 1);
    };

    if (via == ColumnCase::spoke_only) {
        int x = old[old_r0];
        int y = old[old_r1];
        if (x == old_r1) {
            // Joining the two ends of one path closes a cycle: acceptable only when
            // that path is everything and does not lie inside the window.
            if (old_side.forced(0, 1) || old.end_count() != 2) return false;
        } else {
            for (auto [a, b] : old.pairs()) {
                if (a == old_r0 || a == old_r1 || b == old_r0 || b == old_r1) continue;
                next.join(relabel(a), relabel(b));
            }
            next.join(relabel(x), relabel(y));
        }
    } else {
        for (auto [a, b] : old.pairs()) next.join(relabel(a), relabel(b));
        if (via == ColumnCase::all_three) next.join(new_r0, new_rk);
    }

    int right = sides.find(mask);
    if (right < 0) return false;
    out.left = sig.left;
    out.right = right;
    out.pairing = next;
    return true;
}

class SigmaGraph {
public:
    explicit SigmaGraph(const SignatureCatalog& catalog) : k_(catalog.k()), node_count_(catalog.size()) {
        constexpr ColumnCase cases[] = {ColumnCase::all_three, ColumnCase::stub_r0_spoke, ColumnCase::spoke_stub_rk,
                                        ColumnCase::both_stubs, ColumnCase::spoke_only};
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            for (ColumnCase via : cases) {
                Signature next;
                if (!extend_signature(catalog, catalog[i], via, next)) continue;
                long j = catalog.find(next);
                if (j < 0) {
                    ++dangling_;
                    continue;
                }
                arcs_.push_back(Arc{std::uint32_t(i), std::uint32_t(j), via});
            }
        }
        build_adjacency();
    }

    // Builds a graph from an explicit arc list (used for hand-written fixtures).
    SigmaGraph(int k, std::size_t node_count, std::vector<Arc> arcs)
        : k_(k), node_count_(node_count), arcs_(std::move(arcs)) {
        build_adjacency();
    }

    int k() const { return k_; }
    std::size_t node_count() const { return node_count_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    // Extensions whose result fell outside the signature catalog (expected 0).
    std::size_t dangling() const { return dangling_; }

    std::span<const std::uint32_t> predecessors(std::size_t node) const {
        return {pred_.data() + pred_offset_[node], pred_.data() + pred_offset_[node + 1]};
    }
    std::span<const std::uint32_t> successors(std::size_t node) const {
        return {succ_.data() + succ_offset_[node], succ_.data() + succ_offset_[node + 1]};
    }

    std::vector<std::vector<std::uint32_t>> successor_lists() const {
        std::vector<std::vector<std::uint32_t>> out(node_count_);
        for (std::size_t v = 0; v < node_count_; ++v) {
            auto s = successors(v);
            out[v].assign(s.begin(), s.end());
        }
        return out;
    }

private:
    void build_adjacency() {
        pred_offset_.assign(node_count_ + 1, 0);
        succ_offset_.assign(node_count_ + 1, 0);
        for (const auto& a : arcs_) {
            ++pred_offset_[a.to + 1];
            ++succ_offset_[a.from + 1];
        }
        for (std::size_t v = 0; v < node_count_; ++v) {
            pred_offset_[v + 1] += pred_offset_[v];
            succ_offset_[v + 1] += succ_offset_[v];
        }
        pred_.resize(arcs_.size());
        succ_.resize(arcs_.size());
        std::vector<std::size_t> pf(pred_offset_.begin(), pred_offset_.end() - 1);
        std::vector<std::size_t> sf(succ_offset_.begin(), succ_offset_.end() - 1);
        for (const auto& a : arcs_) {
            pred_[pf[a.to]++] = a.from;
            succ_[sf[a.from]++] = a.to;
        }
        for (std::size_t v = 0; v < node_count_; ++v) {
            std::sort(pred_.begin() + long(pred_offset_[v]), pred_.begin() + long(pred_offset_[v + 1]));
            std::sort(succ_.begin() + long(succ_offset_[v]), succ_.begin() + long(succ_offset_[v + 1]));
        }
    }

    int k_ = 0;
    std::size_t node_count_ = 0;
    std::vector<Arc> arcs_;
    std::size_t dangling_ = 0;
    std::vector<std::size_t> pred_offset_;
    std::vector<std::uint32_t> pred_;
    std::vector<std::size_t> succ_offset_;
    std::vector<std::uint32_t> succ_;
};

inline SigmaGraph build_sigma(const SignatureCatalog& catalog) { return SigmaGraph(catalog); }

// One transfer step. Destinations are independent, so they may be split across threads.
inline StateVector step(const StateVector& state, const SigmaGraph& sigma, unsigned threads = 1) {
    if (state.size() != sigma.node_count()) throw std::invalid_argument("step: state/graph size mismatch");
    StateVector next;
    next.n = state.n + 1;
    next.values.resize(state.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) {
            Integer& acc = next.values[v];
            for (std::uint32_t p : sigma.predecessors(v)) acc += state.values[p];
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || state.size() < 4096) {
        work(0, state.size());
    } else {
        std::vector<std::jthread> pool;
        std::size_t chunk = (state.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t begin = std::min(state.size(), t * chunk);
            std::size_t end = std::min(state.size(), begin + chunk);
            pool.emplace_back(work, begin, end);
        }
    }
    return next;
}

}  // namespace petersen
