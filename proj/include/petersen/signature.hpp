#pragma once

// Signatures (left side id, right side id, pairing of loose ends) and the
// Hamiltonian-inducing test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "petersen/side_intersection.hpp"

namespace petersen {

// Loose-end labels: L_i -> i, R_i -> kRightOffset + i.
inline constexpr int kRightOffset = kMaxK + 1;
inline constexpr int kEndCount = 2 * (kMaxK + 1);

constexpr int left_end(int i) { return i; }
constexpr int right_end(int i) { return kRightOffset + i; }
constexpr bool is_left_end(int label) { return label < kRightOffset; }
constexpr int end_index(int label) { return is_left_end(label) ? label : label - kRightOffset; }
// L_i <-> R_i
constexpr int across(int label) { return is_left_end(label) ? label + kRightOffset : label - kRightOffset; }

inline std::string end_name(int label) {
    return std::string(is_left_end(label) ? "L" : "R") + std::to_string(end_index(label));
}

// A perfect matching on the loose ends present; absent ends have partner -1.
struct Pairing {
    std::array<std::int8_t, kEndCount> partner;

    Pairing() { partner.fill(-1); }

    bool contains(int label) const { return partner[label] >= 0; }
    int operator[](int label) const { return partner[label]; }
    void join(int a, int b) {
        partner[a] = std::int8_t(b);
        partner[b] = std::int8_t(a);
    }
    void remove(int label) { partner[label] = -1; }
    bool empty() const {
        return std::all_of(partner.begin(), partner.end(), [](std::int8_t p) { return p < 0; });
    }
    int end_count() const {
        return int(std::count_if(partner.begin(), partner.end(), [](std::int8_t p) { return p >= 0; }));
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < kEndCount; ++a)
            if (partner[a] > a) out.emplace_back(a, partner[a]);
        return out;
    }

    std::uint64_t code() const {
        std::uint64_t c = 0;
        for (int a = 0; a < kEndCount; ++a) c = (c << 4) | std::uint64_t(partner[a] < 0 ? 15 : partner[a]);
        return c;
    }

    friend bool operator==(const Pairing&, const Pairing&) = default;
    friend auto operator<=>(const Pairing&, const Pairing&) = default;
};

inline std::string to_string(const Pairing& pairing) {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : pairing.pairs()) {
        if (!first) out += ", ";
        first = false;
        out += "(" + end_name(a) + ", " + end_name(b) + ")";
    }
    return out + "}";
}

struct Signature {
    int left = 0;
    int right = 0;
    Pairing pairing;

    std::uint64_t key() const {
        return (std::uint64_t(left) << 56) | (std::uint64_t(right) << 48) | pairing.code();
    }

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Loose ends of a side as labels, on the requested side of the frame.
inline std::vector<int> side_end_labels(const SideIntersection& side, bool on_left) {
    WindowLayout layout(side.k);
    std::vector<int> labels;
    for (int i = 0; i <= side.k; ++i)
        if (side.is_loose(i)) labels.push_back(on_left ? left_end(layout.mirror_stub(i)) : right_end(i));
    std::sort(labels.begin(), labels.end());
    return labels;
}

inline std::vector<std::pair<int, int>> side_forced_labels(const SideIntersection& side, bool on_left) {
    WindowLayout layout(side.k);
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : side.forced_pairs) {
        int x = on_left ? left_end(layout.mirror_stub(a)) : right_end(a);
        int y = on_left ? left_end(layout.mirror_stub(b)) : right_end(b);
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    return out;
}

class SignatureCatalog {
public:
    explicit SignatureCatalog(int k) : sides_(k) {
        std::vector<std::vector<int>> ends(sides_.size() * 2);
        for (std::size_t id = 0; id < sides_.size(); ++id) {
            ends[2 * id] = side_end_labels(sides_[id], true);
            ends[2 * id + 1] = side_end_labels(sides_[id], false);
        }
        for (std::size_t l = 0; l < sides_.size(); ++l) {
            for (std::size_t r = 0; r < sides_.size(); ++r) {
                if ((sides_[l].loose_count() + sides_[r].loose_count()) % 2 != 0) continue;
                Pairing base;
                for (auto [a, b] : side_forced_labels(sides_[l], true)) base.join(a, b);
                for (auto [a, b] : side_forced_labels(sides_[r], false)) base.join(a, b);
                std::vector<int> free;
                for (int label : ends[2 * l])
                    if (!base.contains(label)) free.push_back(label);
                for (int label : ends[2 * r + 1])
                    if (!base.contains(label)) free.push_back(label);
                std::sort(free.begin(), free.end());
                std::vector<Pairing> block;
                enumerate_matchings(free, base, block);
                std::sort(block.begin(), block.end());
                for (auto& p : block) signatures_.push_back(Signature{int(l), int(r), p});
            }
        }
        index_.reserve(signatures_.size() * 2);
        for (std::size_t i = 0; i < signatures_.size(); ++i) index_.emplace(signatures_[i].key(), std::uint32_t(i));
    }

    int k() const { return sides_.k(); }
    const SideCatalog& sides() const { return sides_; }
    std::size_t size() const { return signatures_.size(); }
    const Signature& operator[](std::size_t i) const { return signatures_[i]; }
    const std::vector<Signature>& signatures() const { return signatures_; }

    // Index of a signature, or -1 if it is not in the catalog.
    long find(const Signature& sig) const {
        auto it = index_.find(sig.key());
        return it == index_.end() ? -1 : long(it->second);
    }

    long find_or_throw(const Signature& sig) const {
        long idx = find(sig);
        if (idx < 0) throw std::logic_error("signature not in catalog: " + describe(sig));
        return idx;
    }

    std::string describe(const Signature& sig) const {
        return "(" + std::to_string(sig.left) + ", " + std::to_string(sig.right) + ", " + to_string(sig.pairing) + ")";
    }

    int loose_count_left(std::size_t i) const { return sides_[signatures_[i].left].loose_count(); }
    int loose_count_right(std::size_t i) const { return sides_[signatures_[i].right].loose_count(); }

private:
    static void enumerate_matchings(std::vector<int>& free, Pairing& current, std::vector<Pairing>& out) {
        if (free.empty()) {
            out.push_back(current);
            return;
        }
        int first = free.front();
        for (std::size_t j = 1; j < free.size(); ++j) {
            int other = free[j];
            std::vector<int> rest;
            rest.reserve(free.size() - 2);
            for (std::size_t t = 1; t < free.size(); ++t)
                if (t != j) rest.push_back(free[t]);
            current.join(first, other);
            enumerate_matchings(rest, current, out);
            current.remove(first);
            current.remove(other);
        }
    }

    SideCatalog sides_;
    std::vector<Signature> signatures_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

inline SignatureCatalog enumerate_signatures(int k) { return SignatureCatalog(k); }

// Follows lambda-pairs and L_i <-> R_i crossings from one loose end. Returns the
// number of loose ends visited before the walk closes, or -1 if it hits an end
// whose counterpart on the other side is absent.
inline int hamiltonian_walk_length(const Pairing& pairing, int start) {
    int visited = 0;
    int cur = start;
    do {
        int mate = pairing[cur];
        if (mate < 0) return -1;
        visited += 2;
        cur = across(mate);
        if (!pairing.contains(cur)) return -1;
    } while (cur != start && visited <= kEndCount);
    return visited;
}

inline bool is_hamiltonian_pairing(const Pairing& pairing, int start) {
    int total = pairing.end_count();
    if (total == 0) return true;
    for (int label = 0; label < kEndCount; ++label)
        if (pairing.contains(label) && !pairing.contains(across(label))) return false;
    return hamiltonian_walk_length(pairing, start) == total;
}

// The left and right loose-end index sets must coincide, and the alternating walk
// must pass through every loose end. A signature without loose ends stands for a
// single cycle covering the whole graph.
inline bool is_hamiltonian_signature(const Signature& sig) {
    for (int label = 0; label < kEndCount; ++label)
        if (sig.pairing.contains(label)) return is_hamiltonian_pairing(sig.pairing, label);
    return true;
}

}  // namespace petersen
