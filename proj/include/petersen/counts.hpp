#pragma once

// h_k(n) = sum of u_n over Hamiltonian-inducing signatures, optionally split by
// the parity of the per-side loose-end count.

#include <optional>
#include <stdexcept>
#include <vector>

#include "petersen/admissible.hpp"
#include "petersen/integer.hpp"
#include "petersen/linear_system.hpp"
#include "petersen/signature.hpp"
#include "petersen/state_vector.hpp"
#include "petersen/transfer.hpp"

namespace petersen {

// Catalog, transition digraph, H_k membership and initial state for one k.
class TransferPipeline {
public:
    explicit TransferPipeline(int k) : catalog_(k), sigma_(catalog_) {
        hamiltonian_.resize(catalog_.size());
        for (std::size_t i = 0; i < catalog_.size(); ++i) {
            hamiltonian_[i] = is_hamiltonian_signature(catalog_[i]);
            if (hamiltonian_[i]) hamiltonian_nodes_.push_back(std::uint32_t(i));
        }
    }

    int k() const { return catalog_.k(); }
    int n0() const { return 3 * catalog_.k(); }
    const SignatureCatalog& catalog() const { return catalog_; }
    const SigmaGraph& sigma() const { return sigma_; }
    bool is_hamiltonian(std::size_t i) const { return hamiltonian_[i]; }
    const std::vector<std::uint32_t>& hamiltonian_nodes() const { return hamiltonian_nodes_; }
    bool even_side(std::size_t i) const { return catalog_.loose_count_left(i) % 2 == 0; }

    const StateVector& initial() const {
        if (!initial_) initial_ = initial_state(catalog_);
        return *initial_;
    }

    Integer hamiltonian_sum(const StateVector& s) const {
        Integer h = 0;
        for (auto i : hamiltonian_nodes_) h += s[i];
        return h;
    }

private:
    SignatureCatalog catalog_;
    SigmaGraph sigma_;
    std::vector<bool> hamiltonian_;
    std::vector<std::uint32_t> hamiltonian_nodes_;
    mutable std::optional<StateVector> initial_;
};

struct CountSeries {
    int k = 0;
    int first_n = 0;
    std::vector<Integer> h;
    std::vector<Integer> h_even;  // empty unless the parity split was requested
    std::vector<Integer> h_odd;

    int last_n() const { return first_n + int(h.size()) - 1; }
    bool has_parity() const { return !h_even.empty(); }
    const Integer& at(int n) const { return h.at(std::size_t(n - first_n)); }

    IndexedSequence sequence() const { return IndexedSequence{first_n, h}; }
    IndexedSequence even_sequence() const { return IndexedSequence{first_n, h_even}; }
    IndexedSequence odd_sequence() const { return IndexedSequence{first_n, h_odd}; }
};

inline CountSeries count_series(const TransferPipeline& p, int n_max, bool parity, unsigned threads = 1) {
    if (n_max < p.n0()) throw std::invalid_argument("n_max must be at least 3k");
    CountSeries out;
    out.k = p.k();
    out.first_n = p.n0();
    StateVector s = p.initial();
    for (;;) {
        out.h.push_back(p.hamiltonian_sum(s));
        if (parity) {
            Integer even = 0;
            for (auto i : p.hamiltonian_nodes())
                if (p.even_side(i)) even += s[i];
            out.h_odd.push_back(out.h.back() - even);
            out.h_even.push_back(std::move(even));
        }
        if (s.n == n_max) break;
        s = step(s, p.sigma(), threads);
    }
    return out;
}

inline CountSeries hamiltonian_counts(const TransferPipeline& p, int n_max, unsigned threads = 1) {
    return count_series(p, n_max, false, threads);
}

inline CountSeries parity_split_counts(const TransferPipeline& p, int n_max, unsigned threads = 1) {
    return count_series(p, n_max, true, threads);
}

// Prepends values for n < 3k (which the transfer iteration does not produce).
inline CountSeries with_prefix(const CountSeries& tail, const std::vector<Integer>& h_prefix,
                               const std::vector<Integer>& even_prefix = {},
                               const std::vector<Integer>& odd_prefix = {}) {
    if (int(h_prefix.size()) != tail.first_n - 1) throw std::invalid_argument("prefix must cover n = 1 .. 3k-1");
    CountSeries out;
    out.k = tail.k;
    out.first_n = 1;
    out.h = h_prefix;
    out.h.insert(out.h.end(), tail.h.begin(), tail.h.end());
    if (tail.has_parity()) {
        if (even_prefix.size() != h_prefix.size() || odd_prefix.size() != h_prefix.size())
            throw std::invalid_argument("parity prefix must cover n = 1 .. 3k-1");
        out.h_even = even_prefix;
        out.h_even.insert(out.h_even.end(), tail.h_even.begin(), tail.h_even.end());
        out.h_odd = odd_prefix;
        out.h_odd.insert(out.h_odd.end(), tail.h_odd.begin(), tail.h_odd.end());
    }
    return out;
}

}  // namespace petersen
