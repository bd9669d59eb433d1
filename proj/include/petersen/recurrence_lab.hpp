#pragma once

// Characteristic polynomials of the signature sequences: per-SCC universal
// polynomials and their isomorphism classes, the SCC-ordered composition
// (algorithm1), the minimal polynomial on given initial values, and
// annihilators of h_k(n).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "petersen/berlekamp_massey.hpp"
#include "petersen/counts.hpp"
#include "petersen/digraph_isomorphism.hpp"
#include "petersen/linear_system.hpp"
#include "petersen/poly.hpp"
#include "petersen/scc.hpp"
#include "petersen/transfer.hpp"

namespace petersen {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline AdjacencyList component_graph(const AdjacencyList& succ, const SccDecomposition& d, std::size_t c) {
    return induced_subgraph(succ, d.components[c]);
}

// x-power-stripped minimal polynomial of the transition matrix on a node set.
inline Poly scc_universal_minpoly(const AdjacencyList& component, std::uint64_t seed = 1) {
    return strip_x_power(matrix_minpoly(LinearSystem::from_successors(component), seed));
}

// ---------------------------------------------------------------------------
// Isomorphism classes of SCCs

struct SccClass {
    std::string label;
    std::size_t size = 0;
    bool self_loop = false;  // only meaningful for size 1
    std::uint32_t representative = 0;
    std::vector<std::uint32_t> members;  // component indices
    std::vector<std::size_t> in_degrees;
    std::vector<std::size_t> out_degrees;
    Poly minpoly;    // including the power of x
    Poly universal;  // x-stripped
};

struct SccClassReport {
    std::vector<SccClass> classes;
    std::vector<std::uint32_t> class_of;  // per component

    const Poly& universal_of(std::size_t component) const { return classes[class_of[component]].universal; }
    std::vector<Poly> universal_per_component() const {
        std::vector<Poly> out(class_of.size());
        for (std::size_t c = 0; c < class_of.size(); ++c) out[c] = universal_of(c);
        return out;
    }
};

inline SccClassReport classify_sccs(const AdjacencyList& succ, const SccDecomposition& d, std::uint64_t seed = 1) {
    using Fingerprint = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>, bool>;
    SccClassReport report;
    report.class_of.assign(d.size(), 0);
    std::map<Fingerprint, std::vector<std::uint32_t>> buckets;  // fingerprint -> class ids
    std::vector<AdjacencyList> rep_graphs;

    for (std::uint32_t c = 0; c < d.size(); ++c) {
        AdjacencyList g = component_graph(succ, d, c);
        std::vector<std::size_t> in(g.size(), 0), out(g.size(), 0);
        for (std::size_t v = 0; v < g.size(); ++v) {
            out[v] = g[v].size();
            for (auto w : g[v]) ++in[w];
        }
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        Fingerprint fp{g.size(), in, out, bool(d.has_self_loop[c])};
        auto& bucket = buckets[fp];
        bool placed = false;
        for (auto id : bucket) {
            if (isomorphic(rep_graphs[id], g)) {
                report.class_of[c] = id;
                report.classes[id].members.push_back(c);
                placed = true;
                break;
            }
        }
        if (placed) continue;
        SccClass cls;
        cls.size = g.size();
        cls.self_loop = d.has_self_loop[c];
        cls.representative = c;
        cls.members = {c};
        cls.in_degrees = in;
        cls.out_degrees = out;
        cls.minpoly = matrix_minpoly(LinearSystem::from_successors(g), seed);
        cls.universal = strip_x_power(cls.minpoly);
        auto id = std::uint32_t(report.classes.size());
        report.classes.push_back(std::move(cls));
        rep_graphs.push_back(std::move(g));
        bucket.push_back(id);
        report.class_of[c] = id;
    }

    // Order classes by size (loop-free first), then by first member; label sizes
    // shared by several classes with A, B, ...
    std::vector<std::uint32_t> order(report.classes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        const auto& x = report.classes[a];
        const auto& y = report.classes[b];
        return std::tuple(x.size, x.self_loop, x.representative) < std::tuple(y.size, y.self_loop, y.representative);
    });
    std::vector<SccClass> sorted;
    std::vector<std::uint32_t> rank(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
        sorted.push_back(std::move(report.classes[order[i]]));
    }
    for (auto& c : report.class_of) c = rank[c];
    std::map<std::size_t, int> per_size;
    for (const auto& cls : sorted) ++per_size[cls.size];
    std::map<std::size_t, int> seen;
    for (auto& cls : sorted) {
        cls.label = std::to_string(cls.size);
        if (per_size[cls.size] > 1) cls.label += char('A' + seen[cls.size]++);
    }
    report.classes = std::move(sorted);
    return report;
}

// ---------------------------------------------------------------------------
// algorithm1: SCC-ordered composition

struct Algorithm1Result {
    Poly polynomial;                  // LCM over the chosen sink vertices
    std::vector<std::uint32_t> sinks; // one vertex per sink SCC
    std::vector<Poly> per_sink;
};

namespace detail {

inline void remove_content(std::vector<Integer>& x) {
    Integer g = 0;
    for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Runs the flowchart on rho(v), the subgraph of all vertices that can reach v.
inline Poly algorithm1_on_rho(const AdjacencyList& succ, const AdjacencyList& pred, const SccDecomposition& d,
                              const std::vector<Poly>& component_poly, const std::vector<Integer>& initial,
                              std::uint32_t v) {
    std::vector<bool> in_rho = ancestors_of(succ, {v});
    std::vector<std::uint32_t> nodes;
    for (std::uint32_t u = 0; u < succ.size(); ++u)
        if (in_rho[u]) nodes.push_back(u);
    std::vector<std::int64_t> local(succ.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = std::int64_t(i);

    // Components of rho(v), in global (topological) order.
    std::vector<std::uint32_t> comps;
    for (auto u : nodes) comps.push_back(d.component_of[u]);
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    std::map<std::uint32_t, std::size_t> comp_slot;
    for (std::size_t i = 0; i < comps.size(); ++i) comp_slot[comps[i]] = i;

    std::vector<std::vector<std::uint32_t>> rows(nodes.size());  // local predecessors
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (auto p : pred[nodes[i]])
            if (local[p] >= 0) rows[i].push_back(std::uint32_t(local[p]));

    std::vector<std::size_t> live_in(comps.size(), 0);
    std::vector<std::vector<std::size_t>> comp_succ(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (auto t : d.condensation[comps[i]])
            if (auto it = comp_slot.find(t); it != comp_slot.end()) {
                comp_succ[i].push_back(it->second);
                ++live_in[it->second];
            }

    std::vector<Integer> x(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) x[i] = initial[nodes[i]];
    std::vector<bool> alive_node(nodes.size(), true);
    std::vector<bool> alive(comps.size(), true);
    std::size_t remaining = comps.size();

    auto advance = [&](std::vector<Integer>& y) {
        std::vector<Integer> z(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (!alive_node[i]) continue;
            for (auto j : rows[i]) z[i] += y[j];
        }
        y = std::move(z);
    };
    // Number of steps after which the component's own sequences vanish, or -1.
    auto vanishing_index = [&](std::size_t slot) -> long {
        const auto& members = d.components[comps[slot]];
        std::vector<std::size_t> idx;
        for (auto u : members) idx.push_back(std::size_t(local[u]));
        std::map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
        std::vector<Integer> y(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) y[i] = x[idx[i]];
        for (long t = 0; t <= long(idx.size()); ++t) {
            if (is_zero_vector(y)) return t;
            std::vector<Integer> z(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (auto j : rows[idx[i]])
                    if (auto it = pos.find(j); it != pos.end()) z[i] += y[it->second];
            y = std::move(z);
        }
        return -1;
    };

    Poly result = Poly::one();
    while (remaining > 0) {
        std::vector<std::size_t> sources;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (alive[i] && live_in[i] == 0) sources.push_back(i);
        long longest = -1;
        std::vector<std::size_t> vanishing;
        for (auto s : sources) {
            long t = vanishing_index(s);
            if (t >= 0) {
                vanishing.push_back(s);
                longest = std::max(longest, t);
            }
        }
        if (!vanishing.empty()) {
            for (long t = 0; t < longest; ++t) advance(x);
            for (auto s : vanishing) {
                alive[s] = false;
                --remaining;
                for (auto u : d.components[comps[s]]) alive_node[std::size_t(local[u])] = false;
                for (auto t : comp_succ[s]) --live_in[t];
            }
            continue;
        }
        std::size_t s = sources.front();
        const Poly& p = component_poly[comps[s]];
        if (p.is_one()) throw std::logic_error("algorithm1: source SCC with polynomial 1 does not vanish");
        auto coeffs = Poly(p.primitive_integer_form()).integer_coefficients();
        std::vector<Integer> acc(x.size());
        for (int i = p.degree(); i >= 0; --i) {
            advance(acc);
            const Integer& c = coeffs[std::size_t(i)];
            if (sgn(c) != 0)
                for (std::size_t j = 0; j < x.size(); ++j)
                    if (alive_node[j]) acc[j] += c * x[j];
        }
        x = std::move(acc);
        remove_content(x);
        result *= p;
        if (vanishing_index(s) < 0) throw std::logic_error("algorithm1: SCC polynomial is not universal on its SCC");
    }
    return result;
}

}  // namespace detail

// D is the set of vertices that can reach a target (all vertices when targets is
// empty). One vertex is taken from each sink SCC of D.
inline Algorithm1Result algorithm1(const AdjacencyList& succ, const SccDecomposition& d,
                                   const std::vector<Poly>& component_poly, const std::vector<Integer>& initial,
                                   const std::vector<std::uint32_t>& targets = {}) {
    if (initial.size() != succ.size()) throw std::invalid_argument("algorithm1: initial vector size mismatch");
    std::vector<bool> in_d;
    if (targets.empty()) in_d.assign(succ.size(), true);
    else in_d = ancestors_of(succ, targets);
    AdjacencyList pred(succ.size());
    for (std::uint32_t u = 0; u < succ.size(); ++u)
        for (auto w : succ[u]) pred[w].push_back(u);

    Algorithm1Result out;
    out.polynomial = Poly::one();
    for (std::uint32_t c = 0; c < d.size(); ++c) {
        std::uint32_t v = d.components[c].front();
        if (!in_d[v]) continue;
        bool sink = std::none_of(d.condensation[c].begin(), d.condensation[c].end(),
                                 [&](auto t) { return bool(in_d[d.components[t].front()]); });
        if (!sink) continue;
        Poly p = detail::algorithm1_on_rho(succ, pred, d, component_poly, initial, v);
        out.sinks.push_back(v);
        out.per_sink.push_back(p);
        out.polynomial = poly_lcm(out.polynomial, p);
    }
    return out;
}

// Convenience form that derives the decomposition and per-SCC polynomials itself.
inline Algorithm1Result algorithm1(const AdjacencyList& succ, const std::vector<Integer>& initial,
                                   const std::vector<std::uint32_t>& targets = {}) {
    SccDecomposition d = scc_decompose(succ);
    std::vector<Poly> polys(d.size());
    for (std::size_t c = 0; c < d.size(); ++c) polys[c] = scc_universal_minpoly(component_graph(succ, d, c));
    return algorithm1(succ, d, polys, initial, targets);
}

// ---------------------------------------------------------------------------
// Minimal characteristic polynomial on (sigma_k, I_k)

// sum_i p_i u_{n0+i}: the residual vector at index n0 + deg p. By linearity and
// shift invariance, p is characteristic for every signature from that index on
// iff this vector is zero.
inline std::vector<Integer> residual_vector(const SigmaGraph& sigma, const StateVector& initial, const Poly& p,
                                            unsigned threads = 1) {
    auto coeffs = Poly(p.primitive_integer_form()).integer_coefficients();
    std::vector<Integer> acc(initial.size());
    StateVector s = initial;
    for (int i = 0; i <= p.degree(); ++i) {
        const Integer& c = coeffs[std::size_t(i)];
        if (sgn(c) != 0)
            for (std::size_t j = 0; j < s.size(); ++j) acc[j] += c * s[j];
        if (i < p.degree()) s = step(s, sigma, threads);
    }
    return acc;
}

struct MinimalCharpoly {
    Poly polynomial;  // minimal annihilator of the vector sequence from n0, including x^e
    Poly stripped;
    int n0 = 0;
    int valid_from = 0;  // n0 + deg(polynomial)
    int terms = 0;
    int draws = 0;
    bool verified = false;
};

inline MinimalCharpoly minimal_charpoly_on_initial(const SigmaGraph& sigma, const StateVector& initial,
                                                   int degree_bound, std::uint64_t seed = 1, int draws = 3,
                                                   unsigned threads = 1) {
    MinimalCharpoly out;
    out.n0 = initial.n;
    if (initial.is_zero()) {
        out.polynomial = out.stripped = Poly::one();
        out.valid_from = initial.n;
        out.verified = true;
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(-8, 8);
    int terms = 2 * degree_bound + 16;
    for (int attempt = 0; attempt < 4; ++attempt, terms *= 2, draws += 2) {
        std::vector<std::vector<int>> w(static_cast<std::size_t>(draws), std::vector<int>(initial.size()));
        for (auto& row : w)
            for (auto& x : row) x = weight(rng);
        std::vector<std::vector<Rational>> seq(static_cast<std::size_t>(draws));
        StateVector s = initial;
        for (int t = 0; t < terms; ++t) {
            for (int r = 0; r < draws; ++r) {
                Integer dot = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (w[std::size_t(r)][j] != 0 && sgn(s[j]) != 0) dot += w[std::size_t(r)][j] * s[j];
                seq[std::size_t(r)].emplace_back(dot);
            }
            if (t + 1 < terms) s = step(s, sigma, threads);
        }
        Poly p = Poly::one();
        for (const auto& sq : seq) p = poly_lcm(p, berlekamp_massey(std::span<const Rational>(sq)));
        if (2 * p.degree() + 8 > terms) continue;
        if (!is_zero_vector(residual_vector(sigma, initial, p, threads))) continue;
        out.polynomial = p;
        out.stripped = strip_x_power(p);
        out.valid_from = initial.n + p.degree();
        out.terms = terms;
        out.draws = draws;
        out.verified = true;
        return out;
    }
    throw std::runtime_error("minimal_charpoly_on_initial: verification failed; sequence window too short");
}

// ---------------------------------------------------------------------------
// Annihilators of h_k(n)

struct HAnnihilator {
    Poly polynomial;  // Berlekamp-Massey output over the whole series
    long start_index = -1;
};

inline HAnnihilator h_annihilator(const IndexedSequence& h) {
    std::vector<Rational> q(h.values.begin(), h.values.end());
    HAnnihilator out;
    out.polynomial = berlekamp_massey(std::span<const Rational>(q));
    if (2 * out.polynomial.degree() + 8 > long(h.values.size()))
        throw std::invalid_argument("h_annihilator: series too short for the recovered degree");
    out.start_index = recurrence_start(out.polynomial, h);
    return out;
}

// Lifts a polynomial known on all signatures to h_k(n) when a periodic factor
// x^j - 1 can be split off: find the signatures where base*(x^j-1) fails at the
// one-index check, confirm none of them reaches H_k, then use periodicity of the
// base residual and a direct check to push the start index down.
struct ReductionChain {
    Poly base;
    Poly full;
    int check_index = 0;
    std::vector<std::uint32_t> failing;
    bool failing_reach_hamiltonian = true;
    bool full_holds_on_h = false;
    int period = 0;
    int periodic_from = 0;
    bool periodic_block_zero = false;
    long base_start = -1;
};

inline ReductionChain reduction_chain(const TransferPipeline& pipeline, const Poly& base, int period,
                                      const IndexedSequence& h, unsigned threads = 1) {
    ReductionChain out;
    out.base = base;
    out.period = period;
    out.full = base * (Poly::monomial(period) - Poly::one());
    const StateVector& init = pipeline.initial();
    out.check_index = init.n + out.full.degree();
    auto r = residual_vector(pipeline.sigma(), init, out.full, threads);
    for (std::uint32_t i = 0; i < r.size(); ++i)
        if (sgn(r[i]) != 0) out.failing.push_back(i);
    auto succ = pipeline.sigma().successor_lists();
    auto reach = ancestors_of(succ, pipeline.hamiltonian_nodes());
    out.failing_reach_hamiltonian =
        std::any_of(out.failing.begin(), out.failing.end(), [&](auto i) { return bool(reach[i]); });
    out.full_holds_on_h = check_recurrence(out.full, h, out.check_index);
    out.periodic_from = out.check_index - period;
    out.periodic_block_zero = true;
    for (int n = out.periodic_from; n < out.check_index; ++n)
        if (sgn(recurrence_residual(base, h, n)) != 0) out.periodic_block_zero = false;
    out.base_start = recurrence_start(base, h);
    return out;
}

// ---------------------------------------------------------------------------
// Parity split with periodic right-hand sides

struct PeriodicTerm {
    std::vector<Integer> block;  // value at n is block[n mod block.size()]
    Integer at(long n) const {
        long m = long(block.size());
        return block[std::size_t(((n % m) + m) % m)];
    }
};

// True iff sum_i p_i s(n-d+i) equals rhs(n) for from <= n <= to.
inline bool check_inhomogeneous(const Poly& p, const IndexedSequence& s, const PeriodicTerm& rhs, long from,
                                long to) {
    for (long n = from; n <= to; ++n)
        if (recurrence_residual(p, s, n) != Rational(rhs.at(n))) return false;
    return true;
}

}  // namespace petersen
