#pragma once

// Machine-readable emission for the CLI. Big integers are written as decimal
// strings in JSON so no consumer ever sees a rounded value.

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "petersen/counts.hpp"
#include "petersen/recurrence_lab.hpp"
#include "petersen/signature.hpp"
#include "petersen/verify.hpp"

namespace petersen::report {

inline constexpr int kSchemaVersion = 1;

using nlohmann::ordered_json;

inline ordered_json coefficients(const Poly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_decimal(c));
    return out;
}

inline bool is_annotation(const Check& c) { return c.detail.rfind("annotation", 0) == 0; }

// Details of passing checks can hold timings, so only failures and annotations
// carry them; this keeps passing output byte-identical between runs.
inline ordered_json checks(const std::vector<Check>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& c : list) {
        ordered_json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty() && (!c.pass || is_annotation(c))) item["detail"] = c.detail;
        out.push_back(std::move(item));
    }
    return out;
}

inline ordered_json catalog_json(const SignatureCatalog& catalog, bool dump) {
    ordered_json out{{"schemaVersion", kSchemaVersion},
                     {"k", catalog.k()},
                     {"sides", catalog.sides().size()},
                     {"signatures", catalog.size()}};
    if (!dump) return out;
    ordered_json sides = ordered_json::array();
    for (std::size_t id = 0; id < catalog.sides().size(); ++id) {
        const auto& s = catalog.sides()[id];
        std::vector<int> loose;
        for (int i = 0; i <= s.k; ++i)
            if (s.is_loose(i)) loose.push_back(i);
        ordered_json forced = ordered_json::array();
        for (auto [a, b] : s.forced_pairs) forced.push_back({a, b});
        sides.push_back({{"id", id}, {"edgeMask", s.edge_mask}, {"looseEnds", loose}, {"forcedPairs", forced}});
    }
    out["sideList"] = std::move(sides);
    ordered_json sigs = ordered_json::array();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& sig = catalog[i];
        ordered_json pairs = ordered_json::array();
        for (auto [a, b] : sig.pairing.pairs()) pairs.push_back({end_name(a), end_name(b)});
        sigs.push_back({{"id", i}, {"left", sig.left}, {"right", sig.right}, {"pairing", pairs},
                        {"hamiltonian", is_hamiltonian_signature(sig)}});
    }
    out["signatureList"] = std::move(sigs);
    return out;
}

inline void catalog_text(std::ostream& os, const SignatureCatalog& catalog) {
    os << "sides=" << catalog.sides().size() << " signatures=" << catalog.size() << '\n';
}

inline void series_csv(std::ostream& os, const CountSeries& s) {
    os << (s.has_parity() ? "n,h,h_even,h_odd\n" : "n,h\n");
    for (int n = s.first_n; n <= s.last_n(); ++n) {
        std::size_t i = std::size_t(n - s.first_n);
        os << n << ',' << to_decimal(s.h[i]);
        if (s.has_parity()) os << ',' << to_decimal(s.h_even[i]) << ',' << to_decimal(s.h_odd[i]);
        os << '\n';
    }
}

inline void series_text(std::ostream& os, const CountSeries& s) {
    for (int n = s.first_n; n <= s.last_n(); ++n) {
        std::size_t i = std::size_t(n - s.first_n);
        os << "h_" << s.k << '(' << n << ") = " << to_decimal(s.h[i]);
        if (s.has_parity()) os << " = " << to_decimal(s.h_even[i]) << " + " << to_decimal(s.h_odd[i]);
        os << '\n';
    }
}

inline ordered_json series_json(const CountSeries& s) {
    ordered_json rows = ordered_json::array();
    for (int n = s.first_n; n <= s.last_n(); ++n) {
        std::size_t i = std::size_t(n - s.first_n);
        ordered_json row{{"n", n}, {"h", to_decimal(s.h[i])}};
        if (s.has_parity()) {
            row["h_even"] = to_decimal(s.h_even[i]);
            row["h_odd"] = to_decimal(s.h_odd[i]);
        }
        rows.push_back(std::move(row));
    }
    return {{"schemaVersion", kSchemaVersion}, {"k", s.k}, {"series", std::move(rows)}};
}

inline void poly_csv(std::ostream& os, const Poly& p) {
    os << "degree,coefficient\n";
    for (int i = 0; i <= p.degree(); ++i) os << i << ',' << to_decimal(p[i]) << '\n';
}

struct MineReport {
    int k = 0;
    const SccClassReport* classes = nullptr;
    Algorithm1Result algorithm1;
    MinimalCharpoly minimal;
    HAnnihilator h;
    std::vector<Check> checks;
};

inline ordered_json mine_json(const MineReport& r) {
    ordered_json classes = ordered_json::array();
    ordered_json per_class = ordered_json::object();
    for (const auto& c : r.classes->classes) {
        classes.push_back({{"label", c.label},
                           {"size", c.size},
                           {"selfLoop", c.self_loop},
                           {"count", c.members.size()},
                           {"polynomial", to_string(c.universal)}});
        per_class[c.label] = coefficients(c.universal);
    }
    return {{"schemaVersion", kSchemaVersion},
            {"k", r.k},
            {"sccClasses", std::move(classes)},
            {"perClassPoly", std::move(per_class)},
            {"algorithm1Poly", coefficients(r.algorithm1.polynomial)},
            {"minimalPoly", coefficients(r.minimal.stripped)},
            {"hAnnihilator", coefficients(r.h.polynomial)},
            {"startIndex", r.h.start_index},
            {"checks", checks(r.checks)}};
}

inline void mine_text(std::ostream& os, const MineReport& r) {
    os << "k=" << r.k << " classes=" << r.classes->classes.size() << '\n';
    for (const auto& c : r.classes->classes)
        os << "  class " << c.label << " size=" << c.size << " count=" << c.members.size() << " poly="
           << to_string(c.universal) << '\n';
    os << "algorithm1 degree=" << r.algorithm1.polynomial.degree() << " sinks=" << r.algorithm1.sinks.size() << '\n';
    os << "minimal degree=" << r.minimal.stripped.degree() << '\n';
    os << "h annihilator degree=" << r.h.polynomial.degree() << " start=" << r.h.start_index << '\n';
    os << "h annihilator coefficients=" << format_coefficients(r.h.polynomial) << '\n';
    for (const auto& c : r.checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
}

inline ordered_json verify_json(const std::vector<CriterionResult>& results) {
    ordered_json list = ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        list.push_back({{"id", r.id},
                        {"title", r.title},
                        {"pass", r.pass},
                        {"partial", r.partial},
                        {"checks", checks(r.checks)}});
    }
    return {{"schemaVersion", kSchemaVersion}, {"pass", all}, {"criteria", std::move(list)}};
}

// One line per criterion, then indented per-check lines for failures and annotations.
inline void verify_text(std::ostream& os, const std::vector<CriterionResult>& results, bool timings) {
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title;
        if (r.partial) os << " (partial)";
        if (timings) os << " [" << std::fixed << r.seconds << std::defaultfloat << " s]";
        os << '\n';
        for (const auto& c : r.checks)
            if (!c.pass || is_annotation(c))
                os << "    " << (c.pass ? "note" : "FAIL") << ' ' << c.name << (c.detail.empty() ? "" : ": ")
                   << c.detail << '\n';
    }
}

}  // namespace petersen::report
