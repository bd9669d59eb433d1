#pragma once

// Readers for the checked-in reference data (data/ directory):
//   h3.csv, h4.csv           n,h for the tabulated range
//   P.txt, Q.txt             ascending integer coefficients on one line
//   factors_k3.txt, ...      "name = c0,c1,..." lines
//   products.txt             "name = F1*F2^2*..." lines
//   scc_classes_k*.csv       label,size,self_loop,product
//   parity_k3.txt            key = value lines
//   xi4_relations.txt        "i: j1 j2" lines
//   rho_fixture.txt          component/arc/init/target/result records
// Lines starting with '#' are comments everywhere.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "petersen/integer.hpp"
#include "petersen/linear_system.hpp"
#include "petersen/poly.hpp"
#include "petersen/scc.hpp"

#ifndef PETERSEN_DATA_DIR
#define PETERSEN_DATA_DIR "data"
#endif

namespace petersen::golden {

inline std::filesystem::path data_dir() {
    if (const char* env = std::getenv("CENSUS_DATA_DIR"); env && *env) return env;
    return PETERSEN_DATA_DIR;
}

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Non-empty, non-comment lines.
inline std::vector<std::string> read_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

inline std::vector<Integer> parse_integer_list(const std::string& s) {
    std::vector<Integer> out;
    for (const auto& item : split(s, ',')) {
        Integer v;
        if (item.empty() || v.set_str(item, 10) != 0) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

inline std::map<std::string, std::string> read_key_values(const std::filesystem::path& file) {
    std::map<std::string, std::string> out;
    for (const auto& line : read_lines(file)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error(file.string() + ": expected 'key = value': " + line);
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

inline const std::string& require(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error("missing key '" + key + "'");
    return it->second;
}

// CSV with header "n,h" and consecutive n.
inline IndexedSequence read_series_csv(const std::filesystem::path& file) {
    auto lines = read_lines(file);
    if (lines.empty() || lines[0] != "n,h") throw std::runtime_error(file.string() + ": expected header n,h");
    IndexedSequence s;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split(lines[i], ',');
        if (cells.size() != 2) throw std::runtime_error(file.string() + ": bad row " + lines[i]);
        long n = std::stol(cells[0]);
        if (i == 1) s.first = n;
        else if (n != s.last() + 1) throw std::runtime_error(file.string() + ": non-consecutive n at " + cells[0]);
        s.values.push_back(parse_integer(cells[1]));
    }
    return s;
}

inline Poly read_poly_file(const std::filesystem::path& file) {
    auto lines = read_lines(file);
    if (lines.size() != 1) throw std::runtime_error(file.string() + ": expected one line of coefficients");
    return parse_coefficients(lines[0]);
}

using FactorTable = std::map<std::string, Poly>;

inline FactorTable read_factors(const std::filesystem::path& file) {
    FactorTable out;
    for (auto& [name, coeffs] : read_key_values(file)) out[name] = parse_coefficients(coeffs);
    return out;
}

// Evaluates "1" or "F1*F2^2*...".
inline Poly eval_product(const std::string& expr, const FactorTable& factors) {
    Poly out = Poly::one();
    if (trim(expr) == "1") return out;
    for (const auto& term : split(expr, '*')) {
        auto caret = term.find('^');
        std::string name = trim(term.substr(0, caret));
        int power = caret == std::string::npos ? 1 : std::stoi(term.substr(caret + 1));
        auto it = factors.find(name);
        if (it == factors.end()) throw std::runtime_error("unknown factor '" + name + "'");
        out *= it->second.pow(power);
    }
    return out;
}

struct ClassRow {
    std::string label;
    std::size_t size = 0;
    bool self_loop = false;
    std::string product;
};

inline std::vector<ClassRow> read_class_table(const std::filesystem::path& file) {
    auto lines = read_lines(file);
    if (lines.empty() || lines[0] != "label,size,self_loop,polynomial")
        throw std::runtime_error(file.string() + ": unexpected header");
    std::vector<ClassRow> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split(lines[i], ',');
        if (cells.size() != 4) throw std::runtime_error(file.string() + ": bad row " + lines[i]);
        out.push_back(ClassRow{cells[0], std::stoul(cells[1]), cells[2] == "1", cells[3]});
    }
    return out;
}

// Successor lists of a relation table; node i (1-based in the file) becomes i-1.
inline AdjacencyList read_relations(const std::filesystem::path& file) {
    std::map<int, std::vector<int>> rel;
    for (const auto& line : read_lines(file)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error(file.string() + ": bad relation " + line);
        int target = std::stoi(line.substr(0, colon));
        std::stringstream in(line.substr(colon + 1));
        int source;
        while (in >> source) rel[target].push_back(source);
    }
    AdjacencyList succ(rel.size());
    for (auto& [target, sources] : rel)
        for (int s : sources) {
            if (s < 1 || s > int(rel.size()) || target < 1 || target > int(rel.size()))
                throw std::runtime_error(file.string() + ": node out of range");
            succ[std::size_t(s - 1)].push_back(std::uint32_t(target - 1));
        }
    for (auto& out : succ) std::sort(out.begin(), out.end());
    return succ;
}

struct RhoFixture {
    AdjacencyList succ;
    std::vector<Integer> initial;
    std::vector<std::string> component_names;
    std::vector<std::vector<std::uint32_t>> component_nodes;
    AdjacencyList condensation;  // by component_names index
    std::uint32_t target = 0;
    std::string expected_result;
};

inline RhoFixture read_rho_fixture(const std::filesystem::path& file, const AdjacencyList& relations) {
    RhoFixture fx;
    std::map<std::string, std::size_t> index;
    auto component = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw std::runtime_error(file.string() + ": unknown component " + name);
        return it->second;
    };
    auto node = [&](const std::string& name, int one_based) {
        const auto& nodes = fx.component_nodes[component(name)];
        if (one_based < 1 || one_based > int(nodes.size())) throw std::runtime_error(file.string() + ": bad node");
        return nodes[std::size_t(one_based - 1)];
    };
    auto add_node = [&]() {
        fx.succ.emplace_back();
        return std::uint32_t(fx.succ.size() - 1);
    };
    for (const auto& line : read_lines(file)) {
        std::stringstream in(line);
        std::string kind;
        in >> kind;
        if (kind == "component") {
            std::string name, shape;
            in >> name >> shape;
            index[name] = fx.component_names.size();
            fx.component_names.push_back(name);
            fx.condensation.emplace_back();
            std::vector<std::uint32_t> nodes;
            if (shape == "single") {
                nodes.push_back(add_node());
            } else if (shape == "cycle3") {
                for (int i = 0; i < 3; ++i) nodes.push_back(add_node());
                for (int i = 0; i < 3; ++i) fx.succ[nodes[std::size_t(i)]].push_back(nodes[std::size_t((i + 1) % 3)]);
            } else if (shape == "relations") {
                for (std::size_t i = 0; i < relations.size(); ++i) nodes.push_back(add_node());
                for (std::size_t i = 0; i < relations.size(); ++i)
                    for (auto j : relations[i]) fx.succ[nodes[i]].push_back(nodes[j]);
            } else {
                throw std::runtime_error(file.string() + ": unknown component shape " + shape);
            }
            fx.component_nodes.push_back(std::move(nodes));
        } else if (kind == "arc") {
            std::string a, b;
            in >> a >> b;
            fx.succ[node(a, 1)].push_back(node(b, 1));
            fx.condensation[component(a)].push_back(std::uint32_t(component(b)));
        } else if (kind == "init") {
            std::string name, value;
            int which;
            in >> name >> which >> value;
            fx.initial.resize(fx.succ.size());
            fx.initial[node(name, which)] = parse_integer(value);
        } else if (kind == "target") {
            std::string name;
            int which;
            in >> name >> which;
            fx.target = node(name, which);
        } else if (kind == "result") {
            std::getline(in, fx.expected_result);
            fx.expected_result = trim(fx.expected_result);
        } else {
            throw std::runtime_error(file.string() + ": unknown record " + kind);
        }
    }
    fx.initial.resize(fx.succ.size());
    for (auto& out : fx.succ) std::sort(out.begin(), out.end());
    return fx;
}

}  // namespace petersen::golden
