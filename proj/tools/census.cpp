#include <fstream>
#include <iostream>
#include <new>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "petersen/counts.hpp"
#include "petersen/golden.hpp"
#include "petersen/graph.hpp"
#include "petersen/recurrence_lab.hpp"
#include "petersen/report.hpp"
#include "petersen/verify.hpp"

namespace {

using namespace petersen;

struct RunConfig {
    std::vector<int> k;
    int n = 0;
    int n_max = 0;
    bool parity = false;
    bool dump = false;
    std::string format = "text";
    std::string out;
    unsigned threads = 1;
    std::uint64_t seed = 1;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + cfg.out);
    file << text;
}

int single_k(const RunConfig& cfg) {
    if (cfg.k.size() != 1) throw std::invalid_argument("exactly one --k is required");
    return cfg.k.front();
}

int cmd_catalog(const RunConfig& cfg) {
    int k = single_k(cfg);
    if (k < 1 || k > kMaxK) throw std::invalid_argument("--k must be in 1.." + std::to_string(kMaxK));
    SignatureCatalog catalog(k);
    std::ostringstream os;
    if (cfg.format == "json") os << report::catalog_json(catalog, cfg.dump).dump(2) << '\n';
    else if (cfg.format == "csv") os << "k,sides,signatures\n" << k << ',' << catalog.sides().size() << ',' << catalog.size() << '\n';
    else report::catalog_text(os, catalog);
    emit(cfg, os.str());
    return 0;
}

int cmd_count(const RunConfig& cfg) {
    int k = single_k(cfg);
    if (k < 1 || k > kMaxK) throw std::invalid_argument("--k must be in 1.." + std::to_string(kMaxK));
    if (cfg.n_max < 3 * k) throw std::invalid_argument("--n-max must be at least 3k = " + std::to_string(3 * k));
    TransferPipeline pipeline(k);
    CountSeries s = count_series(pipeline, cfg.n_max, cfg.parity, cfg.threads);
    std::ostringstream os;
    if (cfg.format == "json") os << report::series_json(s).dump(2) << '\n';
    else if (cfg.format == "csv") report::series_csv(os, s);
    else report::series_text(os, s);
    emit(cfg, os.str());
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    int k = single_k(cfg);
    if (k < 1 || cfg.n < 2 * k + 1 || cfg.n > 18) throw std::invalid_argument("need k >= 1 and 2k+1 <= n <= 18");
    auto count = count_ham_cycles_oracle(cfg.n, k);
    std::ostringstream os;
    if (cfg.format == "json")
        os << report::ordered_json{{"schemaVersion", report::kSchemaVersion}, {"n", cfg.n}, {"k", k}, {"h", std::to_string(count)}}
                  .dump(2)
           << '\n';
    else if (cfg.format == "csv") os << "n,h\n" << cfg.n << ',' << count << '\n';
    else os << count << '\n';
    emit(cfg, os.str());
    return 0;
}

int cmd_mine(const RunConfig& cfg) {
    int k = single_k(cfg);
    if (k != 3 && k != 4) throw std::invalid_argument("mine supports k = 3 and 4");
    Workspace ws(golden::data_dir(), cfg.threads, cfg.seed);
    const auto& pipeline = ws.pipeline(k);
    report::MineReport r;
    r.k = k;
    r.classes = &ws.classes(k);
    r.algorithm1 = ws.algorithm1_all(k);
    r.minimal = ws.minimal(k);
    // Enough terms for Berlekamp-Massey to certify the degree (at least 2d + 8),
    // with the tabulated n < 3k values in front so the start index is exact.
    int terms = 2 * r.minimal.stripped.degree() + 16;
    r.h = h_annihilator(ws.series(k, pipeline.n0() + terms).sequence());
    r.checks.push_back({"algorithm1 polynomial divisible by minimal polynomial",
                        divides(r.minimal.stripped, r.algorithm1.polynomial), ""});
    r.checks.push_back({"h annihilator divides minimal polynomial", divides(strip_x_power(r.h.polynomial), r.minimal.stripped), ""});
    r.checks.push_back({"minimal polynomial verified on the full state vector", r.minimal.verified, ""});
    std::ostringstream os;
    if (cfg.format == "json") os << report::mine_json(r).dump(2) << '\n';
    else if (cfg.format == "csv") report::poly_csv(os, r.h.polynomial);
    else report::mine_text(os, r);
    emit(cfg, os.str());
    bool ok = true;
    for (const auto& c : r.checks) ok = ok && c.pass;
    return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    std::set<int> ks(cfg.k.begin(), cfg.k.end());
    if (ks.empty()) ks = {3, 4};
    for (int k : ks)
        if (k < 3 || k > 5) throw std::invalid_argument("verify supports k = 3, 4, 5");
    Workspace ws(golden::data_dir(), cfg.threads, cfg.seed);
    auto results = run_suite(ws, ks);
    std::ostringstream os;
    if (cfg.format == "json") os << report::verify_json(results).dump(2) << '\n';
    else report::verify_text(os, results, false);
    emit(cfg, os.str());
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycle census for generalized Petersen graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "inner step k");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out, "write output to this file");
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--seed", cfg.seed, "seed for random projections");
    };

    auto* catalog = app.add_subcommand("catalog", "side-intersection and signature counts");
    common(catalog);
    catalog->add_flag("--dump", cfg.dump, "include the full catalog (json)");

    auto* count = app.add_subcommand("count", "h_k(n) for 3k <= n <= n-max");
    common(count);
    count->add_option("--n-max", cfg.n_max, "last n")->required();
    count->add_flag("--parity", cfg.parity, "split by loose-end parity");

    auto* oracle = app.add_subcommand("oracle", "brute-force Hamiltonian cycle count of G(n,k)");
    common(oracle);
    oracle->add_option("--n", cfg.n, "n")->required();

    auto* mine = app.add_subcommand("mine", "characteristic polynomial report");
    common(mine);

    auto* verify = app.add_subcommand("verify", "run the golden-data checks");
    common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*catalog) return cmd_catalog(cfg);
        if (*count) return cmd_count(cfg);
        if (*oracle) return cmd_oracle(cfg);
        if (*mine) return cmd_mine(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
