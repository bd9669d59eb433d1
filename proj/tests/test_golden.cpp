#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "petersen/golden.hpp"
#include "petersen/report.hpp"
#include "petersen/verify.hpp"

namespace {

using namespace petersen;
namespace fs = std::filesystem;

// Copy of the data directory with one file's content replaced.
fs::path corrupted_copy(const std::string& file, const std::string& from, const std::string& to) {
    fs::path dir = fs::temp_directory_path() / ("census_golden_" + file);
    fs::remove_all(dir);
    fs::copy(golden::data_dir(), dir);
    std::ifstream in(dir / file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto at = text.find(from);
    EXPECT_NE(at, std::string::npos);
    text.replace(at, from.size(), to);
    std::ofstream(dir / file) << text;
    return dir;
}

TEST(Golden, SeriesFilesCoverTheTabulatedRange) {
    auto h3 = golden::read_series_csv(golden::data_dir() / "h3.csv");
    auto h4 = golden::read_series_csv(golden::data_dir() / "h4.csv");
    EXPECT_EQ(h3.first, 1);
    EXPECT_EQ(h3.last(), 38);
    EXPECT_EQ(h4.last(), 162);
    EXPECT_EQ(h4.at(162), parse_integer("2991220108882081740"));
}

TEST(Golden, PolynomialFilesMatchFactorProducts) {
    golden::FactorTable f = golden::read_factors(golden::data_dir() / "factors_k3.txt");
    for (auto& [name, p] : golden::read_factors(golden::data_dir() / "factors_k4.txt")) f[name] = p;
    auto products = golden::read_key_values(golden::data_dir() / "products.txt");
    Poly p = golden::read_poly_file(golden::data_dir() / "P.txt");
    Poly q = golden::read_poly_file(golden::data_dir() / "Q.txt");
    EXPECT_EQ(p.degree(), 38);
    EXPECT_EQ(q.degree(), 162);
    EXPECT_EQ(golden::eval_product(products.at("P"), f), p);
    EXPECT_EQ(golden::eval_product(products.at("Q"), f), q);
    EXPECT_EQ(golden::eval_product("P1*P2*P3*P4*P5*P6", f), Poly::monomial(12) - Poly::one());
    EXPECT_THROW(golden::eval_product("P99", f), std::runtime_error);
}

TEST(Golden, RejectsMalformedSeries) {
    fs::path dir = corrupted_copy("h3.csv", "\n5,", "\n6,");
    EXPECT_THROW(golden::read_series_csv(dir / "h3.csv"), std::runtime_error);
}

TEST(Golden, RhoFixtureShape) {
    auto relations = golden::read_relations(golden::data_dir() / "xi4_relations.txt");
    ASSERT_EQ(relations.size(), 13u);
    auto fx = golden::read_rho_fixture(golden::data_dir() / "rho_fixture.txt", relations);
    EXPECT_EQ(fx.component_names.size(), 9u);
    EXPECT_EQ(fx.succ.size(), 3u * 13u + 2u * 3u + 4u);
    EXPECT_EQ(scc_decompose(fx.succ).size(), 9u);
}

TEST(Golden, CorruptedCatalogCountIsNamed) {
    Workspace ws(corrupted_copy("catalog_counts.csv", "3,33,1705", "3,33,1706"));
    auto r = suite::catalog_counts(ws, {3});
    EXPECT_FALSE(r.pass);
    bool named = false;
    for (const auto& c : r.checks) named = named || (!c.pass && c.name == "k=3 signatures");
    EXPECT_TRUE(named);
}

TEST(Golden, CorruptedTableValueFailsPipelineAgreement) {
    Workspace ws(corrupted_copy("h3.csv", "38,53736", "38,53737"));
    auto r = suite::pipeline_agreement(ws, {3});
    EXPECT_FALSE(r.pass);
}

TEST(Golden, CorruptedFactorFailsPolynomialTable) {
    Workspace ws(corrupted_copy("factors_k3.txt", "P7 = -1,-1,0,-1,0,0,1", "P7 = -1,1,0,-1,0,0,1"));
    auto r = suite::polynomial_tables(ws, {3});
    EXPECT_FALSE(r.pass);
    bool named = false;
    for (const auto& c : r.checks) named = named || (!c.pass && c.name == "k=3 class 13");
    EXPECT_TRUE(named);
}

TEST(Golden, KFiveRunsCatalogOnlyAndIsPartial) {
    Workspace ws;
    auto results = run_suite(ws, {5});
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(results[0].id, 1);
    EXPECT_TRUE(results[0].partial);
    EXPECT_TRUE(results[0].pass);
}

TEST(Report, SeriesCsvAndJson) {
    CountSeries s;
    s.k = 3;
    s.first_n = 9;
    s.h = {Integer(9), parse_integer("123456789012345678901234567890")};
    std::ostringstream csv;
    report::series_csv(csv, s);
    EXPECT_EQ(csv.str(), "n,h\n9,9\n10,123456789012345678901234567890\n");
    auto j = report::series_json(s);
    EXPECT_EQ(j["schemaVersion"], report::kSchemaVersion);
    EXPECT_EQ(j["series"][1]["h"], "123456789012345678901234567890");
}

}  // namespace
