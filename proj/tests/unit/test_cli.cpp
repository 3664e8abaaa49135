#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "support/csv_table.hpp"

namespace {

using ar2::test::parse_csv;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ar2::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> words;
    std::istringstream in(text);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

TEST(CliCoeffs, HandRecursionRows) {
    const auto r = invoke({"coeffs", "--phi1", "0.5", "--phi2", "0.3", "--order", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    const double expected[] = {1, 0.5, 0.55, 0.425, 0.3775};
    ASSERT_EQ(t.rows.size(), 5u);
    for (std::size_t u = 0; u < 5; ++u) {
        EXPECT_EQ(t.at(u, "u"), std::to_string(u));
        for (const char* c : {"psi_recursion", "psi_closed_form", "psi_partial_fractions", "psi_cauchy"}) {
            EXPECT_NEAR(t.num(u, c), expected[u], 1e-12) << c << " u=" << u;
        }
        EXPECT_LE(t.num(u, "max_pairwise_relative_diff"), 1e-12);
    }
}

TEST(CliCoeffs, ExactFibonacciColumn) {
    const auto r = invoke({"coeffs", "--phi1", "1", "--phi2", "1", "--order", "6", "--exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    const char* fib[] = {"1", "1", "2", "3", "5", "8", "13"};
    ASSERT_EQ(t.rows.size(), 7u);
    for (std::size_t u = 0; u < 7; ++u) EXPECT_EQ(t.at(u, "psi_exact"), fib[u]);
}

TEST(CliCoeffs, OrderZero) {
    const auto r = invoke({"coeffs", "--order", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.at(0, "u"), "0");
    EXPECT_EQ(t.num(0, "psi_recursion"), 1.0);
}

TEST(CliCoeffs, ExactNeedsIntegers) {
    const auto r = invoke({"coeffs", "--phi1", "0.5", "--phi2", "1", "--exact"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
}

TEST(CliCoeffs, OverflowIsMachineReadable) {
    const auto r = invoke({"coeffs", "--phi1", "1", "--phi2", "1", "--order", "200", "--exact"});
    EXPECT_EQ(r.code, 3);
    const auto err = nlohmann::json::parse(r.err);
    EXPECT_EQ(err["error"], "overflow");
    EXPECT_TRUE(err["message"].is_string());
}

TEST(CliCoeffs, JsonMirrorsCsv) {
    const auto r = invoke({"coeffs", "--phi1", "0.5", "--phi2", "0.3", "--order", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["metadata"]["command"], "coeffs");
    ASSERT_EQ(doc["rows"].size(), 3u);
    EXPECT_DOUBLE_EQ(doc["rows"][2]["psi_recursion"].get<double>(), 0.55);
}

TEST(CliCheck, BoxWithoutStationarityWarns) {
    const auto r = invoke({"check", "--phi1", "1.5", "--phi2", "0.6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.at(0, "stationary"), "false");
    EXPECT_EQ(t.at(0, "box_condition"), "true");
    ASSERT_EQ(t.warnings.size(), 1u);
    EXPECT_NE(r.err.find("WARNING"), std::string::npos);
}

TEST(CliCheck, StationaryMargin) {
    const auto r = invoke({"check", "--phi1", "0.5", "--phi2", "0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.at(0, "stationary"), "true");
    EXPECT_NEAR(t.num(0, "margin"), 0.148, 1e-3);
    EXPECT_TRUE(t.warnings.empty());
    EXPECT_TRUE(r.err.empty());
}

TEST(CliCheck, WhiteNoiseRoots) {
    const auto r = invoke({"check", "--phi1", "0", "--phi2", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.at(0, "stationary"), "true");
    for (const char* c : {"c1_re", "c1_im", "c2_re", "c2_im"}) EXPECT_EQ(t.num(0, c), 0.0);
}

TEST(CliAcf, YuleWalkerValues) {
    const auto r = invoke({"acf", "--phi1", "0.5", "--phi2", "0.3", "--sigma", "1", "--maxlag", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_NEAR(t.num(0, "gamma_yule_walker"), 2.243589, 1e-6);
    EXPECT_NEAR(t.num(1, "gamma_yule_walker"), 1.602564, 1e-6);
    EXPECT_LE(t.num(0, "relative_diff"), 1e-8);
    EXPECT_LE(t.num(1, "relative_diff"), 1e-8);
}

TEST(CliAcf, ScaledWhiteNoise) {
    const auto r = invoke({"acf", "--phi1", "0", "--phi2", "0", "--sigma", "2", "--maxlag", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    const double expected[] = {4, 0, 0};
    for (std::size_t h = 0; h < 3; ++h) {
        EXPECT_EQ(t.num(h, "gamma_ma_sum"), expected[h]);
        EXPECT_EQ(t.num(h, "gamma_yule_walker"), expected[h]);
    }
}

TEST(CliAcf, NonStationaryExitsThree) {
    const auto r = invoke({"acf", "--phi1", "1.5", "--phi2", "0.6"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(nlohmann::json::parse(r.err)["error"], "domain");
}

TEST(CliSimulate, DiffWithinReportedBound) {
    const auto r = invoke({"simulate", "--phi1", "0.5", "--phi2", "0.3", "--n", "10000", "--seed", "42"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    const double bound = std::stod(t.meta.at("agreement_bound"));
    const std::size_t order = std::stoul(t.meta.at("truncation_order"));
    EXPECT_GT(bound, 0.0);
    std::size_t compared = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.at(i, "abs_diff").empty()) continue;
        EXPECT_LE(t.num(i, "abs_diff"), bound);
        ++compared;
    }
    EXPECT_EQ(compared, 10000 - order);
    EXPECT_EQ(t.meta.at("noise_algorithm"), "philox4x32-10/as241/v1");
}

TEST(CliSimulate, RepeatIsByteIdentical) {
    const std::vector<std::string> args = {"simulate", "--phi1", "-0.4", "--phi2", "0.2", "--n", "3000", "--seed", "7"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(CliSimulate, ImpulseReproducesCoefficients) {
    const auto sim = invoke({"simulate", "--phi1", "0.5", "--phi2", "0.3", "--n", "120", "--impulse"});
    const auto co = invoke({"coeffs", "--phi1", "0.5", "--phi2", "0.3", "--order", "50"});
    ASSERT_EQ(sim.code, 0) << sim.err;
    ASSERT_EQ(co.code, 0) << co.err;
    const auto s = parse_csv(sim.out);
    const auto c = parse_csv(co.out);
    for (std::size_t u = 0; u <= 50; ++u) EXPECT_EQ(s.at(u, "y_recursive"), c.at(u, "psi_recursion")) << u;
}

TEST(CliSimulate, NonStationaryNeedsRecursiveGenerator) {
    EXPECT_EQ(invoke({"simulate", "--phi1", "1.5", "--phi2", "0.6", "--n", "50"}).code, 3);
    const auto r = invoke({"simulate", "--phi1", "1.5", "--phi2", "0.6", "--n", "50", "--generator", "recursive"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.rows.size(), 50u);
    EXPECT_EQ(t.col("y_ma"), t.columns.size());
    EXPECT_FALSE(t.warnings.empty());
}

TEST(CliSimulate, HeaderInvocationReproducesFile) {
    const auto dir = std::filesystem::temp_directory_path() / "ar2_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "sim.csv").string();
    const auto r = invoke({"simulate", "--phi1", "0.25", "--phi2", "-0.5", "--n", "500", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const auto first = slurp(path);
    const auto t = parse_csv(first);
    EXPECT_EQ(t.meta.at("phi1"), "0.25");
    EXPECT_EQ(t.meta.at("phi2"), "-0.5");
    auto words = split_words(t.meta.at("invocation"));
    ASSERT_EQ(words.front(), "ar2");
    words.erase(words.begin());
    std::filesystem::remove(path);
    ASSERT_EQ(invoke(words).code, 0);
    EXPECT_EQ(slurp(path), first);
    std::filesystem::remove_all(dir);
}

TEST(CliSimulate, ConfigEchoIsExact) {
    const auto r = invoke({"simulate", "--phi1", "0.1", "--phi2", "0.7", "--sigma", "0.3", "--n", "200",
                           "--precision", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(std::stod(t.meta.at("phi1")), 0.1);
    EXPECT_EQ(std::stod(t.meta.at("phi2")), 0.7);
    EXPECT_EQ(std::stod(t.meta.at("sigma")), 0.3);
}

TEST(CliVerify, DefaultRunPasses) {
    const auto r = invoke({"verify"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_GE(doc["rows"].size(), 5u);
    for (const auto& row : doc["rows"]) {
        EXPECT_TRUE(row["passed"].get<bool>()) << row.dump();
        EXPECT_GT(row["cases"].get<std::uint64_t>(), 0u);
    }
}

TEST(CliVerify, UnattainableToleranceFails) {
    const auto r = invoke({"verify", "--grid", "3", "--tol", "1e-30"});
    EXPECT_EQ(r.code, 1);
    ASSERT_FALSE(r.err.empty());
    std::istringstream lines(r.err);
    std::string line;
    std::size_t records = 0;
    while (std::getline(lines, line)) {
        const auto rec = nlohmann::json::parse(line);
        EXPECT_FALSE(rec["passed"].get<bool>());
        EXPECT_GT(rec["failures"].get<std::uint64_t>(), 0u);
        ++records;
    }
    EXPECT_GE(records, 1u);
}

TEST(CliVerify, SmallGrid) {
    const auto r = invoke({"verify", "--grid", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["metadata"]["grid"], 3);
}

TEST(CliUsage, ParseErrorsExitTwo) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"coeffs", "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"coeffs", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"acf", "--method", "magic"}).code, 2);
    EXPECT_EQ(invoke({"coeffs", "--phi1", "abc"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--sigma", "-1"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(CliUsage, HelpExitsZero) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(CliUsage, NonFiniteParameterRejected) {
    EXPECT_EQ(invoke({"check", "--phi1", "nan"}).code, 2);
}

}  // namespace
