#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using holodyn::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "holodyn");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HOLODYN_TEST_DATA) + "/" + name; }

json call_json(std::vector<std::string> args) {
    const auto r = call(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, ParseComplex) {
    using holodyn::cli::parse_complex;
    EXPECT_EQ(parse_complex("1.5"), std::complex<double>(1.5, 0.0));
    EXPECT_EQ(parse_complex("2-3i"), std::complex<double>(2.0, -3.0));
    EXPECT_EQ(parse_complex("i"), std::complex<double>(0.0, 1.0));
    EXPECT_EQ(parse_complex("-i"), std::complex<double>(0.0, -1.0));
    EXPECT_EQ(parse_complex("-0.5i"), std::complex<double>(0.0, -0.5));
    EXPECT_EQ(parse_complex("1e-3+2e+1i"), std::complex<double>(1e-3, 20.0));
    EXPECT_THROW(parse_complex("abc"), std::exception);
}

TEST(Cli, GradedEigenvalues) {
    const auto j = call_json({"graded", "--map", data("diag.json"), "--n", "2"});
    EXPECT_TRUE(j["consistent"].get<bool>());
    EXPECT_EQ(j["eigenvalues"].size(), 3u);
    EXPECT_EQ(j["seed"], 0);
    EXPECT_TRUE(j.contains("tolerances"));
}

TEST(Cli, CertifyRoutes) {
    auto j = call_json({"certify", "--map", data("z2.json"), "--mode", "bounded"});
    EXPECT_EQ(j["certificate"]["verdict"], "Unbounded");
    j = call_json({"certify", "--map", data("translate.json"), "--mode", "hypercyclic"});
    EXPECT_EQ(j["certificate"]["verdict"], "NoObstruction");
    j = call_json({"certify", "--map", data("z2.json"), "--mode", "cyclic", "--r", "2"});
    EXPECT_EQ(j["certificate"]["verdict"], "NotCyclic");
    EXPECT_EQ(j["certificate"]["witness"]["count"], 4);
    j = call_json({"certify", "--map", data("z2.json"), "--mode", "compact", "--point", "1"});
    EXPECT_EQ(j["certificate"]["verdict"], "NonCompact");
    j = call_json({"certify", "--map", data("z2.json"), "--mode", "hypercyclic"});
    EXPECT_EQ(j["certificate"]["verdict"], "NotHypercyclic");
}

TEST(Cli, InapplicableExitCode) {
    const std::string weight = testing::TempDir() + "/u_minus_one.json";
    std::ofstream(weight) << R"({"dim": 1, "terms": [{"alpha": [1], "re": 1}, {"alpha": [0], "re": -1}]})";
    const auto r = call({"certify", "--map", data("z2.json"), "--weight", weight, "--point", "1"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(r.out)["certificate"]["verdict"], "Inapplicable");
}

TEST(Cli, NonPeriodicPointIsPrecondition) {
    EXPECT_EQ(call({"certify", "--map", data("z2.json"), "--point", "2"}).code, 4);
}

TEST(Cli, SearchRepelling) {
    const std::string profile = testing::TempDir() + "/profile.csv";
    const auto j = call_json({"search-repelling", "--map", data("sq_plane.json"), "--profile-out", profile});
    EXPECT_NEAR(j["construction"]["eta"].get<double>(), 2.0, 1e-3);
    std::ifstream in(profile);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "s,H,H'");

    auto r = call({"search-repelling", "--map", data("affine_plane.json")});
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("non-affine"), std::string::npos);
    r = call({"search-repelling", "--map", data("sq_plane.json"), "--s-range=-3,-1"});
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("extend s_range"), std::string::npos);
}

TEST(Cli, FockTables) {
    auto r = call({"--format", "csv", "fock", "--map", data("half.json"), "--N", "6", "--profile"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("n,restriction_norm,loss\n0,1,\n1,0.5,\n2,0.25,"), std::string::npos);
    r = call({"--format", "csv", "fock", "--map", data("z2.json"), "--N", "4"});
    const auto row = r.out.substr(r.out.find("\n4,") + 1);
    EXPECT_NEAR(std::stod(row.substr(2)), std::sqrt(12.0), 1e-12);  // the z^2 -> z^4 column
    EXPECT_EQ(row.substr(row.find('\n') - 2, 2), ",*");
    const auto j = call_json({"fock", "--map", data("z2.json"), "--N", "20"});
    EXPECT_GE(j["sweep"][20]["norm"].get<double>(), 818805.0);
}

TEST(Cli, Henon) {
    auto j = call_json({"henon", "--henon", data("henon.json"), "--r-max", "1"});
    EXPECT_EQ(j["certificate"]["verdict"], "Unbounded");
    const auto r = call({"henon", "--henon", data("henon_bad.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("factors[0].delta"), std::string::npos);
}

TEST(Cli, Duality) {
    const auto j = call_json({"duality", "--input", data("duality.json")});
    EXPECT_TRUE(j["result"]["equivalent"].get<bool>());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({}).code, 1);
    EXPECT_EQ(call({"graded", "--map", data("diag.json"), "--n", "2", "--bogus"}).code, 1);
    EXPECT_EQ(call({"certify", "--map", data("z2.json"), "--mode", "sideways"}).code, 1);
    EXPECT_EQ(call({"certify", "--map", data("missing.json")}).code, 1);
    const auto r = call({"certify", "--map", data("henon.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("dim"), std::string::npos);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"--seed", "17", "henon", "--henon", data("henon.json"), "--r-max", "2"};
    const auto a = call(args);
    const auto b = call(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(json::parse(a.out)["seed"], 17);
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("HOLO_SEED", "99", 1);
    auto j = call_json({"duality", "--input", data("duality.json")});
    EXPECT_EQ(j["seed"], 99);
    j = call_json({"--seed", "5", "duality", "--input", data("duality.json")});
    EXPECT_EQ(j["seed"], 5);
    ::unsetenv("HOLO_SEED");
}

TEST(Cli, TolerancesAreEchoed) {
    const auto j = call_json({"--tol-orbit", "1e-7", "certify", "--map", data("z2.json")});
    EXPECT_DOUBLE_EQ(j["tolerances"]["orbit"].get<double>(), 1e-7);
    EXPECT_DOUBLE_EQ(j["certificate"]["tolerances"]["orbit"].get<double>(), 1e-7);
}

TEST(Cli, HumanFormatRendersJson) {
    const auto r = call({"--format", "human", "duality", "--input", data("duality.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("result.image_cond"), std::string::npos);
}
