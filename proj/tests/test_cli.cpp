#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qlogic_cli/commands.hpp"
#include "qlogic_cli/json_io.hpp"

using namespace qlogic;
using namespace qlogic::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    std::vector<Json> lines() const {
        std::vector<Json> v;
        std::istringstream in(out);
        for (std::string line; std::getline(in, line);) {
            v.push_back(Json::parse(line));
        }
        return v;
    }
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string &name) {
    return std::string(QLOGIC_SAMPLES_DIR) + "/" + name;
}

ComplexMatrix value_of(const Json &j) {
    return matrix_from_json(j.at("value"));
}

}  // namespace

TEST(CliEval, CommutingConverseWitnessIsTrue) {
    for (const char *j : {"sasaki", "contrapositive", "relevance"}) {
        const Result r = invoke({"eval", sample("converse_witness.qf"), sample("registry_commuting.json"),
                                 "--conditional", j});
        ASSERT_EQ(r.code, kOk) << r.err;
        const Json line = r.lines().at(0);
        EXPECT_TRUE(line.at("is_identity").get<bool>());
        EXPECT_FALSE(line.at("strict").get<bool>());
        EXPECT_EQ(line.at("rank").get<int>(), 2);
        EXPECT_EQ(line.at("conditional").get<std::string>(), j);
    }
}

TEST(CliEval, NonCommutingConverseWitnessIsStrict) {
    for (const char *j : {"sasaki", "contrapositive", "relevance"}) {
        const Result r = invoke({"eval", sample("converse_witness.qf"), sample("registry_noncommuting.json"),
                                 "--conditional", j});
        ASSERT_EQ(r.code, kOk) << r.err;
        const Json line = r.lines().at(0);
        EXPECT_TRUE(line.at("strict").get<bool>());
        EXPECT_LT(line.at("rank").get<int>(), 2);
    }
}

TEST(CliEval, ErrorExitCodes) {
    EXPECT_EQ(invoke({"eval", sample("converse_witness.qf"), sample("malformed.json")}).code, kParseError);
    EXPECT_EQ(invoke({"eval", sample("converse_witness.qf"), sample("no_such_file.json")}).code, kParseError);
    EXPECT_EQ(invoke({"eval", sample("unbounded.qf"), sample("registry_commuting.json")}).code, kUnsupported);
    EXPECT_EQ(invoke({"eval", sample("converse_witness.qf"), sample("registry_mixed_dims.json")}).code,
              kDimensionError);
    EXPECT_EQ(invoke({"eval", sample("converse_witness.qf"), sample("registry_commuting.json"), "--conditional",
                      "material"})
                  .code,
              kConfigError);
    EXPECT_EQ(invoke({"frobnicate"}).code, kConfigError);
    EXPECT_EQ(invoke({"eval"}).code, kConfigError);
}

TEST(CliEval, RegistryRejectsCyclesAndBadWeights) {
    const Tolerance tol;
    const Json cyclic = Json::parse(R"({"dim": 1, "names": {"a": {"entries": [{"child": "b", "weight":
        {"dim": 1, "entries": [[[1, 0]]]}}]}, "b": {"entries": [{"child": "a", "weight":
        {"dim": 1, "entries": [[[1, 0]]]}}]}}})");
    EXPECT_THROW(registry_from_json(cyclic, tol), InputError);
    const Json bad = Json::parse(R"({"dim": 1, "names": {"a": {"entries": [{"child": {"dim": 1, "entries": []},
        "weight": {"dim": 1, "entries": [[[0.5, 0]]]}}]}}})");
    EXPECT_THROW(registry_from_json(bad, tol), InvalidProjection);
}

TEST(CliJson, MatrixAndRealRoundTrip) {
    ComplexMatrix m(2, 2);
    m << Complex(1, 0), Complex(0, -2), Complex(0, 2), Complex(3, 0);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
    const QuantumReal u = observable_to_real(Observable(m));
    const QuantumReal back = real_from_json(real_to_json(u), {});
    EXPECT_EQ(back.jumps(), u.jumps());
    EXPECT_THROW(complex_from_json(Json::parse("[1]")), InputError);
    EXPECT_THROW(observable_from_json(Json::parse(R"({"dim": 1, "entries": [[[1, 0]]], "spectrum": [2]})"), {}),
                 InputError);
}

TEST(CliSelftest, SmallRunPassesAndIsDeterministic) {
    const Result a = invoke({"selftest", "--dims", "2..3", "--trials", "3", "--seed", "7"});
    ASSERT_EQ(a.code, kOk) << a.err;
    const Result b = invoke({"selftest", "--dims", "2..3", "--trials", "3", "--seed", "7"});
    EXPECT_EQ(a.out, b.out);
    const std::vector<Json> lines = a.lines();
    const Json &summary = lines.back();
    EXPECT_EQ(summary.at("command"), "selftest");
    EXPECT_EQ(summary.at("seed").get<int>(), 7);
    EXPECT_TRUE(summary.at("pass").get<bool>());
    EXPECT_EQ(lines.size(), summary.at("checks").get<std::size_t>() + 1);
    EXPECT_NE(a.err.find("wall time"), std::string::npos);
    EXPECT_EQ(a.out.find("wall"), std::string::npos);
}

TEST(CliSelftest, DefaultRunPasses) {
    const Result r = invoke({"selftest"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(r.lines().back().at("pass").get<bool>());
}

TEST(CliSelftest, ZeroTrialsIsVacuousPassWithWarning) {
    const Result r = invoke({"selftest", "--trials", "0"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_TRUE(r.lines().back().at("vacuous").get<bool>());
}

TEST(CliSelftest, ConfigErrors) {
    EXPECT_EQ(invoke({"selftest", "--eps-rank", "1e-6", "--eps-compare", "1e-9"}).code, kConfigError);
    EXPECT_EQ(invoke({"selftest", "--dims", "6..2"}).code, kConfigError);
    EXPECT_EQ(invoke({"selftest", "--dims", "two"}).code, kConfigError);
    EXPECT_EQ(invoke({"selftest", "--trials", "-1"}).code, kConfigError);
    EXPECT_EQ(invoke({"selftest", "--trials", "many"}).code, kConfigError);
}

TEST(CliSelftest, SeedFallsBackToEnvironment) {
    ::setenv("QLOGIC_SEED", "42", 1);
    const Result r = invoke({"selftest", "--dims", "2", "--trials", "1"});
    const Result bad = [] {
        ::setenv("QLOGIC_SEED", "forty-two", 1);
        return invoke({"selftest", "--dims", "2", "--trials", "1"});
    }();
    ::unsetenv("QLOGIC_SEED");
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.lines().back().at("seed").get<int>(), 42);
    EXPECT_EQ(bad.code, kConfigError);
}

TEST(CliSelftest, OutFlagWritesFile) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / "qlogic_cli_out.jsonl";
    const Result r = invoke({"selftest", "--dims", "2", "--trials", "1", "--out", path.string()});
    ASSERT_EQ(r.code, kOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string first;
    ASSERT_TRUE(std::getline(in, first));
    EXPECT_EQ(Json::parse(first).at("suite"), "linalg");
    std::filesystem::remove(path);
}

TEST(CliOrder, WorkedExample) {
    const Result r = invoke({"order", sample("observable_plus.json"), sample("observable_diag01.json")});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Json line = r.lines().at(0);
    EXPECT_FALSE(line.at("spectral_order_leq").get<bool>());
    const Json &sasaki = line.at("truth_values").at(0);
    EXPECT_EQ(sasaki.at("conditional"), "sasaki");
    EXPECT_EQ(sasaki.at("rank").get<int>(), 1);
    ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
    e1(1, 1) = 1.0;
    EXPECT_LE((value_of(sasaki) - e1).norm(), 1e-10);
}

TEST(CliOrder, MeasurementReport) {
    const Result one =
        invoke({"order", sample("observable_plus.json"), sample("observable_diag01.json"), sample("psi_one.json")});
    ASSERT_EQ(one.code, kOk) << one.err;
    const Json m = one.lines().at(0).at("measurement");
    EXPECT_TRUE(m.at("all_agree").get<bool>());
    const Json &s = m.at("verdicts").at(0);
    EXPECT_EQ(s.at("conditional"), "sasaki");
    EXPECT_TRUE(s.at("member").get<bool>());
    EXPECT_NEAR(s.at("tail_mass").get<double>(), 0.0, 1e-15);

    const Result zero = invoke(
        {"order", sample("observable_plus.json"), sample("observable_diag01.json"), sample("psi_zero.json")});
    ASSERT_EQ(zero.code, kOk);
    EXPECT_FALSE(zero.lines().at(0).at("measurement").at("verdicts").at(0).at("member").get<bool>());
}

TEST(CliOrder, CommutingOrderedPairGivesIdentity) {
    const Result r = invoke({"order", sample("observable_diag012.json"), sample("observable_diag112.json")});
    ASSERT_EQ(r.code, kOk);
    const Json line = r.lines().at(0);
    EXPECT_TRUE(line.at("spectral_order_leq").get<bool>());
    ASSERT_EQ(line.at("truth_values").size(), 3u);
    for (const Json &v : line.at("truth_values")) {
        EXPECT_TRUE(v.at("is_identity").get<bool>());
    }
    const Result one = invoke({"order", sample("observable_diag012.json"), sample("observable_diag112.json"),
                               "--conditional", "relevance"});
    EXPECT_EQ(one.lines().at(0).at("truth_values").size(), 1u);
}

TEST(CliOrder, DimensionMismatch) {
    EXPECT_EQ(invoke({"order", sample("observable_plus.json"), sample("observable_diag012.json")}).code,
              kDimensionError);
    EXPECT_EQ(invoke({"order", sample("observable_plus.json"), sample("observable_diag01.json"),
                      sample("malformed.json")})
                  .code,
              kParseError);
}

TEST(CliBinary, ExitCodesPropagate) {
    const std::string cli = QLOGIC_CLI_PATH;
    auto status = [](const std::string &cmd) {
        const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    EXPECT_EQ(status(cli + " eval " + sample("converse_witness.qf") + " " + sample("registry_noncommuting.json")), 0);
    EXPECT_EQ(status(cli + " eval " + sample("converse_witness.qf") + " " + sample("malformed.json")), 2);
    EXPECT_EQ(status(cli + " --help"), 0);
}
