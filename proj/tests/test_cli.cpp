#include "hdcov/cli.hpp"
#include "hdcov/numerics.hpp"
#include "hdcov/spectral.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace hdcov;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hdcov");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("hdcov_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const Eigen::MatrixXd& m, char delim = ',') {
        const auto path = (dir_ / name).string();
        std::ofstream f(path);
        f.precision(17);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                f << (j ? std::string(1, delim) : "") << m(i, j);
            }
            f << '\n';
        }
        return path;
    }

    std::string write_text(const std::string& name, const std::string& text) {
        const auto path = (dir_ / name).string();
        std::ofstream(path) << text;
        return path;
    }

    static Eigen::MatrixXd gaussian(std::uint64_t seed, Eigen::Index n, Eigen::Index p) {
        const auto v = sample_standard_normal(RandomStream(seed, 0), static_cast<std::size_t>(n * p));
        return Eigen::Map<const Eigen::MatrixXd>(v.data(), n, p);
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, Help) {
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    EXPECT_EQ(run({"one-sample", "--help"}).code, kExitOk);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"one-sample"}).code, kExitUsage);
    EXPECT_EQ(run({"constants", "--p", "5"}).code, kExitUsage);
    EXPECT_EQ(run({"constants", "--p", "5", "--n", "50", "--n1", "40", "--n2", "40"}).code, kExitUsage);
    EXPECT_EQ(run({"one-sample", "x.csv", "--tail", "lower"}).code, kExitUsage);
    EXPECT_EQ(run({"reproduce-table", "table9"}).code, kExitUsage);
    EXPECT_EQ(run({"two-sample", "a", "b", "--beta", "1", "--estimate-beta"}).code, kExitUsage);
}

TEST_F(CliTest, DataErrors) {
    EXPECT_EQ(run({"one-sample", (dir_ / "missing.csv").string()}).code, kExitData);
    const auto ragged = write_text("ragged.csv", "1,2\n3\n");
    const auto r = run({"one-sample", ragged});
    EXPECT_EQ(r.code, kExitData);
    EXPECT_NE(r.err.find("expected 2 fields"), std::string::npos);
    const auto wide = write("wide.csv", gaussian(1, 5, 8));
    EXPECT_EQ(run({"one-sample", wide}).code, kExitData);
    EXPECT_EQ(run({"constants", "--p", "50", "--n", "50"}).code, kExitData);
    EXPECT_EQ(run({"mp-pdf", "--y", "1.5"}).code, kExitData);
    EXPECT_EQ(run({"reproduce-table", "table1", "--scale", "2"}).code, kExitData);
}

TEST_F(CliTest, ConstantsOneSample) {
    const auto r = run({"constants", "--p", "50", "--n", "500"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("lsd_functional,0.05175535908"), std::string::npos);
    EXPECT_NE(r.out.find("mean,0.05268025783"), std::string::npos);
}

TEST_F(CliTest, ConstantsTwoSampleJson) {
    const auto r = run({"constants", "--p", "40", "--n1", "400", "--n2", "800", "--beta", "6", "--output", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j.at("mean").get<double>(), 0.117707074900981, 1e-12);
    EXPECT_EQ(j.at("scenario"), "two_sample");
}

TEST_F(CliTest, OneSampleOutputs) {
    const auto path = write("x.csv", gaussian(2, 200, 10));
    const auto csv = run({"one-sample", path});
    ASSERT_EQ(csv.code, kExitOk) << csv.err;
    EXPECT_EQ(csv.out.rfind("field,value\nmethod,clrt_one\n", 0), 0u);
    const auto json = run({"one-sample", path, "--output", "json", "--method", "lrt"});
    ASSERT_EQ(json.code, kExitOk);
    EXPECT_EQ(nlohmann::json::parse(json.out).at("chi_square_dof").get<int>(), 55);
}

TEST_F(CliTest, TransposeAndDelimiter) {
    const Eigen::MatrixXd x = gaussian(3, 100, 6);
    const auto a = run({"one-sample", write("rows.csv", x), "--output", "json"});
    const auto b = run({"one-sample", write("cols.tsv", x.transpose(), '\t'), "--transpose", "--delimiter", "tab",
                        "--output", "json"});
    ASSERT_EQ(a.code, kExitOk);
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_NEAR(nlohmann::json::parse(a.out).at("standardized").get<double>(),
                nlohmann::json::parse(b.out).at("standardized").get<double>(), 1e-12);
}

TEST_F(CliTest, Sigma0Reduction) {
    // Data with covariance A tested against A equals A^{-1/2}-whitened data tested against I.
    const Eigen::MatrixXd z = gaussian(4, 300, 5);
    Eigen::MatrixXd a = gaussian(5, 5, 5);
    a = a * a.transpose() + 5.0 * Eigen::MatrixXd::Identity(5, 5);
    a = 0.5 * (a + a.transpose()).eval();
    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    const Eigen::MatrixXd x = z * llt.matrixL().transpose();
    const auto with = run({"one-sample", write("x.csv", x), "--sigma0", write("a.csv", a), "--output", "json"});
    ASSERT_EQ(with.code, kExitOk) << with.err;
    const Eigen::MatrixXd whitened = x * inverse_sqrt_spd(a);
    const auto direct = run({"one-sample", write("w.csv", whitened), "--output", "json"});
    EXPECT_NEAR(nlohmann::json::parse(with.out).at("standardized").get<double>(),
                nlohmann::json::parse(direct.out).at("standardized").get<double>(), 1e-9);
    Eigen::MatrixXd asym = a;
    asym(0, 1) += 0.5;
    EXPECT_EQ(run({"one-sample", write("x2.csv", x), "--sigma0", write("asym.csv", asym)}).code, kExitData);
    EXPECT_EQ(run({"one-sample", write("x3.csv", x), "--sigma0", write("small.csv", a.topLeftCorner(3, 3))}).code,
              kExitData);
}

TEST_F(CliTest, TwoSample) {
    const auto x = write("x.csv", gaussian(6, 200, 8));
    const auto y = write("y.csv", gaussian(7, 100, 8));
    const auto r = run({"two-sample", x, y, "--beta", "2", "--output", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("beta").get<double>(), 2.0);
    EXPECT_EQ(j.at("ratios").at("n2").get<int>(), 100);
    const auto est = run({"two-sample", x, y, "--estimate-beta", "--output", "json"});
    ASSERT_EQ(est.code, kExitOk);
    EXPECT_NEAR(nlohmann::json::parse(est.out).at("beta").get<double>(), 0.0, 0.3);
    const auto z = write("z.csv", gaussian(8, 100, 7));
    EXPECT_EQ(run({"two-sample", x, z}).code, kExitData);
}

TEST_F(CliTest, SimulateReportsSeed) {
    const auto r = run({"simulate", "--p", "5", "--n", "60", "--replications", "30"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream in(r.out);
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(row.substr(row.size() - 3), ",42");
    const auto again = run({"simulate", "--p", "5", "--n", "60", "--replications", "30", "--workers", "2"});
    EXPECT_EQ(again.out, r.out);
    const auto two = run({"simulate", "--scenario", "two_sample", "--p", "4", "--n1", "60", "--n2", "40",
                          "--replications", "20", "--alternative", "--seed", "9", "--output", "json"});
    ASSERT_EQ(two.code, kExitOk) << two.err;
    const auto j = nlohmann::json::parse(two.out);
    EXPECT_EQ(j.at("config").at("seed").get<int>(), 9);
    EXPECT_EQ(j.at("config").at("alternative").at("leading").get<double>(), 3.0);
    EXPECT_EQ(run({"simulate", "--scenario", "two_sample", "--p", "4", "--n1", "60"}).code, kExitData);
}

TEST_F(CliTest, Densities) {
    const auto r = run({"mp-pdf", "--y", "0.25", "--points", "5"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.rfind("x,density\n0.25,0\n", 0), 0u);
    const auto f = run({"fisher-pdf", "--y1", "0.05", "--y2", "0.05", "--points", "3"});
    ASSERT_EQ(f.code, kExitOk);
    EXPECT_NE(f.out.find("1.90803301921,0"), std::string::npos);
    EXPECT_EQ(run({"fisher-pdf", "--y1", "0.05", "--y2", "0.05", "--points", "1"}).code, kExitData);
}
