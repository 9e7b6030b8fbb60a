#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "itbatch/cli.hpp"

using namespace itbatch;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("itbatch_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        const auto path = dir_ / name;
        std::ofstream(path) << content;
        return path.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

const char* kHandParams = "t_k=1\nt_i=0.1\nt_a=0.5\nt_l=0.2\nk_c=0.01\nb_c=0.05\n";

const char* kReferenceParams = R"(t_k = 3.56e-6
t_i = 1e-6
t_a = 2.77e-6
t_l = 2.77e-6
k_c = 4.18e-6
b_c = 1.59e-4
)";

}  // namespace

TEST_F(CliTest, SimulateHandExample) {
    const auto params = file("p.txt", kHandParams);
    const auto r = run({"simulate", "--params", params, "--iterations", "4", "--batch-size", "2",
                        "--trace", path("trace.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "0.070000000,4.900000000,4.970000000\n");
    EXPECT_TRUE(fs::exists(path("trace.csv")));

    const auto base = run({"simulate", "--params", params, "--iterations", "3", "--mode", "baseline"});
    ASSERT_EQ(base.code, 0) << base.err;
    EXPECT_EQ(base.out, "0.000000000,4.200000000,4.200000000\n");
}

TEST_F(CliTest, SimulateUsageErrors) {
    const auto params = file("p.txt", kHandParams);
    EXPECT_EQ(run({"simulate", "--params", params, "--iterations", "4"}).code, kExitUsage);
    EXPECT_EQ(run({"simulate", "--params", params, "--iterations", "10", "--batch-size", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"simulate", "--params", params, "--iterations", "4", "--batch-size", "2", "--mode", "x"}).code,
              kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);

    const auto bad = file("bad.txt", "t_k=1\ntk=2\n");
    const auto r = run({"simulate", "--params", bad, "--iterations", "4", "--batch-size", "2"});
    EXPECT_EQ(r.code, kExitDataError);
    EXPECT_NE(r.err.find(":2"), std::string::npos) << r.err;
}

TEST_F(CliTest, OptimizeReferenceRow) {
    const auto params = file("p.txt", kReferenceParams);
    const auto r = run({"optimize", "--params", params, "--iterations", "10000"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("80,125,", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("6.50726e+01"), std::string::npos) << r.out;

    const auto mem = file("m.txt", std::string(kReferenceParams) + "m_base = 1000\nm_node = 10\n");
    const auto capped = run({"optimize", "--params", mem, "--iterations", "10000", "--mem-cap", "1500"});
    ASSERT_EQ(capped.code, 0) << capped.err;
    EXPECT_EQ(capped.out.rfind("50,200,", 0), 0u) << capped.out;

    EXPECT_EQ(run({"optimize", "--params", params, "--iterations", "10000", "--mem-cap", "1500"}).code,
              kExitDataError);
    EXPECT_EQ(run({"optimize", "--params", params, "--iterations", "10000", "--validity-fraction", "2"}).code,
              kExitUsage);
}

TEST_F(CliTest, FitCreationAndExecution) {
    std::ostringstream creation, execution;
    creation.precision(17);
    execution.precision(17);
    creation << "batch_size,run_index,seconds\n";
    execution << "batch_size,run_index,seconds\n";
    for (int s : {1, 10, 100, 1000}) {
        for (int r = 0; r < 3; ++r) {
            creation << s << ',' << r << ',' << 4.18e-6 * s + 1.59e-4 << '\n';
            execution << s << ',' << r << ',' << 1.77e-2 / s + 4.56e-2 << '\n';
        }
    }
    const auto c = file("c.csv", creation.str());
    const auto e = file("e.csv", execution.str());

    auto r = run({"fit", "--input", c, "--kind", "creation"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("creation,4.18000e-06,1.59000e-04,", 0), 0u) << r.out;
    EXPECT_EQ(r.out.substr(r.out.size() - 3), ",4\n");

    r = run({"fit", "--input", e, "--kind", "execution"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("execution,1.77000e-02,4.56000e-02,", 0), 0u) << r.out;

    r = run({"fit", "--input", e, "--kind", "execution", "--total-iterations", "1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(r.out.size() - 3), ",3\n") << r.out;

    EXPECT_EQ(run({"fit", "--input", e, "--kind", "execution", "--validity-fraction", "0.5"}).code, kExitUsage);
    EXPECT_EQ(run({"fit", "--input", e, "--kind", "other"}).code, kExitUsage);
    EXPECT_EQ(run({"fit", "--input", path("missing.csv"), "--kind", "creation"}).code, kExitDataError);
    const auto one = file("one.csv", "batch_size,run_index,seconds\n8,0,1.0\n");
    EXPECT_EQ(run({"fit", "--input", one, "--kind", "creation"}).code, kExitDataError);
}

TEST_F(CliTest, SpeedupMatchesBatchSizes) {
    const auto base = file("b.csv", "batch_size,run_index,seconds\n100,0,0.0200\n100,1,0.0201\n7,0,1\n");
    const auto graph = file("g.csv", "batch_size,run_index,seconds\n100,0,0.0127\n100,1,0.0126\n");
    auto r = run({"speedup", "--baseline", base, "--graph", graph});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("1.58", 0), 0u) << r.out;
    EXPECT_NE(r.err.find("batch_size 7"), std::string::npos) << r.err;

    const auto other = file("o.csv", "batch_size,run_index,seconds\n50,0,0.01\n");
    r = run({"speedup", "--baseline", base, "--graph", other});
    EXPECT_EQ(r.code, kExitDataError);
}

TEST_F(CliTest, RunWorkloadChecksumsAgreeAcrossModes) {
    for (const std::string family : {"vector", "hotspot2d", "hotspot3d", "fdtd"}) {
        const std::string size = family == "vector" ? "1000" : family == "hotspot2d" ? "16,12" : "6";
        const auto loop = run({"run-workload", "--workload", family, "--size", size, "--iterations", "12",
                               "--batch-size", "1", "--mode", "loop", "--checksum"});
        ASSERT_EQ(loop.code, 0) << loop.err;
        ASSERT_EQ(loop.out.size(), 17u) << loop.out;
        for (const std::string s : {"2", "3", "12"}) {
            const auto batched = run({"run-workload", "--workload", family, "--size", size, "--iterations", "12",
                                      "--batch-size", s, "--mode", "batched", "--checksum", "--workers", "2"});
            ASSERT_EQ(batched.code, 0) << batched.err;
            EXPECT_EQ(batched.out, loop.out) << family << " S=" << s;
        }
    }
}

TEST_F(CliTest, RunWorkloadTimings) {
    auto r = run({"run-workload", "--workload", "vector", "--size", "100", "--iterations", "20", "--batch-size",
                  "5", "--mode", "batched", "--repeats", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("# schema=1\nbatch_size,run_index,seconds\n5,0,", 0), 0u) << r.out;

    r = run({"run-workload", "--workload", "hotspot2d", "--size", "8", "--iterations", "20", "--batch-size", "4",
             "--mode", "loop", "--timings", path("t.csv"), "--checksum"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.size(), 17u);
    std::ifstream in(path("t.csv"));
    std::string all((std::istreambuf_iterator<char>(in)), {});
    EXPECT_NE(all.find("4,9,"), std::string::npos) << all;

    EXPECT_EQ(run({"run-workload", "--workload", "vector", "--size", "10", "--iterations", "10", "--batch-size",
                   "3", "--mode", "loop"}).code,
              kExitUsage);
    EXPECT_EQ(run({"run-workload", "--workload", "vector", "--size", "10,2", "--iterations", "10",
                   "--batch-size", "2", "--mode", "loop"}).code,
              kExitUsage);
    EXPECT_EQ(run({"run-workload", "--workload", "fdtd", "--size", "4,4", "--iterations", "2", "--batch-size",
                   "1", "--mode", "loop"}).code,
              kExitUsage);
}
