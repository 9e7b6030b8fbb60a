#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "itbatch/optimizer.hpp"
#include "itbatch/workloads.hpp"
#include "support/oracles.hpp"

using namespace itbatch;

namespace {

HotspotWorkload hot_cell(std::size_t rows, std::size_t cols, std::size_t layers) {
    Grid3 t(layers, rows, cols, 1.0);
    t(layers / 2, rows / 2, cols / 2) = 100.0;
    const int dims = layers > 1 ? 3 : 2;
    return HotspotWorkload(std::move(t), Grid3(layers, rows, cols), 0.9 / (2.0 * dims));
}

std::vector<WorkloadState> small_instances() {
    return {make_vector_workload(257, 0.999), make_hotspot_workload(9, 7, 1),
            make_hotspot_workload(6, 5, 4), make_cavity_workload({6, 5, 7})};
}

}  // namespace

// ---------------------------------------------------------------------------
// Vector
// ---------------------------------------------------------------------------

TEST(VectorScale, IdentityScale) {
    auto w = make_vector_workload(100, 1.0);
    EXPECT_EQ(vector_scale_step(w).values, w.values);
}

TEST(VectorScale, PowersOfTwoAreExact) {
    WorkloadState w = VectorWorkload{std::vector<double>(64, 1.0), 2.0};
    w = run_loop(ChainProgram::vector_scale(), w, 10);
    for (double v : std::get<VectorWorkload>(w).values) EXPECT_EQ(v, 1024.0);
}

TEST(VectorScale, MatchesScalarLoop) {
    auto w = make_vector_workload(1000, 1.37, 5);
    const auto out = vector_scale_step(w);
    ASSERT_EQ(out.length(), 1000u);
    for (std::size_t i = 0; i < 1000; ++i) EXPECT_EQ(out.values[i], w.values[i] * 1.37);
}

TEST(RunLoop, VectorClosedForm) {
    VectorWorkload v{{}, 3.0};
    for (int i = 1; i <= 20; ++i) v.values.push_back(i);
    const auto out = std::get<VectorWorkload>(run_loop(ChainProgram::vector_scale(), v, 12));
    for (int i = 1; i <= 20; ++i) EXPECT_EQ(out.values[i - 1], i * 531441.0);
}

TEST(RunLoop, ZeroIterationsIsIdentity) {
    for (const auto& w : small_instances()) {
        EXPECT_EQ(state_checksum(run_loop(ChainProgram::for_state(w), w, 0)), state_checksum(w));
    }
}

TEST(RunLoop, FdtdRunsTwoStepsPerIteration) {
    const WorkloadState w = make_cavity_workload({6, 4, 5});
    WorkloadState manual = w;
    for (int i = 0; i < 10; ++i) {
        manual = apply_step(KernelStep::FdtdMagnetic, manual);
        manual = apply_step(KernelStep::FdtdElectric, manual);
    }
    EXPECT_EQ(state_checksum(run_loop(ChainProgram::fdtd(), w, 10)), state_checksum(manual));
    EXPECT_EQ(ChainProgram::fdtd().steps().size(), 2u);
    EXPECT_EQ(ChainProgram::fdtd().steps()[0], KernelStep::FdtdMagnetic);
}

TEST(ChainProgram, Validation) {
    EXPECT_THROW(ChainProgram({}), std::invalid_argument);
    const WorkloadState v = make_vector_workload(8, 2.0);
    EXPECT_THROW(apply_step(KernelStep::HotspotDiffuse, v), std::invalid_argument);
    EXPECT_THROW(run_loop(ChainProgram::fdtd(), v, 1), std::invalid_argument);
    EXPECT_THROW(run_batched(ChainProgram::vector_scale(), v, 0, 1), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Batched order
// ---------------------------------------------------------------------------

TEST(RunBatched, VectorMatchesLoop) {
    const WorkloadState w = make_vector_workload(1000, 1.01);
    const auto p = ChainProgram::vector_scale();
    EXPECT_EQ(state_checksum(run_batched(p, w, 4, 3)), state_checksum(run_loop(p, w, 12)));
    EXPECT_EQ(std::get<VectorWorkload>(run_batched(p, w, 4, 3)).values,
              std::get<VectorWorkload>(run_loop(p, w, 12)).values);
}

TEST(RunBatched, HotspotMatchesLoop) {
    const WorkloadState w = make_hotspot_workload(16, 16, 1);
    const auto p = ChainProgram::hotspot();
    const auto batched = std::get<HotspotWorkload>(run_batched(p, w, 5, 2));
    const auto loop = std::get<HotspotWorkload>(run_loop(p, w, 10));
    EXPECT_EQ(batched.temperature(), loop.temperature());
}

TEST(RunBatched, EveryFactorizationMatchesLoop) {
    for (const auto& w : small_instances()) {
        const auto program = ChainProgram::for_state(w);
        for (std::uint64_t ik : {12u, 60u}) {
            const auto reference = state_checksum(run_loop(program, w, ik));
            for (auto s : feasible_batch_sizes(ik)) {
                ASSERT_EQ(state_checksum(run_batched(program, w, s, ik / s)), reference)
                    << "index " << w.index() << " I_k " << ik << " S " << s;
            }
        }
    }
}

TEST(Steppers, ThreadCountIndependent) {
    for (const auto& w : small_instances()) {
        const auto program = ChainProgram::for_state(w);
        const auto single = state_checksum(run_batched(program, w, 3, 5, {1}));
        for (unsigned workers : {2u, 3u, 8u}) {
            EXPECT_EQ(state_checksum(run_batched(program, w, 3, 5, {workers})), single)
                << "index " << w.index() << " workers " << workers;
        }
    }
}

// ---------------------------------------------------------------------------
// Hotspot
// ---------------------------------------------------------------------------

TEST(Hotspot, UniformWithoutPowerIsSteady) {
    const HotspotWorkload w(Grid3(3, 10, 12, 42.5), Grid3(3, 10, 12), 0.1);
    EXPECT_EQ(hotspot_step(w).temperature(), w.temperature());
}

TEST(Hotspot, TwoDimensionalHotCellStaysFourFoldSymmetric) {
    const std::size_t n = 11;
    WorkloadState w = hot_cell(n, n, 1);
    for (int step = 1; step <= 40; ++step) {
        w = apply_step(KernelStep::HotspotDiffuse, w);
        const auto& t = std::get<HotspotWorkload>(w).temperature();
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                ASSERT_EQ(t(0, r, c), t(0, n - 1 - r, c));
                ASSERT_EQ(t(0, r, c), t(0, r, n - 1 - c));
                ASSERT_EQ(t(0, r, c), t(0, c, r));
            }
        }
    }
}

TEST(Hotspot, ThreeDimensionalHotCellStaysSymmetric) {
    const std::size_t n = 7;
    WorkloadState w = hot_cell(n, n, n);
    for (int step = 1; step <= 20; ++step) {
        w = apply_step(KernelStep::HotspotDiffuse, w);
        const auto& t = std::get<HotspotWorkload>(w).temperature();
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    // Mirror images are exact; axis swaps reorder one sum.
                    ASSERT_EQ(t(l, r, c), t(n - 1 - l, r, c));
                    ASSERT_EQ(t(l, r, c), t(l, n - 1 - r, c));
                    ASSERT_EQ(t(l, r, c), t(l, r, n - 1 - c));
                    ASSERT_NEAR(t(l, r, c), t(c, r, l), 1e-13 * std::abs(t(l, r, c)));
                    ASSERT_NEAR(t(l, r, c), t(l, c, r), 1e-13 * std::abs(t(l, r, c)));
                }
    }
}

TEST(Hotspot, MatchesDenseReference) {
    for (std::size_t layers : {1u, 4u}) {
        auto w = make_hotspot_workload(8, 8, layers, 77);
        auto dense = oracle::to_dense(w.temperature());
        const auto power = oracle::to_dense(w.power());
        for (int step = 0; step < 5; ++step) {
            w = hotspot_step(w);
            dense = oracle::hotspot_reference_step(dense, power, w.diffusion_coefficient());
        }
        for (std::size_t l = 0; l < layers; ++l)
            for (std::size_t r = 0; r < 8; ++r)
                for (std::size_t c = 0; c < 8; ++c) {
                    EXPECT_NEAR(w.temperature()(l, r, c), dense[l][r][c], 1e-12 * std::abs(dense[l][r][c]));
                }
    }
}

TEST(Hotspot, MaximumPrincipleWithoutPower) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-5.0, 50.0);
    for (std::size_t layers : {1u, 5u}) {
        Grid3 t(layers, 13, 9);
        for (auto& v : t.data()) v = u(rng);
        const int dims = layers > 1 ? 3 : 2;
        WorkloadState w = HotspotWorkload(t, Grid3(layers, 13, 9), HotspotWorkload::max_stable_diffusion(dims));
        for (int step = 0; step < 200; ++step) {
            const auto before = std::get<HotspotWorkload>(w).temperature().data();
            const double max0 = *std::max_element(before.begin(), before.end());
            const double min0 = *std::min_element(before.begin(), before.end());
            w = apply_step(KernelStep::HotspotDiffuse, w);
            const auto after = std::get<HotspotWorkload>(w).temperature().data();
            // A few ulps of slack: the update is a convex combination only in exact arithmetic.
            const double slack = 8.0 * std::numeric_limits<double>::epsilon() * 50.0;
            ASSERT_LE(*std::max_element(after.begin(), after.end()), max0 + slack);
            ASSERT_GE(*std::min_element(after.begin(), after.end()), min0 - slack);
        }
    }
}

TEST(Hotspot, ConstructionChecks) {
    EXPECT_THROW(HotspotWorkload(Grid3(1, 4, 4), Grid3(1, 4, 5), 0.1), std::invalid_argument);
    EXPECT_THROW(HotspotWorkload(Grid3(1, 4, 4), Grid3(1, 4, 4), 0.26), std::invalid_argument);
    EXPECT_THROW(HotspotWorkload(Grid3(2, 4, 4), Grid3(2, 4, 4), 0.2), std::invalid_argument);
    EXPECT_THROW(HotspotWorkload(Grid3(1, 4, 4), Grid3(1, 4, 4), -0.01), std::invalid_argument);
    EXPECT_THROW(HotspotWorkload(Grid3(), Grid3(), 0.1), std::invalid_argument);
    EXPECT_NO_THROW(HotspotWorkload(Grid3(2, 4, 4), Grid3(2, 4, 4), 1.0 / 6.0));
}

// ---------------------------------------------------------------------------
// Checksums and timing
// ---------------------------------------------------------------------------

TEST(Checksum, Fnv1aOverLittleEndianBytes) {
    EXPECT_EQ(state_checksum(VectorWorkload{{}, 1.0}), 0xcbf29ce484222325ULL);
    // 1.0 = 0x3ff0000000000000, bytes 00 00 00 00 00 00 f0 3f.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned byte : {0x00u, 0x00u, 0x00u, 0x00u, 0x00u, 0x00u, 0xf0u, 0x3fu}) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    }
    EXPECT_EQ(state_checksum(VectorWorkload{{1.0}, 1.0}), h);

    auto a = make_vector_workload(10, 2.0);
    auto b = a;
    EXPECT_EQ(state_checksum(a), state_checksum(b));
    b.values[3] = std::nextafter(b.values[3], 10.0);
    EXPECT_NE(state_checksum(a), state_checksum(b));
}

TEST(TimeWorkload, ProducesOneSamplePerRepeat) {
    const WorkloadState w = make_hotspot_workload(16, 16, 1);
    const auto plan = BatchPlan::from_batch_size(20, 5);
    for (auto mode : {RunMode::Loop, RunMode::Batched}) {
        const auto series = time_workload(ChainProgram::hotspot(), w, plan, mode, 10);
        ASSERT_EQ(series.points.size(), 1u);
        EXPECT_EQ(series.points[0].batch_size, 5u);
        const auto stats = series.points[0].stats();
        EXPECT_EQ(stats.n, 10u);
        EXPECT_GT(stats.mean, 0.0);
    }
    const auto once = time_workload(ChainProgram::hotspot(), w, plan, RunMode::Batched, 1);
    EXPECT_EQ(once.points[0].stats().std_dev, 0.0);
    EXPECT_THROW(time_workload(ChainProgram::hotspot(), w, plan, RunMode::Loop, 0), std::invalid_argument);
}
