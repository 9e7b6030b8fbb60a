#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>

#include "steps.hpp"

namespace itbatch {

ChainProgram::ChainProgram(std::vector<KernelStep> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("a chain program needs at least one step");
}

ChainProgram ChainProgram::for_state(const WorkloadState& w) {
    switch (w.index()) {
        case 0: return vector_scale();
        case 1: return hotspot();
        default: return fdtd();
    }
}

namespace {

[[noreturn]] void mismatch(KernelStep step) {
    throw std::invalid_argument("kernel step " + std::to_string(static_cast<int>(step)) +
                                " does not apply to this workload");
}

// Steps `in` into `out`; both must hold the same alternative and shape.
void step_into(KernelStep step, const WorkloadState& in, WorkloadState& out,
               const StepOptions& opts) {
    switch (step) {
        case KernelStep::VectorScale:
            if (!std::holds_alternative<VectorWorkload>(in)) mismatch(step);
            vector_scale_into(std::get<VectorWorkload>(in), std::get<VectorWorkload>(out), opts);
            return;
        case KernelStep::HotspotDiffuse:
            if (!std::holds_alternative<HotspotWorkload>(in)) mismatch(step);
            hotspot_step_into(std::get<HotspotWorkload>(in), std::get<HotspotWorkload>(out), opts);
            return;
        case KernelStep::FdtdMagnetic:
            if (!std::holds_alternative<FdtdWorkload>(in)) mismatch(step);
            fdtd_h_step_into(std::get<FdtdWorkload>(in), std::get<FdtdWorkload>(out), opts);
            return;
        case KernelStep::FdtdElectric:
            if (!std::holds_alternative<FdtdWorkload>(in)) mismatch(step);
            fdtd_e_step_into(std::get<FdtdWorkload>(in), std::get<FdtdWorkload>(out), opts);
            return;
    }
    mismatch(step);
}

// Two state buffers; every step writes the idle one and flips.
class DoubleBuffer {
public:
    explicit DoubleBuffer(WorkloadState initial) : front_(std::move(initial)), back_(front_) {}

    void apply(KernelStep step, const StepOptions& opts) {
        step_into(step, front_, back_, opts);
        std::swap(front_, back_);
    }

    WorkloadState release() { return std::move(front_); }

private:
    WorkloadState front_;
    WorkloadState back_;
};

std::vector<KernelStep> unroll(const ChainProgram& program, std::uint64_t batch_size) {
    std::vector<KernelStep> chain;
    chain.reserve(batch_size * program.steps().size());
    for (std::uint64_t s = 0; s < batch_size; ++s) {
        chain.insert(chain.end(), program.steps().begin(), program.steps().end());
    }
    return chain;
}

void fnv1a(std::uint64_t& hash, std::span<const double> values) {
    constexpr std::uint64_t kPrime = 0x100000001b3ULL;
    for (double v : values) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (bits >> (8 * byte)) & 0xffU;
            hash *= kPrime;
        }
    }
}

}  // namespace

WorkloadState apply_step(KernelStep step, const WorkloadState& w, const StepOptions& opts) {
    WorkloadState out = w;
    step_into(step, w, out, opts);
    return out;
}

WorkloadState run_loop(const ChainProgram& program, WorkloadState w,
                       std::uint64_t total_iterations, const StepOptions& opts) {
    if (total_iterations == 0) return w;
    DoubleBuffer buffers(std::move(w));
    for (std::uint64_t it = 0; it < total_iterations; ++it) {
        for (KernelStep step : program.steps()) buffers.apply(step, opts);
    }
    return buffers.release();
}

WorkloadState run_batched(const ChainProgram& program, WorkloadState w,
                          std::uint64_t batch_size, std::uint64_t num_batches,
                          const StepOptions& opts) {
    if (batch_size == 0 || num_batches == 0) {
        throw std::invalid_argument("batch size and batch count must be >= 1");
    }
    // Building: one node per kernel step of every iteration in the batch.
    const std::vector<KernelStep> chain = unroll(program, batch_size);

    // Launching
    DoubleBuffer buffers(std::move(w));
    for (std::uint64_t b = 0; b < num_batches; ++b) {
        for (KernelStep node : chain) buffers.apply(node, opts);
    }
    return buffers.release();
}

MeasurementSeries time_workload(const ChainProgram& program, const WorkloadState& initial,
                                const BatchPlan& plan, RunMode mode, std::size_t repeats,
                                const StepOptions& opts) {
    if (repeats == 0) throw std::invalid_argument("repeats must be >= 1");
    using Clock = std::chrono::steady_clock;

    MeasurementSeries series;
    series.label = mode == RunMode::Loop ? "loop" : "batched";
    MeasurementPoint point{plan.batch_size(), {}};
    point.samples.reserve(repeats);

    std::uint64_t sink = 0;
    for (std::size_t r = 0; r < repeats; ++r) {
        WorkloadState fresh = initial;
        const auto start = Clock::now();
        WorkloadState result =
            mode == RunMode::Loop
                ? run_loop(program, std::move(fresh), plan.total_kernel_executions(), opts)
                : run_batched(program, std::move(fresh), plan.batch_size(), plan.num_batches(),
                              opts);
        const auto stop = Clock::now();
        sink ^= result.index();
        const double seconds = std::chrono::duration<double>(stop - start).count();
        // steady_clock ticks are nanoseconds; a zero reading still means work ran.
        point.samples.push_back(seconds > 0.0 ? seconds : 1e-9);
    }
    static_cast<void>(sink);
    series.points.push_back(std::move(point));
    return series;
}

std::uint64_t state_checksum(const WorkloadState& w) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    std::visit(
        [&](const auto& state) {
            using T = std::decay_t<decltype(state)>;
            if constexpr (std::is_same_v<T, VectorWorkload>) {
                fnv1a(hash, state.values);
            } else if constexpr (std::is_same_v<T, HotspotWorkload>) {
                fnv1a(hash, state.temperature().data());
                fnv1a(hash, state.power().data());
            } else {
                for (const Grid3* g : state.fields()) fnv1a(hash, g->data());
            }
        },
        w);
    return hash;
}

}  // namespace itbatch
