#include "itbatch/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "io/text.hpp"
#include "itbatch/io.hpp"
#include "itbatch/optimizer.hpp"
#include "itbatch/simulator.hpp"
#include "itbatch/workloads.hpp"

namespace itbatch {

namespace {

// Bad argument values that CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimulateArgs {
    std::string params;
    std::uint64_t iterations = 0;
    std::optional<std::uint64_t> batch_size;
    std::string mode = "graph";
    std::optional<std::string> trace;
};

struct FitArgs {
    std::string input;
    std::string kind;
    std::optional<std::uint64_t> total_iterations;
    std::optional<double> validity_fraction;
};

struct OptimizeArgs {
    std::string params;
    std::uint64_t iterations = 0;
    std::optional<double> mem_cap;
    double validity_fraction = kDefaultValidityFraction;
};

struct WorkloadArgs {
    std::string workload;
    std::string size;
    std::uint64_t iterations = 0;
    std::uint64_t batch_size = 0;
    std::string mode;
    std::size_t repeats = 10;
    std::optional<std::string> timings;
    bool checksum = false;
    unsigned workers = 1;
};

struct SpeedupArgs {
    std::string baseline;
    std::string graph;
};

BatchPlan plan_or_usage(std::uint64_t total, std::uint64_t batch_size) {
    try {
        return BatchPlan::from_batch_size(total, batch_size);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DataError("cannot write '" + path + "'");
    return file;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
    const ParamsFile params = parse_params(args.params);
    EventTrace trace;
    if (args.mode == "graph") {
        if (!args.batch_size) throw UsageError("--batch-size is required in graph mode");
        trace = simulate_graph(params.timing, plan_or_usage(args.iterations, *args.batch_size));
    } else {
        if (args.iterations == 0) throw UsageError("--iterations must be >= 1");
        trace = simulate_baseline(params.timing, args.iterations);
    }
    if (args.trace) {
        auto file = open_output(*args.trace);
        write_trace(file, trace);
    }
    out << format_summary(trace_summary(trace)) << '\n';
    return kExitOk;
}

int cmd_fit(const FitArgs& args, std::ostream& out) {
    if (args.validity_fraction && !args.total_iterations) {
        throw UsageError("--validity-fraction needs --total-iterations");
    }
    MeasurementSeries series = parse_measurements(args.input);
    if (args.total_iterations) {
        series = fit_validity_filter(series, args.validity_fraction.value_or(kDefaultValidityFraction),
                                     *args.total_iterations);
    }
    const FitResult fit = args.kind == "creation" ? fit_creation(series) : fit_execution(series);
    out << format_fit(fit) << '\n';
    return kExitOk;
}

int cmd_optimize(const OptimizeArgs& args, std::ostream& out) {
    if (args.iterations == 0) throw UsageError("--iterations must be >= 1");
    if (!(args.validity_fraction > 0.0) || args.validity_fraction > 1.0) {
        throw UsageError("--validity-fraction must lie in (0, 1]");
    }
    const ParamsFile params = parse_params(args.params);
    RecommendOptions options;
    options.validity_fraction = args.validity_fraction;
    options.memory = params.memory;
    if (args.mem_cap) {
        if (!params.memory) throw DataError(args.params + ": --mem-cap needs m_base and m_node");
        options.memory_cap = args.mem_cap;
    }
    out << format_recommendation(recommend(params.timing, args.iterations, options)) << '\n';
    return kExitOk;
}

std::vector<std::size_t> parse_size(const std::string& text) {
    std::vector<std::size_t> dims;
    for (auto field : detail::split_fields(text)) {
        const auto v = detail::parse_unsigned(field);
        if (!v || *v == 0) throw UsageError("--size expects positive integers, got '" + text + "'");
        dims.push_back(*v);
    }
    return dims;
}

WorkloadState make_workload(const std::string& family, const std::vector<std::size_t>& size) {
    const auto expect = [&](std::initializer_list<std::size_t> counts) {
        for (auto c : counts) {
            if (size.size() == c) return;
        }
        throw UsageError("--size has the wrong number of dimensions for " + family);
    };
    if (family == "vector") {
        expect({1});
        return make_vector_workload(size[0], 0.999999);
    }
    if (family == "hotspot2d") {
        expect({1, 2});
        return make_hotspot_workload(size[0], size.size() == 2 ? size[1] : size[0], 1);
    }
    if (family == "hotspot3d") {
        expect({1, 3});
        if (size.size() == 1) return make_hotspot_workload(size[0], size[0], size[0]);
        return make_hotspot_workload(size[0], size[1], size[2]);
    }
    expect({1, 3});
    if (size.size() == 1) return make_cavity_workload({size[0], size[0], size[0]});
    return make_cavity_workload({size[0], size[1], size[2]});
}

int cmd_run_workload(const WorkloadArgs& args, std::ostream& out) {
    const BatchPlan plan = plan_or_usage(args.iterations, args.batch_size);
    if (args.repeats == 0) throw UsageError("--repeats must be >= 1");
    const WorkloadState initial = make_workload(args.workload, parse_size(args.size));
    const ChainProgram program = ChainProgram::for_state(initial);
    const RunMode mode = args.mode == "loop" ? RunMode::Loop : RunMode::Batched;
    const StepOptions opts{args.workers};

    const bool timings_to_stdout = !args.timings && !args.checksum;
    if (args.timings || timings_to_stdout) {
        auto series = time_workload(program, initial, plan, mode, args.repeats, opts);
        series.label = args.workload;
        if (args.timings) {
            auto file = open_output(*args.timings);
            write_measurements(file, series);
        } else {
            write_measurements(out, series);
        }
    }
    if (args.checksum) {
        const WorkloadState result =
            mode == RunMode::Loop
                ? run_loop(program, initial, plan.total_kernel_executions(), opts)
                : run_batched(program, initial, plan.batch_size(), plan.num_batches(), opts);
        out << fmt::format("{:016x}", state_checksum(result)) << '\n';
    }
    return kExitOk;
}

int cmd_speedup(const SpeedupArgs& args, std::ostream& out, std::ostream& err) {
    const MeasurementSeries baseline = parse_measurements(args.baseline);
    const MeasurementSeries graph = parse_measurements(args.graph);

    std::map<std::uint64_t, const MeasurementPoint*> graph_points;
    for (const auto& p : graph.points) graph_points[p.batch_size] = &p;

    std::set<std::uint64_t> matched;
    for (const auto& b : baseline.points) {
        const auto it = graph_points.find(b.batch_size);
        if (it == graph_points.end()) {
            err << "batch_size " << b.batch_size << " appears only in " << args.baseline << '\n';
            continue;
        }
        matched.insert(b.batch_size);
        out << format_speedup(measured_speedup(b.stats(), it->second->stats())) << '\n';
    }
    for (const auto& g : graph.points) {
        if (!matched.contains(g.batch_size)) {
            err << "batch_size " << g.batch_size << " appears only in " << args.graph << '\n';
        }
    }
    if (matched.empty()) {
        err << "no batch_size appears in both files\n";
        return kExitDataError;
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Model, simulate, fit and optimize iteration batching of GPU kernel launches",
                 "itbatch"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Play out the launch timeline on a virtual clock");
    simulate->add_option("--params", sim.params, "Params file")->required();
    simulate->add_option("--iterations", sim.iterations, "Total kernel executions I_k")->required();
    simulate->add_option("--batch-size", sim.batch_size, "Nodes per graph S");
    simulate->add_option("--mode", sim.mode)->check(CLI::IsMember({"graph", "baseline"}));
    simulate->add_option("--trace", sim.trace, "Write the event trace CSV here");

    FitArgs fit;
    auto* fitcmd = app.add_subcommand("fit", "Least-squares fit of creation or execution times");
    fitcmd->add_option("--input", fit.input, "Measurement CSV")->required();
    fitcmd->add_option("--kind", fit.kind)->required()->check(CLI::IsMember({"creation", "execution"}));
    fitcmd->add_option("--total-iterations", fit.total_iterations);
    fitcmd->add_option("--validity-fraction", fit.validity_fraction);

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "Recommend the batch size minimizing total time");
    optimize->add_option("--params", opt.params, "Params file")->required();
    optimize->add_option("--iterations", opt.iterations, "Total kernel executions I_k")->required();
    optimize->add_option("--mem-cap", opt.mem_cap, "Graph memory cap in bytes");
    optimize->add_option("--validity-fraction", opt.validity_fraction);

    WorkloadArgs wl;
    auto* workload = app.add_subcommand("run-workload", "Execute a workload in loop or batched order");
    workload->add_option("--workload", wl.workload)
        ->required()
        ->check(CLI::IsMember({"vector", "hotspot2d", "hotspot3d", "fdtd"}));
    workload->add_option("--size", wl.size, "N[,N2[,N3]]")->required();
    workload->add_option("--iterations", wl.iterations)->required();
    workload->add_option("--batch-size", wl.batch_size)->required();
    workload->add_option("--mode", wl.mode)->required()->check(CLI::IsMember({"loop", "batched"}));
    workload->add_option("--repeats", wl.repeats);
    workload->add_option("--timings", wl.timings, "Write the measurement CSV here");
    workload->add_flag("--checksum", wl.checksum, "Print the final-state FNV-1a checksum");
    workload->add_option("--workers", wl.workers, "Threads per stepper")->check(CLI::PositiveNumber);

    SpeedupArgs sp;
    auto* speedup = app.add_subcommand("speedup", "Baseline / graph ratio per matching batch size");
    speedup->add_option("--baseline", sp.baseline)->required();
    speedup->add_option("--graph", sp.graph)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "itbatch: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*simulate) return cmd_simulate(sim, out);
        if (*fitcmd) return cmd_fit(fit, out);
        if (*optimize) return cmd_optimize(opt, out);
        if (*workload) return cmd_run_workload(wl, out);
        return cmd_speedup(sp, out, err);
    } catch (const UsageError& e) {
        err << "itbatch: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "itbatch: " << e.what() << '\n';
        return kExitDataError;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"itbatch"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace itbatch
