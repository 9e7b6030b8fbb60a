#include "itbatch/simulator.hpp"

#include <array>
#include <string>
#include <utility>

namespace itbatch {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 8> kKindNames{{
    {EventKind::NodeAdded, "NodeAdded"},
    {EventKind::GraphInstantiated, "GraphInstantiated"},
    {EventKind::GraphUploaded, "GraphUploaded"},
    {EventKind::GraphLaunched, "GraphLaunched"},
    {EventKind::KernelStarted, "KernelStarted"},
    {EventKind::KernelEnded, "KernelEnded"},
    {EventKind::BatchGapStarted, "BatchGapStarted"},
    {EventKind::BaselineKernelLaunched, "BaselineKernelLaunched"},
}};

class Recorder {
public:
    explicit Recorder(std::vector<TraceEvent>& out) : out_(out) {}

    void advance(double dt) { clock_ += dt; }
    double now() const { return clock_; }

    void emit(EventKind kind, std::optional<std::uint64_t> batch = std::nullopt,
              std::optional<std::uint64_t> kernel = std::nullopt) {
        out_.push_back({clock_, kind, batch, kernel});
    }

private:
    std::vector<TraceEvent>& out_;
    double clock_ = 0.0;
};

}  // namespace

std::string_view to_string(EventKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "Unknown";
}

EventKind event_kind_from_string(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    throw std::invalid_argument("unknown event kind '" + std::string(name) + "'");
}

EventTrace simulate_graph(const TimingParameters& p, const BatchPlan& plan) {
    const auto nodes = plan.batch_size();
    const auto batches = plan.num_batches();

    EventTrace trace{{}, ExecutionMode::Graph, plan, p};
    trace.events.reserve(nodes + 2 + batches * (2 * nodes + 2));
    Recorder rec(trace.events);

    // Building
    for (std::uint64_t n = 0; n < nodes; ++n) {
        rec.advance(p.creation_per_node);
        rec.emit(EventKind::NodeAdded, std::nullopt, n);
    }
    rec.advance(0.5 * p.creation_base);
    rec.emit(EventKind::GraphInstantiated);
    rec.advance(p.creation_base - 0.5 * p.creation_base);
    rec.emit(EventKind::GraphUploaded);

    // Launching
    for (std::uint64_t b = 0; b < batches; ++b) {
        if (b == 0) {
            rec.emit(EventKind::GraphLaunched, b);
            rec.advance(p.launch_latency);
        } else {
            rec.emit(EventKind::BatchGapStarted, b - 1);
            rec.emit(EventKind::GraphLaunched, b);
            rec.advance(p.inter_graph_gap);
        }
        for (std::uint64_t n = 0; n < nodes; ++n) {
            if (n > 0) rec.advance(p.intra_graph_gap);
            rec.emit(EventKind::KernelStarted, b, n);
            rec.advance(p.kernel);
            rec.emit(EventKind::KernelEnded, b, n);
        }
    }
    return trace;
}

EventTrace simulate_baseline(const TimingParameters& p, std::uint64_t total_kernel_executions) {
    const auto plan = BatchPlan::from_batch_size(total_kernel_executions, total_kernel_executions);
    EventTrace trace{{}, ExecutionMode::Baseline, plan, p};
    trace.events.reserve(3 * total_kernel_executions);
    Recorder rec(trace.events);

    for (std::uint64_t n = 0; n < total_kernel_executions; ++n) {
        rec.emit(EventKind::BaselineKernelLaunched, std::nullopt, n);
        rec.advance(n == 0 ? p.launch_latency : p.baseline_gap);
        rec.emit(EventKind::KernelStarted, std::nullopt, n);
        rec.advance(p.kernel);
        rec.emit(EventKind::KernelEnded, std::nullopt, n);
    }
    return trace;
}

TraceSummary summarize_events(std::span<const TraceEvent> events, ExecutionMode mode) {
    std::optional<double> uploaded;
    std::optional<double> first_launch;
    std::optional<double> last_end;
    bool kernel_open = false;
    double previous = 0.0;

    for (const auto& e : events) {
        if (e.timestamp < previous) {
            throw MalformedTrace("event timestamps decrease at " + std::string(to_string(e.kind)));
        }
        previous = e.timestamp;
        switch (e.kind) {
            case EventKind::GraphUploaded:
                if (uploaded) throw MalformedTrace("graph uploaded twice");
                uploaded = e.timestamp;
                break;
            case EventKind::GraphLaunched:
            case EventKind::BaselineKernelLaunched:
                if (!first_launch) first_launch = e.timestamp;
                break;
            case EventKind::KernelStarted:
                if (kernel_open) throw MalformedTrace("KernelStarted without preceding KernelEnded");
                if (!first_launch) throw MalformedTrace("kernel started before any launch");
                kernel_open = true;
                break;
            case EventKind::KernelEnded:
                if (!kernel_open) throw MalformedTrace("KernelEnded without matching KernelStarted");
                kernel_open = false;
                last_end = e.timestamp;
                break;
            default:
                break;
        }
    }
    if (kernel_open) throw MalformedTrace("trace ends inside a kernel");
    if (!first_launch || !last_end) throw MalformedTrace("trace contains no executed kernels");

    TraceSummary s;
    if (mode == ExecutionMode::Graph) {
        if (!uploaded) throw MalformedTrace("graph trace without GraphUploaded");
        if (*uploaded > *first_launch) throw MalformedTrace("graph launched before upload");
        s.creation_span = *uploaded;
    } else if (uploaded) {
        throw MalformedTrace("baseline trace contains graph creation events");
    }
    s.execution_span = *last_end - *first_launch;
    s.total = s.creation_span + s.execution_span;
    return s;
}

TraceSummary trace_summary(const EventTrace& trace) {
    return summarize_events(trace.events, trace.mode);
}

}  // namespace itbatch
