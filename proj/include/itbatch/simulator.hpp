#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "itbatch/model.hpp"

namespace itbatch {

enum class EventKind {
    NodeAdded,
    GraphInstantiated,
    GraphUploaded,
    GraphLaunched,
    KernelStarted,
    KernelEnded,
    BatchGapStarted,
    BaselineKernelLaunched,
};

std::string_view to_string(EventKind kind);
// Throws std::invalid_argument on an unknown name.
EventKind event_kind_from_string(std::string_view name);

enum class ExecutionMode { Baseline, Graph };

struct TraceEvent {
    double timestamp = 0.0;  // virtual seconds since the start of the run
    EventKind kind = EventKind::KernelStarted;
    std::optional<std::uint64_t> batch_index;
    std::optional<std::uint64_t> kernel_index;

    bool operator==(const TraceEvent&) const = default;
};

// A baseline trace carries the single-batch plan (S = I_k, I = 1).
struct EventTrace {
    std::vector<TraceEvent> events;
    ExecutionMode mode = ExecutionMode::Graph;
    BatchPlan plan = BatchPlan::from_batch_size(1, 1);
    TimingParameters params;
};

struct TraceSummary {
    double creation_span = 0.0;
    double execution_span = 0.0;
    double total = 0.0;
};

class MalformedTrace : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Plays out graph creation followed by I launches of an S-node chain on a
// virtual clock. Creation starts at t = 0: nodes are added every k_c
// seconds, then instantiation and upload split b_c evenly. Execution starts
// at the end of creation with the first launch; its first kernel starts t_l
// later. Kernels inside a batch are separated by t_i; the first kernel of
// batch i > 0 starts t_a after the last kernel of batch i - 1 ends.
EventTrace simulate_graph(const TimingParameters& p, const BatchPlan& plan);

// Plain loop: kernel n is launched when kernel n - 1 ends, and starts t_b
// later (t_l for the first kernel).
EventTrace simulate_baseline(const TimingParameters& p, std::uint64_t total_kernel_executions);

// Creation span runs from clock zero to GraphUploaded; execution span from
// the first launch event to the last KernelEnded. Throws MalformedTrace when
// launches, uploads or start/end pairs are missing or out of order.
TraceSummary summarize_events(std::span<const TraceEvent> events, ExecutionMode mode);
TraceSummary trace_summary(const EventTrace& trace);

}  // namespace itbatch
