#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace itbatch {

// ---------------------------------------------------------------------------
// Platform timing constants, all in seconds (creation_per_node: s / node).
//
//   kernel           - execution time of one kernel
//   intra_graph_gap  - gap between consecutive kernels inside one graph
//   inter_graph_gap  - gap between consecutive graph executions
//   launch_latency   - latency before the first kernel / graph starts
//   baseline_gap     - gap between consecutive kernels in the plain loop
//   creation_per_node, creation_base - graph creation cost k·S + b
// ---------------------------------------------------------------------------
struct TimingParameters {
    double kernel = 0.0;
    double intra_graph_gap = 0.0;
    double inter_graph_gap = 0.0;
    double launch_latency = 0.0;
    double baseline_gap = 0.0;
    double creation_per_node = 0.0;
    double creation_base = 0.0;

    // Throws std::invalid_argument if any field is negative or not finite.
    void validate() const;

    bool operator==(const TimingParameters&) const = default;
};

// A batching of `total` kernel executions into `batches` launches of a
// graph with `batch_size` nodes. batch_size * batches == total always holds.
class BatchPlan {
public:
    // Throws std::invalid_argument unless 1 <= batch_size <= total and
    // batch_size divides total.
    static BatchPlan from_batch_size(std::uint64_t total_kernel_executions,
                                     std::uint64_t batch_size);

    std::uint64_t total_kernel_executions() const { return total_; }
    std::uint64_t batch_size() const { return batch_size_; }
    std::uint64_t num_batches() const { return batches_; }

    bool operator==(const BatchPlan&) const = default;

private:
    BatchPlan(std::uint64_t total, std::uint64_t batch_size, std::uint64_t batches)
        : total_(total), batch_size_(batch_size), batches_(batches) {}

    std::uint64_t total_;
    std::uint64_t batch_size_;
    std::uint64_t batches_;
};

// Execution time written as a / S + b for a fixed total kernel count.
struct ReciprocalCoefficients {
    double a = 0.0;  // seconds * nodes
    double b = 0.0;  // seconds

    double evaluate(double batch_size) const { return a / batch_size + b; }
};

// Device memory footprint of an instantiated graph, linear in node count.
struct MemoryModel {
    double base_bytes = 0.0;
    double bytes_per_node = 0.0;

    void validate() const;
};

struct SampleStats {
    double mean = 0.0;
    double std_dev = 0.0;  // sample standard deviation (n - 1 denominator)
    std::size_t n = 0;

    // Throws std::invalid_argument on an empty sample.
    static SampleStats from_samples(std::span<const double> samples);
};

struct SpeedupEstimate {
    double ratio = 0.0;
    double error = 0.0;
};

// ---------------------------------------------------------------------------
// Analytic model
// ---------------------------------------------------------------------------

double creation_time(const TimingParameters& p, std::uint64_t batch_size);

// T_l + (t_k S + t_i (S - 1)) I + t_a (I - 1), summed term by term.
double execution_time_expanded(const TimingParameters& p, const BatchPlan& plan);

// I_k (t_a - t_i) / S + I_k (t_k + t_i) - t_a + t_l.
double execution_time_closed(const TimingParameters& p, const BatchPlan& plan);

double total_time(const TimingParameters& p, const BatchPlan& plan);

ReciprocalCoefficients reciprocal_coefficients(const TimingParameters& p,
                                               std::uint64_t total_kernel_executions);

// Plain kernel loop: t_l + I_k t_k + (I_k - 1) t_b.
double baseline_time(const TimingParameters& p, std::uint64_t total_kernel_executions);

// baseline_time / total_time. Throws std::domain_error if total_time is 0.
double model_speedup(const TimingParameters& p, const BatchPlan& plan);

// Ratio of means with relative-error propagation:
//   error = ratio * sqrt((sd_b / mean_b)^2 + (sd_g / mean_g)^2)
// Throws std::domain_error on a non-positive mean.
SpeedupEstimate measured_speedup(const SampleStats& baseline, const SampleStats& graph);

// Stationary point sqrt(a / k) of k S + a / S. Empty when either coefficient
// is non-positive: the objective then has no interior minimum.
std::optional<double> continuous_optimal_batch(double creation_per_node, double a);

double memory_usage(const MemoryModel& m, std::uint64_t batch_size);

}  // namespace itbatch
