#include "itbatch/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace itbatch {

namespace {

void require_non_negative(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
    }
}

void require_batch_size(std::uint64_t batch_size) {
    if (batch_size == 0) throw std::invalid_argument("batch size must be >= 1");
}

}  // namespace

void TimingParameters::validate() const {
    require_non_negative(kernel, "t_k");
    require_non_negative(intra_graph_gap, "t_i");
    require_non_negative(inter_graph_gap, "t_a");
    require_non_negative(launch_latency, "t_l");
    require_non_negative(baseline_gap, "t_b");
    require_non_negative(creation_per_node, "k_c");
    require_non_negative(creation_base, "b_c");
}

BatchPlan BatchPlan::from_batch_size(std::uint64_t total, std::uint64_t batch_size) {
    if (total == 0) throw std::invalid_argument("total kernel executions must be >= 1");
    if (batch_size == 0 || batch_size > total) {
        throw std::invalid_argument("batch size must lie in [1, " + std::to_string(total) + "]");
    }
    if (total % batch_size != 0) {
        throw std::invalid_argument("batch size " + std::to_string(batch_size) +
                                    " does not divide " + std::to_string(total));
    }
    return BatchPlan(total, batch_size, total / batch_size);
}

void MemoryModel::validate() const {
    require_non_negative(base_bytes, "m_base");
    require_non_negative(bytes_per_node, "m_node");
}

SampleStats SampleStats::from_samples(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    const auto n = samples.size();
    double sum = 0.0;
    for (double s : samples) sum += s;
    const double mean = sum / static_cast<double>(n);
    if (n == 1) return {mean, 0.0, 1};
    double ss = 0.0;
    for (double s : samples) ss += (s - mean) * (s - mean);
    return {mean, std::sqrt(ss / static_cast<double>(n - 1)), n};
}

double creation_time(const TimingParameters& p, std::uint64_t batch_size) {
    require_batch_size(batch_size);
    return p.creation_per_node * static_cast<double>(batch_size) + p.creation_base;
}

double execution_time_expanded(const TimingParameters& p, const BatchPlan& plan) {
    const auto s = static_cast<double>(plan.batch_size());
    const auto batches = static_cast<double>(plan.num_batches());
    const double one_graph = p.kernel * s + p.intra_graph_gap * (s - 1.0);
    return p.launch_latency + one_graph * batches + p.inter_graph_gap * (batches - 1.0);
}

double execution_time_closed(const TimingParameters& p, const BatchPlan& plan) {
    const auto total = static_cast<double>(plan.total_kernel_executions());
    const auto s = static_cast<double>(plan.batch_size());
    return total * (p.inter_graph_gap - p.intra_graph_gap) / s +
           total * (p.kernel + p.intra_graph_gap) - p.inter_graph_gap + p.launch_latency;
}

double total_time(const TimingParameters& p, const BatchPlan& plan) {
    return creation_time(p, plan.batch_size()) + execution_time_closed(p, plan);
}

ReciprocalCoefficients reciprocal_coefficients(const TimingParameters& p,
                                               std::uint64_t total_kernel_executions) {
    if (total_kernel_executions == 0) {
        throw std::invalid_argument("total kernel executions must be >= 1");
    }
    const auto total = static_cast<double>(total_kernel_executions);
    return {total * (p.inter_graph_gap - p.intra_graph_gap),
            total * (p.kernel + p.intra_graph_gap) - p.inter_graph_gap + p.launch_latency};
}

double baseline_time(const TimingParameters& p, std::uint64_t total_kernel_executions) {
    if (total_kernel_executions == 0) {
        throw std::invalid_argument("total kernel executions must be >= 1");
    }
    const auto total = static_cast<double>(total_kernel_executions);
    return p.launch_latency + total * p.kernel + (total - 1.0) * p.baseline_gap;
}

double model_speedup(const TimingParameters& p, const BatchPlan& plan) {
    const double graph = total_time(p, plan);
    if (graph == 0.0) throw std::domain_error("modeled graph total time is zero");
    return baseline_time(p, plan.total_kernel_executions()) / graph;
}

SpeedupEstimate measured_speedup(const SampleStats& baseline, const SampleStats& graph) {
    if (!(baseline.mean > 0.0) || !(graph.mean > 0.0)) {
        throw std::domain_error("speedup needs strictly positive means");
    }
    const double ratio = baseline.mean / graph.mean;
    const double rel_b = baseline.std_dev / baseline.mean;
    const double rel_g = graph.std_dev / graph.mean;
    return {ratio, ratio * std::sqrt(rel_b * rel_b + rel_g * rel_g)};
}

std::optional<double> continuous_optimal_batch(double creation_per_node, double a) {
    if (!(creation_per_node > 0.0) || !(a > 0.0)) return std::nullopt;
    return std::sqrt(a / creation_per_node);
}

double memory_usage(const MemoryModel& m, std::uint64_t batch_size) {
    require_batch_size(batch_size);
    return m.base_bytes + m.bytes_per_node * static_cast<double>(batch_size);
}

}  // namespace itbatch
