#include "itbatch/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace itbatch {

double FittedCoefficients::total_time(std::uint64_t batch_size) const {
    if (batch_size == 0) throw std::invalid_argument("batch size must be >= 1");
    const auto s = static_cast<double>(batch_size);
    return creation_per_node * s + creation_base + execution.evaluate(s);
}

std::vector<std::uint64_t> feasible_batch_sizes(std::uint64_t total) {
    if (total == 0) throw std::invalid_argument("total kernel executions must be >= 1");
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    for (std::uint64_t d = 1; d <= total / d; ++d) {
        if (total % d != 0) continue;
        low.push_back(d);
        if (d != total / d) high.push_back(total / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

namespace {

Recommendation search(std::uint64_t total, const RecommendOptions& options,
                      const std::function<double(std::uint64_t)>& objective) {
    if (!(options.validity_fraction > 0.0) || options.validity_fraction > 1.0) {
        throw std::invalid_argument("validity fraction must lie in (0, 1]");
    }
    if (options.memory_cap && !options.memory) {
        throw std::invalid_argument("a memory cap needs a memory model");
    }
    if (options.memory) options.memory->validate();

    const double bound = options.validity_fraction * static_cast<double>(total);
    Recommendation best;
    bool found = false;
    for (std::uint64_t s : feasible_batch_sizes(total)) {
        if (static_cast<double>(s) > bound) break;
        if (options.memory_cap && memory_usage(*options.memory, s) > *options.memory_cap) continue;
        ++best.candidates_evaluated;
        const double t = objective(s);
        // Ascending sweep with strict comparison keeps the smaller S on ties.
        if (!found || t < best.predicted_total) {
            found = true;
            best.batch_size = s;
            best.predicted_total = t;
        }
    }
    if (!found) {
        throw std::invalid_argument("no feasible batch size after validity/memory filtering");
    }
    best.num_batches = total / best.batch_size;
    if (options.memory) best.memory_at_choice = memory_usage(*options.memory, best.batch_size);
    return best;
}

}  // namespace

Recommendation recommend(const TimingParameters& p, std::uint64_t total,
                         const RecommendOptions& options) {
    p.validate();
    auto rec = search(total, options, [&](std::uint64_t s) {
        return total_time(p, BatchPlan::from_batch_size(total, s));
    });
    rec.predicted_speedup = baseline_time(p, total) / rec.predicted_total;
    rec.continuous_optimum =
        continuous_optimal_batch(p.creation_per_node, reciprocal_coefficients(p, total).a);
    return rec;
}

Recommendation recommend(const FittedCoefficients& model, std::uint64_t total,
                         const RecommendOptions& options, std::optional<double> baseline_total) {
    auto rec = search(total, options, [&](std::uint64_t s) { return model.total_time(s); });
    if (baseline_total && rec.predicted_total != 0.0) {
        rec.predicted_speedup = *baseline_total / rec.predicted_total;
    }
    rec.continuous_optimum = continuous_optimal_batch(model.creation_per_node, model.execution.a);
    return rec;
}

std::optional<std::uint64_t> crossover_batches(const TimingParameters& p,
                                               std::uint64_t batch_size) {
    if (batch_size == 0) throw std::invalid_argument("batch size must be >= 1");
    p.validate();

    // graph(I) - baseline(S I) is affine in I; the grouping below is exact
    // when the gaps coincide.
    const auto s = static_cast<double>(batch_size);
    const double offset = creation_time(p, batch_size) + (p.baseline_gap - p.inter_graph_gap);
    const double per_batch = (s - 1.0) * (p.intra_graph_gap - p.baseline_gap) +
                             (p.inter_graph_gap - p.baseline_gap);
    const auto graph_wins = [&](std::uint64_t batches) {
        return offset + per_batch * static_cast<double>(batches) < 0.0;
    };

    if (per_batch >= 0.0) {
        if (graph_wins(1)) return 1;
        return std::nullopt;
    }

    const double estimate = std::floor(offset / -per_batch) + 1.0;
    if (estimate > static_cast<double>(kMaxCrossoverBatches) + 1.0) return std::nullopt;
    auto batches = static_cast<std::uint64_t>(std::max(1.0, estimate));
    while (batches > 1 && graph_wins(batches - 1)) --batches;
    while (!graph_wins(batches)) {
        if (++batches > kMaxCrossoverBatches) return std::nullopt;
    }
    if (batches > kMaxCrossoverBatches) return std::nullopt;
    return batches;
}

}  // namespace itbatch
