#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "itbatch/fitting.hpp"
#include "itbatch/model.hpp"

namespace itbatch {

struct Recommendation {
    std::uint64_t batch_size = 0;
    std::uint64_t num_batches = 0;
    double predicted_total = 0.0;
    // Empty on the coefficient path when no baseline time was supplied.
    std::optional<double> predicted_speedup;
    std::optional<double> continuous_optimum;
    std::size_t candidates_evaluated = 0;
    std::optional<double> memory_at_choice;
};

struct RecommendOptions {
    std::optional<MemoryModel> memory;
    std::optional<double> memory_cap;  // bytes; requires `memory`
    double validity_fraction = kDefaultValidityFraction;
};

// Fitted model for one total kernel count: creation k_c S + b_c and
// execution a / S + b.
struct FittedCoefficients {
    double creation_per_node = 0.0;
    double creation_base = 0.0;
    ReciprocalCoefficients execution;

    double total_time(std::uint64_t batch_size) const;
};

// All divisors of I_k, ascending.
std::vector<std::uint64_t> feasible_batch_sizes(std::uint64_t total_kernel_executions);

// Minimizes total_time over divisors S <= validity_fraction * I_k (and within
// the memory cap, when given). Ties go to the smaller S. Throws
// std::invalid_argument when no candidate survives filtering.
Recommendation recommend(const TimingParameters& p, std::uint64_t total_kernel_executions,
                         const RecommendOptions& options = {});

Recommendation recommend(const FittedCoefficients& model, std::uint64_t total_kernel_executions,
                         const RecommendOptions& options = {},
                         std::optional<double> baseline_total = std::nullopt);

inline constexpr std::uint64_t kMaxCrossoverBatches = 1'000'000;

// Smallest batch count I such that creating one S-node graph and launching it
// I times is strictly faster than the plain loop over S * I kernels, or empty
// if no I <= kMaxCrossoverBatches qualifies.
std::optional<std::uint64_t> crossover_batches(const TimingParameters& p,
                                               std::uint64_t batch_size);

}  // namespace itbatch
