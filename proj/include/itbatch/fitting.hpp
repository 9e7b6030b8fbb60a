#pragma once

#include <cstddef>
#include <string_view>

#include "itbatch/measurement.hpp"

namespace itbatch {

enum class FitKind { Creation, Execution };

std::string_view to_string(FitKind kind);

// Creation:  mean time = slope * S + intercept        (k_c, b_c)
// Execution: mean time = slope / S + intercept        (a, b)
struct FitResult {
    FitKind kind = FitKind::Creation;
    double slope = 0.0;
    double intercept = 0.0;
    double mae = 0.0;
    std::size_t points_used = 0;

    double predict(double batch_size) const;
};

// Ordinary least squares on per-point sample means. Both fits throw
// std::invalid_argument when fewer than two distinct batch sizes exist.
FitResult fit_creation(const MeasurementSeries& series);
FitResult fit_execution(const MeasurementSeries& series);

inline constexpr double kDefaultValidityFraction = 0.25;

// Drops points whose batch size exceeds max_fraction * I_k, the regime where
// the linear/reciprocal models stop describing measurements. Throws
// std::invalid_argument if max_fraction is outside (0, 1] or fewer than two
// distinct batch sizes survive.
MeasurementSeries fit_validity_filter(const MeasurementSeries& series, double max_fraction,
                                      std::uint64_t total_kernel_executions);

}  // namespace itbatch
