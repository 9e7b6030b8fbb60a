#include "itbatch/fitting.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace itbatch {

void MeasurementSeries::validate() const {
    for (const auto& p : points) {
        if (p.batch_size == 0) throw std::invalid_argument("batch size must be >= 1");
        if (p.samples.empty()) {
            throw std::invalid_argument("batch size " + std::to_string(p.batch_size) +
                                        " has no samples");
        }
        for (double s : p.samples) {
            if (!(s > 0.0) || !std::isfinite(s)) {
                throw std::invalid_argument("samples must be finite and > 0");
            }
        }
    }
}

std::size_t MeasurementSeries::distinct_batch_sizes() const {
    std::set<std::uint64_t> sizes;
    for (const auto& p : points) sizes.insert(p.batch_size);
    return sizes.size();
}

std::string_view to_string(FitKind kind) {
    return kind == FitKind::Creation ? "creation" : "execution";
}

double FitResult::predict(double batch_size) const {
    const double x = kind == FitKind::Creation ? batch_size : 1.0 / batch_size;
    return slope * x + intercept;
}

namespace {

FitResult least_squares(const MeasurementSeries& series, FitKind kind) {
    series.validate();
    if (series.distinct_batch_sizes() < 2) {
        throw std::invalid_argument("fit needs at least two distinct batch sizes");
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& p : series.points) {
        const auto s = static_cast<double>(p.batch_size);
        xs.push_back(kind == FitKind::Creation ? s : 1.0 / s);
        ys.push_back(p.stats().mean);
    }
    const auto n = static_cast<double>(xs.size());

    double x_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= n;
    y_mean /= n;

    // Centered normal equations.
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - x_mean;
        sxx += dx * dx;
        sxy += dx * (ys[i] - y_mean);
    }

    FitResult fit;
    fit.kind = kind;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    fit.points_used = xs.size();

    double abs_sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        abs_sum += std::abs(ys[i] - (fit.slope * xs[i] + fit.intercept));
    }
    fit.mae = abs_sum / n;
    return fit;
}

}  // namespace

FitResult fit_creation(const MeasurementSeries& series) {
    return least_squares(series, FitKind::Creation);
}

FitResult fit_execution(const MeasurementSeries& series) {
    return least_squares(series, FitKind::Execution);
}

MeasurementSeries fit_validity_filter(const MeasurementSeries& series, double max_fraction,
                                      std::uint64_t total_kernel_executions) {
    if (!(max_fraction > 0.0) || max_fraction > 1.0) {
        throw std::invalid_argument("validity fraction must lie in (0, 1]");
    }
    if (total_kernel_executions == 0) {
        throw std::invalid_argument("total kernel executions must be >= 1");
    }
    const double bound = max_fraction * static_cast<double>(total_kernel_executions);

    MeasurementSeries kept;
    kept.label = series.label;
    for (const auto& p : series.points) {
        if (static_cast<double>(p.batch_size) <= bound) kept.points.push_back(p);
    }
    if (kept.distinct_batch_sizes() < 2) {
        throw std::invalid_argument("fewer than two distinct batch sizes at or below " +
                                    std::to_string(bound));
    }
    return kept;
}

}  // namespace itbatch
