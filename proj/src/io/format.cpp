#include <fmt/format.h>

#include "itbatch/io.hpp"

namespace itbatch {

std::string format_scientific(double value) { return fmt::format("{:.5e}", value); }

std::string format_summary(const TraceSummary& s) {
    return fmt::format("{:.9f},{:.9f},{:.9f}", s.creation_span, s.execution_span, s.total);
}

std::string format_fit(const FitResult& fit) {
    return fmt::format("{},{},{},{},{}", to_string(fit.kind), format_scientific(fit.slope),
                       format_scientific(fit.intercept), format_scientific(fit.mae),
                       fit.points_used);
}

std::string format_recommendation(const Recommendation& rec) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_scientific(*v) : std::string();
    };
    return fmt::format("{},{},{},{},{}", rec.batch_size, rec.num_batches,
                       format_scientific(rec.predicted_total), opt(rec.predicted_speedup),
                       opt(rec.continuous_optimum));
}

std::string format_speedup(const SpeedupEstimate& s) {
    return fmt::format("{},{}", format_scientific(s.ratio), format_scientific(s.error));
}

}  // namespace itbatch
