#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itbatch/model.hpp"

namespace itbatch {

// Repeated wall-clock samples for one batch size.
struct MeasurementPoint {
    std::uint64_t batch_size = 0;
    std::vector<double> samples;  // seconds, each > 0

    SampleStats stats() const { return SampleStats::from_samples(samples); }
};

struct MeasurementSeries {
    std::vector<MeasurementPoint> points;
    std::string label;

    // Throws std::invalid_argument if a point has no samples, a zero batch
    // size, or a non-positive sample.
    void validate() const;
    std::size_t distinct_batch_sizes() const;
};

}  // namespace itbatch
