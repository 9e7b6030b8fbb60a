#include <random>
#include <stdexcept>

#include "parallel.hpp"
#include "steps.hpp"

namespace itbatch {

void vector_scale_into(const VectorWorkload& in, VectorWorkload& out, const StepOptions& opts) {
    if (out.values.size() != in.values.size()) {
        throw std::invalid_argument("vector buffers differ in length");
    }
    out.scale_constant = in.scale_constant;
    detail::parallel_for(in.values.size(), opts.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out.values[i] = in.values[i] * in.scale_constant;
    });
}

VectorWorkload vector_scale_step(const VectorWorkload& w, const StepOptions& opts) {
    VectorWorkload out = w;
    vector_scale_into(w, out, opts);
    return out;
}

VectorWorkload make_vector_workload(std::size_t length, double scale_constant,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VectorWorkload w{std::vector<double>(length), scale_constant};
    for (auto& v : w.values) v = dist(rng);
    return w;
}

}  // namespace itbatch
