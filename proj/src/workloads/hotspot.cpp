#include <cmath>
#include <random>
#include <stdexcept>

#include "parallel.hpp"
#include "steps.hpp"

namespace itbatch {

HotspotWorkload::HotspotWorkload(Grid3 temperature, Grid3 power, double diffusion_coefficient)
    : temperature_(std::move(temperature)),
      power_(std::move(power)),
      diffusion_(diffusion_coefficient) {
    if (temperature_.size() == 0) throw std::invalid_argument("hotspot grid is empty");
    if (!temperature_.same_shape(power_)) {
        throw std::invalid_argument("temperature and power grids differ in shape");
    }
    if (!std::isfinite(diffusion_) || diffusion_ < 0.0 ||
        diffusion_ > max_stable_diffusion(dims())) {
        throw std::invalid_argument("diffusion coefficient must lie in [0, 1 / (2 * dims)]");
    }
}

void hotspot_step_into(const HotspotWorkload& in, HotspotWorkload& out, const StepOptions& opts) {
    if (!in.temperature_.same_shape(out.temperature_)) {
        throw std::invalid_argument("hotspot buffers differ in shape");
    }
    const Grid3& t = in.temperature_;
    const Grid3& p = in.power_;
    Grid3& next = out.temperature_;
    const std::size_t layers = in.layers();
    const std::size_t rows = in.rows();
    const std::size_t cols = in.cols();
    const bool three_d = in.dims() == 3;
    const double d = in.diffusion_;
    const double centre_weight = 2.0 * in.dims();

    detail::parallel_for(layers * rows, opts.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t lr = begin; lr < end; ++lr) {
            const std::size_t l = lr / rows;
            const std::size_t r = lr % rows;
            for (std::size_t c = 0; c < cols; ++c) {
                const double centre = t(l, r, c);
                const double north = r > 0 ? t(l, r - 1, c) : centre;
                const double south = r + 1 < rows ? t(l, r + 1, c) : centre;
                const double west = c > 0 ? t(l, r, c - 1) : centre;
                const double east = c + 1 < cols ? t(l, r, c + 1) : centre;
                double sum = (north + south) + (west + east);
                if (three_d) {
                    const double below = l > 0 ? t(l - 1, r, c) : centre;
                    const double above = l + 1 < layers ? t(l + 1, r, c) : centre;
                    sum += below + above;
                }
                next(l, r, c) = centre + d * (sum - centre_weight * centre) + p(l, r, c);
            }
        }
    });
    out.power_ = in.power_;
    out.diffusion_ = in.diffusion_;
}

HotspotWorkload hotspot_step(const HotspotWorkload& w, const StepOptions& opts) {
    HotspotWorkload out = w;
    hotspot_step_into(w, out, opts);
    return out;
}

HotspotWorkload make_hotspot_workload(std::size_t rows, std::size_t cols, std::size_t layers,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> temp(300.0, 350.0);
    std::uniform_real_distribution<double> heat(0.0, 1e-3);
    Grid3 temperature(layers, rows, cols);
    Grid3 power(layers, rows, cols);
    for (auto& v : temperature.data()) v = temp(rng);
    for (auto& v : power.data()) v = heat(rng);
    const int dims = layers > 1 ? 3 : 2;
    return HotspotWorkload(std::move(temperature), std::move(power),
                           0.8 * HotspotWorkload::max_stable_diffusion(dims));
}

}  // namespace itbatch
