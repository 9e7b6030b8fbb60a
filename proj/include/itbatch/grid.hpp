#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace itbatch {

// Dense row-major 3-D array of doubles; the last index is contiguous.
class Grid3 {
public:
    Grid3() = default;
    Grid3(std::size_t nx, std::size_t ny, std::size_t nz, double value = 0.0)
        : nx_(nx), ny_(ny), nz_(nz), data_(nx * ny * nz, value) {}

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t nz() const { return nz_; }
    std::size_t size() const { return data_.size(); }

    bool same_shape(const Grid3& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_ && nz_ == other.nz_;
    }

    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * ny_ + j) * nz_ + k];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * ny_ + j) * nz_ + k];
    }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    bool operator==(const Grid3&) const = default;

private:
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::size_t nz_ = 0;
    std::vector<double> data_;
};

}  // namespace itbatch
