#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "steps.hpp"

namespace itbatch {

FdtdWorkload::FdtdWorkload(CavityDims dims, double cell_size, double time_step)
    : dims_(dims), cell_size_(cell_size), time_step_(time_step) {
    const auto [nx, ny, nz] = dims;
    if (nx == 0 || ny == 0 || nz == 0) throw std::invalid_argument("cavity needs >= 1 cell per axis");
    if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
        throw std::invalid_argument("cell size must be positive");
    }
    if (!(time_step > 0.0) || time_step > courant_limit(cell_size)) {
        throw std::invalid_argument("time step must lie in (0, dx / (c * sqrt(3))]");
    }
    ex_ = Grid3(nx, ny + 1, nz + 1);
    ey_ = Grid3(nx + 1, ny, nz + 1);
    ez_ = Grid3(nx + 1, ny + 1, nz);
    hx_ = Grid3(nx + 1, ny, nz);
    hy_ = Grid3(nx, ny + 1, nz);
    hz_ = Grid3(nx, ny, nz + 1);
}

double FdtdWorkload::courant_limit(double cell_size) {
    return cell_size / (physics::kSpeedOfLight * std::numbers::sqrt3);
}

void FdtdWorkload::check_shapes() const {
    const auto [nx, ny, nz] = dims_;
    const bool ok = ex_.same_shape(Grid3(nx, ny + 1, nz + 1)) &&
                    ey_.same_shape(Grid3(nx + 1, ny, nz + 1)) &&
                    ez_.same_shape(Grid3(nx + 1, ny + 1, nz)) &&
                    hx_.same_shape(Grid3(nx + 1, ny, nz)) &&
                    hy_.same_shape(Grid3(nx, ny + 1, nz)) &&
                    hz_.same_shape(Grid3(nx, ny, nz + 1));
    if (!ok) throw std::invalid_argument("FDTD field arrays do not match the cavity dimensions");
}

void FdtdWorkload::clamp_walls() {
    const auto [nx, ny, nz] = dims_;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j <= ny; ++j) {
            for (std::size_t k = 0; k <= nz; ++k) {
                if (j == 0 || j == ny || k == 0 || k == nz) ex_(i, j, k) = 0.0;
            }
        }
    }
    for (std::size_t i = 0; i <= nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            for (std::size_t k = 0; k <= nz; ++k) {
                if (i == 0 || i == nx || k == 0 || k == nz) ey_(i, j, k) = 0.0;
            }
        }
    }
    for (std::size_t i = 0; i <= nx; ++i) {
        for (std::size_t j = 0; j <= ny; ++j) {
            for (std::size_t k = 0; k < nz; ++k) {
                if (i == 0 || i == nx || j == 0 || j == ny) ez_(i, j, k) = 0.0;
            }
        }
    }
}

void fdtd_h_step_into(const FdtdWorkload& in, FdtdWorkload& out, const StepOptions& opts) {
    in.check_shapes();
    out.check_shapes();
    const auto [nx, ny, nz] = in.dims_;
    const double coef = in.time_step_ / (physics::kVacuumPermeability * in.cell_size_);
    const Grid3& ex = in.ex_;
    const Grid3& ey = in.ey_;
    const Grid3& ez = in.ez_;

    // Rows are (i, j) pairs over the largest H extent; each array skips the
    // indices it does not have.
    detail::parallel_for((nx + 1) * (ny + 1), opts.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            const std::size_t i = row / (ny + 1);
            const std::size_t j = row % (ny + 1);
            if (j < ny) {
                for (std::size_t k = 0; k < nz; ++k) {
                    const double curl = (ez(i, j + 1, k) - ez(i, j, k)) -
                                        (ey(i, j, k + 1) - ey(i, j, k));
                    out.hx_(i, j, k) = in.hx_(i, j, k) - coef * curl;
                }
            }
            if (i < nx) {
                for (std::size_t k = 0; k < nz; ++k) {
                    const double curl = (ex(i, j, k + 1) - ex(i, j, k)) -
                                        (ez(i + 1, j, k) - ez(i, j, k));
                    out.hy_(i, j, k) = in.hy_(i, j, k) - coef * curl;
                }
            }
            if (i < nx && j < ny) {
                for (std::size_t k = 0; k <= nz; ++k) {
                    const double curl = (ey(i + 1, j, k) - ey(i, j, k)) -
                                        (ex(i, j + 1, k) - ex(i, j, k));
                    out.hz_(i, j, k) = in.hz_(i, j, k) - coef * curl;
                }
            }
        }
    });
    out.ex_ = in.ex_;
    out.ey_ = in.ey_;
    out.ez_ = in.ez_;
}

void fdtd_e_step_into(const FdtdWorkload& in, FdtdWorkload& out, const StepOptions& opts) {
    in.check_shapes();
    out.check_shapes();
    const auto [nx, ny, nz] = in.dims_;
    const double coef = in.time_step_ / (physics::kVacuumPermittivity * in.cell_size_);
    const Grid3& hx = in.hx_;
    const Grid3& hy = in.hy_;
    const Grid3& hz = in.hz_;

    detail::parallel_for((nx + 1) * (ny + 1), opts.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            const std::size_t i = row / (ny + 1);
            const std::size_t j = row % (ny + 1);
            const bool x_wall = i == 0 || i == nx;
            const bool y_wall = j == 0 || j == ny;
            if (i < nx) {
                for (std::size_t k = 0; k <= nz; ++k) {
                    if (y_wall || k == 0 || k == nz) {
                        out.ex_(i, j, k) = 0.0;
                        continue;
                    }
                    const double curl = (hz(i, j, k) - hz(i, j - 1, k)) -
                                        (hy(i, j, k) - hy(i, j, k - 1));
                    out.ex_(i, j, k) = in.ex_(i, j, k) + coef * curl;
                }
            }
            if (j < ny) {
                for (std::size_t k = 0; k <= nz; ++k) {
                    if (x_wall || k == 0 || k == nz) {
                        out.ey_(i, j, k) = 0.0;
                        continue;
                    }
                    const double curl = (hx(i, j, k) - hx(i, j, k - 1)) -
                                        (hz(i, j, k) - hz(i - 1, j, k));
                    out.ey_(i, j, k) = in.ey_(i, j, k) + coef * curl;
                }
            }
            for (std::size_t k = 0; k < nz; ++k) {
                if (x_wall || y_wall) {
                    out.ez_(i, j, k) = 0.0;
                    continue;
                }
                const double curl = (hy(i, j, k) - hy(i - 1, j, k)) -
                                    (hx(i, j, k) - hx(i, j - 1, k));
                out.ez_(i, j, k) = in.ez_(i, j, k) + coef * curl;
            }
        }
    });
    out.hx_ = in.hx_;
    out.hy_ = in.hy_;
    out.hz_ = in.hz_;
}

FdtdWorkload fdtd_h_step(const FdtdWorkload& w, const StepOptions& opts) {
    FdtdWorkload out = w;
    fdtd_h_step_into(w, out, opts);
    return out;
}

FdtdWorkload fdtd_e_step(const FdtdWorkload& w, const StepOptions& opts) {
    FdtdWorkload out = w;
    fdtd_e_step_into(w, out, opts);
    return out;
}

void excite_te101(FdtdWorkload& w, double amplitude) {
    const auto [nx, ny, nz] = w.dims();
    for (auto* grid : {&w.ex(), &w.ey(), &w.ez(), &w.hx(), &w.hy(), &w.hz()}) {
        for (auto& v : grid->data()) v = 0.0;
    }
    Grid3& ey = w.ey();
    for (std::size_t i = 0; i <= nx; ++i) {
        const double sx = std::sin(std::numbers::pi * static_cast<double>(i) / static_cast<double>(nx));
        for (std::size_t j = 0; j < ny; ++j) {
            for (std::size_t k = 0; k <= nz; ++k) {
                const double sz =
                    std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(nz));
                ey(i, j, k) = amplitude * sx * sz;
            }
        }
    }
    w.clamp_walls();
}

double te101_frequency(const FdtdWorkload& w) {
    const double lx = static_cast<double>(w.dims().nx) * w.cell_size();
    const double lz = static_cast<double>(w.dims().nz) * w.cell_size();
    return 0.5 * physics::kSpeedOfLight * std::sqrt(1.0 / (lx * lx) + 1.0 / (lz * lz));
}

FdtdWorkload make_cavity_workload(CavityDims dims) {
    constexpr double cell = 1e-3;
    FdtdWorkload w(dims, cell, 0.99 * FdtdWorkload::courant_limit(cell));
    excite_te101(w, 1.0);
    return w;
}

}  // namespace itbatch
