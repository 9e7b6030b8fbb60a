#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "itbatch/grid.hpp"
#include "itbatch/measurement.hpp"
#include "itbatch/model.hpp"

namespace itbatch {

// Number of worker threads a stepper may split one output grid across.
// Every output cell is computed from the previous buffer only, so results do
// not depend on this value.
struct StepOptions {
    unsigned workers = 1;
};

// ---------------------------------------------------------------------------
// Skeleton workload: scale a vector by a constant.
// ---------------------------------------------------------------------------
struct VectorWorkload {
    std::vector<double> values;
    double scale_constant = 1.0;

    std::size_t length() const { return values.size(); }
};

VectorWorkload vector_scale_step(const VectorWorkload& w, const StepOptions& opts = {});

// ---------------------------------------------------------------------------
// Hotspot: explicit diffusion with a power source on a 2-D (layers == 1) or
// 3-D grid. Grids are indexed (layer, row, col).
//
//   T'[x] = T[x] + D * (sum of neighbours - 2 * dims * T[x]) + P[x]
//
// Missing neighbours outside the grid take the cell's own value (adiabatic
// walls). Neighbours are summed as opposite pairs, so mirror images of a
// state stay exact mirror images.
// ---------------------------------------------------------------------------
class HotspotWorkload {
public:
    // Throws std::invalid_argument if the grids differ in shape, are empty,
    // or the diffusion coefficient is outside [0, 1 / (2 * dims)].
    HotspotWorkload(Grid3 temperature, Grid3 power, double diffusion_coefficient);

    std::size_t layers() const { return temperature_.nx(); }
    std::size_t rows() const { return temperature_.ny(); }
    std::size_t cols() const { return temperature_.nz(); }
    int dims() const { return layers() > 1 ? 3 : 2; }
    double diffusion_coefficient() const { return diffusion_; }

    const Grid3& temperature() const { return temperature_; }
    Grid3& temperature() { return temperature_; }
    const Grid3& power() const { return power_; }

    static double max_stable_diffusion(int dims) { return 1.0 / (2.0 * dims); }

private:
    friend void hotspot_step_into(const HotspotWorkload&, HotspotWorkload&, const StepOptions&);

    Grid3 temperature_;
    Grid3 power_;
    double diffusion_ = 0.0;
};

HotspotWorkload hotspot_step(const HotspotWorkload& w, const StepOptions& opts = {});

// ---------------------------------------------------------------------------
// FDTD: Yee leapfrog in a perfect-electric-conductor box of nx x ny x nz
// cubic cells. Component placement (cell units):
//
//   Ex (i+1/2, j,     k    )  nx   x (ny+1) x (nz+1)
//   Ey (i,     j+1/2, k    )  (nx+1) x ny   x (nz+1)
//   Ez (i,     j,     k+1/2)  (nx+1) x (ny+1) x nz
//   Hx (i,     j+1/2, k+1/2)  (nx+1) x ny   x nz
//   Hy (i+1/2, j,     k+1/2)  nx   x (ny+1) x nz
//   Hz (i+1/2, j+1/2, k    )  nx   x ny   x (nz+1)
//
// H <- H - (dt / mu0) curl E, then E <- E + (dt / eps0) curl H, with every
// tangential E sample on the walls held at zero.
// ---------------------------------------------------------------------------
namespace physics {
inline constexpr double kSpeedOfLight = 299'792'458.0;       // m / s
inline constexpr double kVacuumPermeability = 1.25663706212e-6;  // H / m
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F / m
}  // namespace physics

struct CavityDims {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::size_t nz = 0;
};

class FdtdWorkload {
public:
    // Throws std::invalid_argument on empty dimensions, non-positive sizes or
    // a time step above the Courant limit cell_size / (c * sqrt(3)).
    FdtdWorkload(CavityDims dims, double cell_size, double time_step);

    static double courant_limit(double cell_size);

    const CavityDims& dims() const { return dims_; }
    double cell_size() const { return cell_size_; }
    double time_step() const { return time_step_; }

    const Grid3& ex() const { return ex_; }
    const Grid3& ey() const { return ey_; }
    const Grid3& ez() const { return ez_; }
    const Grid3& hx() const { return hx_; }
    const Grid3& hy() const { return hy_; }
    const Grid3& hz() const { return hz_; }
    Grid3& ex() { return ex_; }
    Grid3& ey() { return ey_; }
    Grid3& ez() { return ez_; }
    Grid3& hx() { return hx_; }
    Grid3& hy() { return hy_; }
    Grid3& hz() { return hz_; }

    // Arrays in canonical order Ex, Ey, Ez, Hx, Hy, Hz.
    std::vector<const Grid3*> fields() const { return {&ex_, &ey_, &ez_, &hx_, &hy_, &hz_}; }

    // Sets every wall-tangential E sample to zero.
    void clamp_walls();

private:
    friend void fdtd_h_step_into(const FdtdWorkload&, FdtdWorkload&, const StepOptions&);
    friend void fdtd_e_step_into(const FdtdWorkload&, FdtdWorkload&, const StepOptions&);

    void check_shapes() const;

    CavityDims dims_;
    double cell_size_ = 0.0;
    double time_step_ = 0.0;
    Grid3 ex_, ey_, ez_;
    Grid3 hx_, hy_, hz_;
};

FdtdWorkload fdtd_h_step(const FdtdWorkload& w, const StepOptions& opts = {});
FdtdWorkload fdtd_e_step(const FdtdWorkload& w, const StepOptions& opts = {});

// Loads the TE101 standing wave Ey = A sin(pi x / Lx) sin(pi z / Lz) with
// all other components zero.
void excite_te101(FdtdWorkload& w, double amplitude);

// (c / 2) sqrt(1 / Lx^2 + 1 / Lz^2) for the cavity of `w`.
double te101_frequency(const FdtdWorkload& w);

// ---------------------------------------------------------------------------
// Chains and runners
// ---------------------------------------------------------------------------
enum class KernelStep { VectorScale, HotspotDiffuse, FdtdMagnetic, FdtdElectric };

using WorkloadState = std::variant<VectorWorkload, HotspotWorkload, FdtdWorkload>;

// The kernel steps making up one iteration.
class ChainProgram {
public:
    // Throws std::invalid_argument on an empty step list.
    explicit ChainProgram(std::vector<KernelStep> steps);

    static ChainProgram vector_scale() { return ChainProgram({KernelStep::VectorScale}); }
    static ChainProgram hotspot() { return ChainProgram({KernelStep::HotspotDiffuse}); }
    static ChainProgram fdtd() {
        return ChainProgram({KernelStep::FdtdMagnetic, KernelStep::FdtdElectric});
    }
    static ChainProgram for_state(const WorkloadState& w);

    std::span<const KernelStep> steps() const { return steps_; }

private:
    std::vector<KernelStep> steps_;
};

// Applies one kernel step. Throws std::invalid_argument if the step does not
// belong to the state's workload family.
WorkloadState apply_step(KernelStep step, const WorkloadState& w, const StepOptions& opts = {});

// Plain loop order: the program, total_iterations times.
WorkloadState run_loop(const ChainProgram& program, WorkloadState w,
                       std::uint64_t total_iterations, const StepOptions& opts = {});

// Unrolls batch_size iterations into one linear chain of kernel nodes and
// executes that chain num_batches times. Produces bit-identical results to
// run_loop(program, w, batch_size * num_batches).
WorkloadState run_batched(const ChainProgram& program, WorkloadState w,
                          std::uint64_t batch_size, std::uint64_t num_batches,
                          const StepOptions& opts = {});

enum class RunMode { Loop, Batched };

// Wall-clock seconds for `repeats` full executions of `plan`, each from a
// fresh copy of `initial`; the copy is outside the timed region. Returns a
// series with a single point at plan.batch_size().
MeasurementSeries time_workload(const ChainProgram& program, const WorkloadState& initial,
                                const BatchPlan& plan, RunMode mode, std::size_t repeats = 10,
                                const StepOptions& opts = {});

// 64-bit FNV-1a over the little-endian bytes of every state array: values
// (vector); temperature then power (hotspot); Ex, Ey, Ez, Hx, Hy, Hz (FDTD).
std::uint64_t state_checksum(const WorkloadState& w);

// ---------------------------------------------------------------------------
// Deterministic instances used by the CLI and the test suites.
// ---------------------------------------------------------------------------
VectorWorkload make_vector_workload(std::size_t length, double scale_constant,
                                    std::uint64_t seed = 1);
HotspotWorkload make_hotspot_workload(std::size_t rows, std::size_t cols, std::size_t layers,
                                      std::uint64_t seed = 1);
// TE101-excited cavity with 1 mm cells at 0.99 of the Courant limit.
FdtdWorkload make_cavity_workload(CavityDims dims);

}  // namespace itbatch
