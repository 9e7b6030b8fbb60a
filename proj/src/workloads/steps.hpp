#pragma once

#include "itbatch/workloads.hpp"

// Double-buffered steppers: each reads only `in` and overwrites `out`, which
// must have the same shape as `in` (a copy of `in` always qualifies).
namespace itbatch {

void vector_scale_into(const VectorWorkload& in, VectorWorkload& out, const StepOptions& opts);
void hotspot_step_into(const HotspotWorkload& in, HotspotWorkload& out, const StepOptions& opts);
void fdtd_h_step_into(const FdtdWorkload& in, FdtdWorkload& out, const StepOptions& opts);
void fdtd_e_step_into(const FdtdWorkload& in, FdtdWorkload& out, const StepOptions& opts);

}  // namespace itbatch
