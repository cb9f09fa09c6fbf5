#pragma once

#include <vector>

#include "rfph/profiles.hpp"

namespace rfph {

struct FlowState {
    ProfileKind kind = ProfileKind::Dumbbell;
    double t = 0.0;
    std::vector<double> grid;
    std::vector<double> psi;
    std::vector<double> phi; // empty for Sphere2D
};

struct CurvatureField {
    std::vector<double> K;
    std::vector<double> Lcurv;
    std::vector<double> R;
    std::vector<double> rm_norm_sq;
};

enum class StopReason { MaxTime, Stiff, CurvatureCap, PsiFloor };

enum class SingularityClass { TypeI, TypeIISuspect, NoBlowup };

struct Schedule {
    double dt = 1e-5;            // ceiling on the step size
    long cadence = 100;          // steps between recorded snapshots
    double max_time = 10.0;
    double curvature_cap = 1e8;  // stop when max |R| reaches this
    double psi_floor = 1e-4;     // stop when min psi reaches this
    double c_cfl = 0.2;          // parabolic guard coefficient
    double dt_min = 1e-13;       // below this effective step the system is stiff
    long max_steps = 200000000;  // safety valve
};

struct Snapshot {
    FlowState state;
    CurvatureField curv;
    long step_index = 0;
};

struct FlowDiagnostics {
    double t_singular_estimate = 0.0;     // NaN when no estimate is possible
    std::vector<double> type1_indicator;  // (T - t_i) * max|Rm| per usable snapshot
    StopReason stop_reason = StopReason::MaxTime;
    std::vector<double> sample_times;     // snapshot times
    std::vector<double> max_abs_rm;       // max sqrt(rm_norm_sq) per snapshot
};

struct Trajectory {
    std::vector<Snapshot> snapshots;
    FlowDiagnostics diagnostics;
};

struct FieldRates {
    std::vector<double> dpsi;
    std::vector<double> dphi;
};

// Reporting curvature operators: second-order central stencils in the
// interior, one-sided second-order stencils at the boundary rows.
CurvatureField curvature_dumbbell(const FlowState& state);
CurvatureField curvature_sphere2d(const FlowState& state);
CurvatureField curvature(const FlowState& state);

// Time derivatives of the evolved fields. Boundary rows use ghost values
// enforcing the pole slope conditions (dumbbell) or zero Neumann data
// (sphere); the dumbbell phi boundary follows phi = 1 + t.
FieldRates rf_rhs(const FlowState& state);

// One classical RK4 step; dt = 0 returns the state unchanged bit-exactly.
FlowState step(const FlowState& state, double dt);

Trajectory evolve(const RadialProfile& profile, const Schedule& schedule);

// Trend classification of (T - t) * max|Rm| over the last decade before stop.
SingularityClass classify_singularity(const FlowDiagnostics& diagnostics);

} // namespace rfph
