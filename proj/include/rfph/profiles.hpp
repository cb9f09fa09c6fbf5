#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rfph {

enum class ProfileKind { Sphere2D, Dumbbell };

struct ProfileParams {
    double alpha = 1.0;      // interpolation between degenerate (0) and symmetric (1)
    double L = 1.0;          // neck position parameter
    double k = 1.0 / 25.0;   // neck thickness parameter
    double mu = 100.0;       // length scale
    double epsilon = 1e-3;   // pole cutoff
    std::uint64_t seed = 1;  // dimpled sphere only
    int n_control = 13;      // dimpled sphere only
    double perturbation = 0.3; // dimpled sphere radius modulation amplitude
};

// Amplitude and denominator offset of the dumbbell family profile.
// Invariants after a successful solve: a > 0 and b > right pole coordinate / mu.
struct PoleConstants {
    double a = 0.0;
    double b = 0.0;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;
};

struct RadialProfile {
    ProfileKind kind = ProfileKind::Dumbbell;
    std::vector<double> grid;
    std::vector<double> psi;
    std::vector<double> phi; // empty for Sphere2D
    double x_left = 0.0;
    double x_right = 0.0;
};

// Scaled coordinates of the profile family. The right root sits at
// x/mu = (pi/2 - L)*alpha + L and the left root at x/mu = -pi/2.
double family_right_root(const ProfileParams& params);

// psi(x, 0) of the dumbbell family and its x-derivative.
double alpha_family_value(const ProfileParams& params, const PoleConstants& constants, double x);
double alpha_family_slope(const ProfileParams& params, const PoleConstants& constants, double x);

// Solves for (a, b) so that dpsi/dx = +1 at the left pole and -1 at the right
// pole, by damped Newton iteration (one-dimensional for alpha = 1, where b is
// unused and set to a valid placeholder). Optional initial guess and stats.
PoleConstants solve_pole_constants(const ProfileParams& params, SolveStats* stats = nullptr);
PoleConstants solve_pole_constants(const ProfileParams& params, const PoleConstants& initial,
                                   SolveStats* stats = nullptr);

// Right boundary coordinate x_R with psi(x_R) equal to the value at the cut
// left pole, found by bisection on the right polar cap. For alpha = 1 the
// domain is symmetric and +mu*(pi/2 - epsilon) is returned directly.
double right_pole_matching(const ProfileParams& params, const PoleConstants& constants);

// Samples the family profile on [-mu*(pi/2 - epsilon), x_R] with phi = 1.
RadialProfile alpha_profile(const ProfileParams& params, const PoleConstants& constants,
                            int n_points);

RadialProfile symmetric_dumbbell_profile(int n_points);
RadialProfile degenerate_dumbbell_profile(int n_points);

struct ControlPoint {
    double x = 0.0;
    double psi = 0.0;
};

// Four-neck dumbbell control table on [-100*pi, 100*pi] with necks at
// x = -180, -66, 0, 130 and the global interior minimum at x = 0.
std::vector<ControlPoint> default_gmp_control_table();

// Clamped cubic spline (pole slopes +1 / -1) through the control table,
// sampled on the cut domain. Validates positivity and |dpsi/dx| <= 1 + 1e-6.
RadialProfile gmp_profile(const std::vector<ControlPoint>& controls, int n_points);

// Random 2-sphere radial profile r(theta) via a natural cubic spline through
// n_control seeded radii on [epsilon, pi - epsilon].
RadialProfile dimpled_sphere_profile(const ProfileParams& params, int n_points);

// CSV serialization (columns x, psi, phi; 17 significant digits, bit round-trip).
void write_profile_csv(const std::string& path, const RadialProfile& profile);
RadialProfile read_profile_csv(const std::string& path);

} // namespace rfph
