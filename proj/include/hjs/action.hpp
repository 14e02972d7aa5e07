#pragma once

#include <cstdint>
#include <vector>

#include "hjs/models.hpp"

namespace hjs {

/// Discretized minimizer of the action between two endpoints, with the dual
/// arc p_i = L_v(xi_i, xidot_i) on the same node grid.
struct Trajectory {
    double t = 0.0;
    std::vector<double> s;    // s[0] = 0 < ... < s[m] = t
    std::vector<Vec> xi;      // states
    std::vector<Vec> xi_dot;  // velocities
    std::vector<Vec> p;       // dual covectors
    double action = 0.0;

    // Diagnostics filled by the solver.
    double endpoint_error = 0.0;      // max(|xi_0 - x|, |xi_m - y|) before pinning
    double el_residual = 0.0;         // max interior |dp/ds - L_x|
    double energy_drift = 0.0;        // max_i |E_i - E_0| / (1 + |E_0|)
    double max_speed = 0.0;

    int nodes() const { return int(s.size()) - 1; }
};

struct SolveOptions {
    int nodes = 0;          // 0 => max(32, ceil(64 t))
    int multistart = 5;     // straight segment + perturbed seeds
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    double shooting_tol = 1e-10; // terminal mismatch accepted from the refiner
    int max_newton_iter = 80;
    bool refine_shooting = true;
    int substeps = 4;       // integrator steps per node interval
    int threads = 0;
};

/// Minimizes the action over arcs from x to y in time t: damped Newton on the
/// piecewise-linear/trapezoidal discretization from multi-start seeds, then a
/// shooting refinement of the two-point problem for the Hamiltonian flow.
Trajectory minimize_action(const TonelliModel& m, const Vec& x, const Vec& y, double t,
                           const SolveOptions& opts = {});

struct FundamentalSolution {
    double value = 0.0;
    Vec grad_y, grad_x;
    double dt = 0.0;     // always -energy
    double energy = 0.0; // conserved along the minimizer
    Trajectory minimizer;
    int multiplicity_hint = 1; // distinct local minimizers seen across starts
};

/// Kernel value A_t(x, y) together with its derivatives
///   grad_y = L_v(xi(t), xidot(t)), grad_x = -L_v(xi(0), xidot(0)), dt = -E.
/// When multiplicity_hint > 1 the derivative fields are one-sided data.
FundamentalSolution fundamental_solution(const TonelliModel& m, const Vec& x, const Vec& y,
                                         double t, const SolveOptions& opts = {});

struct ProbeSample {
    Vec y, z;
    double h = 0.0;
    double excess = 0.0;
    double ratio = 0.0;
    bool unique = true; // all solves in the stencil reported a single minimizer
};

struct RegularityProbeReport {
    double constant_estimate = 0.0;
    double worst_ratio = 0.0;
    bool pass = false;
    bool small_time_regime = true; // probe ran inside the guaranteed window
    std::vector<ProbeSample> samples;
};

struct ProbeOptions {
    std::uint64_t seed = 7;
    double cap = 1e6;    // semiconcavity constants above this fail the probe
    int threads = 0;
    SolveOptions solve;  // defaults trimmed internally for probe workloads
};

/// Midpoint-convexity probe of y -> A_t(x, y) on B(x, lambda t): reports
/// inf over samples of [A(y+z) + A(y-z) - 2A(y)] t / |z|^2; passes iff > 0.
RegularityProbeReport probe_convexity(const TonelliModel& m, const Vec& x, double t,
                                      double lambda, int sample_count,
                                      const ProbeOptions& opts = {});

/// Two-sided (t, y) probe: sup over samples of
/// [A_{t+h}(y+z) + A_{t-h}(y-z) - 2A_t(y)] t / (h^2 + |z|^2); passes iff the
/// estimate stays below the configured cap.
RegularityProbeReport probe_semiconcavity(const TonelliModel& m, const Vec& x, double t,
                                          double lambda, int sample_count,
                                          const ProbeOptions& opts = {});

struct RegularityRatios {
    double state_ratio = 0.0;    // max_s |xi2 - xi1|^2 * t / |dy|^2
    double dual_ratio = 0.0;     // int |p2 - p1|^2 ds * t / |dy|^2
    double velocity_ratio = 0.0; // int |xidot2 - xidot1|^2 ds * t / |dy|^2
};

/// Compares the two minimizers reaching y1 and y2 from x in time t and returns
/// the three stability ratios; all stay bounded as |y2 - y1| shrinks.
RegularityRatios main_regularity_check(const TonelliModel& m, const Vec& x, double t,
                                       const Vec& y1, const Vec& y2,
                                       const SolveOptions& opts = {});

} // namespace hjs
