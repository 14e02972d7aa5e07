#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hjs/errors.hpp"

namespace hjs {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Evaluatable Lagrangian with analytic derivatives and the scalar bound
/// functions the solvers consume: uniform convexity floor nu, superlinear
/// growth envelope [theta - c0, theta_bar], and the derivative bound K.
struct LagrangianModel {
    int dim = 1;
    std::string id;
    bool periodic = false; // 1-periodic in every coordinate of x

    std::function<double(const Vec&, const Vec&)> L;
    std::function<Vec(const Vec&, const Vec&)> L_x;
    std::function<Vec(const Vec&, const Vec&)> L_v;
    std::function<Mat(const Vec&, const Vec&)> L_xx;
    std::function<Mat(const Vec&, const Vec&)> L_xv; // (i,j) = d2L/dx_i dv_j
    std::function<Mat(const Vec&, const Vec&)> L_vv;

    std::function<double(double)> nu;        // nonincreasing, positive
    std::function<double(double)> theta;     // superlinear lower envelope
    std::function<double(double)> theta_bar; // superlinear upper envelope
    std::function<double(double)> K;         // nondecreasing derivative bound
    double c0 = 0.0;

    // Box on which the growth/regularity bounds are certified. Models that
    // hold globally use a large default box.
    Vec box_lo, box_hi;
};

/// Hamiltonian side of the same data. Either supplied natively (closed form)
/// or derived from a LagrangianModel through the fiberwise dual.
struct HamiltonianModel {
    enum class Provenance { native, derived_from_lagrangian };

    int dim = 1;
    std::string id;
    bool periodic = false;
    Provenance provenance = Provenance::native;

    std::function<double(const Vec&, const Vec&)> H;
    std::function<Vec(const Vec&, const Vec&)> H_x;
    std::function<Vec(const Vec&, const Vec&)> H_p;
    std::function<Mat(const Vec&, const Vec&)> H_pp;
    std::function<Mat(const Vec&, const Vec&)> H_xp; // (i,j) = d2H/dx_i dp_j
    std::function<Mat(const Vec&, const Vec&)> H_xx;

    std::function<double(double)> nu;
    std::function<double(double)> theta;
    std::function<double(double)> theta_bar;
    std::function<double(double)> K;
    double c0 = 0.0;
};

/// A Lagrangian together with its Hamiltonian dual. The registry hands these
/// out with a native closed-form Hamiltonian wherever one exists; the derived
/// one stays available for cross-checks.
struct TonelliModel {
    LagrangianModel lag;
    HamiltonianModel ham;
};

struct LegendreResult {
    double H = 0.0;
    Vec v_star;
};

/// Solves the fiberwise dual at (x, p): finds v* with L_v(x, v*) = p and
/// returns H = <p, v*> - L(x, v*). Newton with the exact L_vv Jacobian and
/// Armijo backtracking; falls back to damped gradient ascent on the dual
/// objective if Newton stalls. Throws NoConvergence with the last residual.
LegendreResult legendre(const LagrangianModel& m, const Vec& x, const Vec& p);

/// E(x, v) = <v, L_v(x, v)> - L(x, v); conserved along extremals.
double energy(const LagrangianModel& m, const Vec& x, const Vec& v);

/// Convex conjugate theta*(s) = sup_{r>=0} { r s - theta(r) }, by golden
/// section over a bracket whose right end doubles until the tail decreases.
/// Throws Unbounded if no decreasing tail is found.
double conjugate_bound(const LagrangianModel& m, double s);

/// Search-radius coefficient for sup/inf-convolution extremizers:
/// lambda0 = theta*(lip + 1) + c0 + K(0).
double lambda0_radius(const LagrangianModel& m, double lip);

/// A-priori speed bound kappa(r) for minimizers with |y-x|/t <= r, computed
/// from the explicit chain
///   C1 = K(r) + c0,            C2 = C1 + theta*(1),
///   C3 = 4 c0 + 3 K(4 C2 / 3), C4 = (c0 - C3) + theta*(K(1) + C3 + 1),
///   C5 = max{2, C4},           kappa = max{C5, C2}.
double velocity_bound_kappa(const LagrangianModel& m, double r);

/// Builds the dual Hamiltonian of m through legendre(). Derivative closures
/// use the standard relations H_x = -L_x, H_pp = L_vv^{-1},
/// H_xp = -L_xv H_pp, H_xx = -L_xx + L_xv H_pp L_xv^T, all at v = H_p(x,p).
HamiltonianModel dual_hamiltonian(const LagrangianModel& m);

struct SampleSpec {
    Vec box_lo, box_hi;   // empty => model box
    double v_radius = 2.0;
    int count = 200;
    std::uint64_t seed = 1;
};

struct ConditionReport {
    std::string name;
    double worst_margin = 0.0; // >= 0 passes
    bool pass = false;
    std::string note;
};

struct TonelliReport {
    std::vector<ConditionReport> conditions;
    bool all_pass = false;
};

/// Samples (x, v) pairs and reports worst-case margins for the uniform
/// convexity, growth, and regularity conditions of the Lagrangian, the
/// analytic-vs-finite-difference consistency of its derivatives, and the
/// mirrored conditions of the derived Hamiltonian.
TonelliReport check_tonelli(const TonelliModel& m, const SampleSpec& spec);

/// Built-in model registry. Accepted ids:
///   free                      L = |v|^2/2                       (dim param)
///   harmonic                  L = |v|^2/2 - omega^2 |x|^2 / 2   (omega, dim, box)
///   mechanical                L = |v|^2/2 - V(x), V in {zero, const}
///   quartic1d                 L = v^4/4 (violates the convexity floor at v=0)
///   pendulum                  L = |v|^2/2 - sum_i cos(2 pi x_i), periodic
/// Compact parameter syntax "name(key=value,...)" is accepted, e.g.
/// "harmonic(omega=2,dim=1)" or "mechanical(v=const,c=-0.5,dim=2)".
TonelliModel make_model(const std::string& spec);

std::vector<std::string> list_models();

} // namespace hjs
