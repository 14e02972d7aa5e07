#include "hjs/action.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hjs/parallel.hpp"

namespace hjs {

namespace {

int default_nodes(double t) { return std::max(32, int(std::ceil(64.0 * t))); }

// ---------------------------------------------------------------------------
// Discrete stage: piecewise-linear states, trapezoidal action, damped Newton
// on the interior nodes with the exact block-tridiagonal Hessian.
// ---------------------------------------------------------------------------

struct DiscretePath {
    std::vector<Vec> xi; // m+1 nodes, endpoints pinned
    double action = 0.0;
    bool converged = false;
    bool blew_up = false;
};

double discrete_action(const LagrangianModel& L, const std::vector<Vec>& xi, double h) {
    double s = 0.0;
    const int m = int(xi.size()) - 1;
    for (int i = 0; i < m; ++i) {
        const Vec v = (xi[i + 1] - xi[i]) / h;
        s += 0.5 * h * (L.L(xi[i], v) + L.L(xi[i + 1], v));
    }
    return s;
}

void discrete_gradient(const LagrangianModel& L, const std::vector<Vec>& xi, double h,
                       std::vector<Vec>& g) {
    const int m = int(xi.size()) - 1;
    g.assign(m - 1, Vec::Zero(L.dim));
    for (int j = 1; j < m; ++j) {
        const Vec vm = (xi[j] - xi[j - 1]) / h;
        const Vec vp = (xi[j + 1] - xi[j]) / h;
        g[j - 1] = 0.5 * (L.L_v(xi[j - 1], vm) + L.L_v(xi[j], vm) - L.L_v(xi[j], vp) -
                          L.L_v(xi[j + 1], vp)) +
                   0.5 * h * (L.L_x(xi[j], vm) + L.L_x(xi[j], vp));
    }
}

// Hessian blocks of the discrete action. D[j] couples node j+1 with itself,
// U[j] couples node j+1 with node j+2 (0-based over interior nodes).
void discrete_hessian(const LagrangianModel& L, const std::vector<Vec>& xi, double h,
                      std::vector<Mat>& D, std::vector<Mat>& U) {
    const int m = int(xi.size()) - 1;
    const int n = L.dim;
    D.assign(m - 1, Mat::Zero(n, n));
    U.assign(std::max(m - 2, 0), Mat::Zero(n, n));
    for (int j = 1; j < m; ++j) {
        const Vec vm = (xi[j] - xi[j - 1]) / h;
        const Vec vp = (xi[j + 1] - xi[j]) / h;
        // F_bb of interval (j-1, j):
        Mat blk = 0.5 * h * L.L_xx(xi[j], vm);
        {
            const Mat lxv = L.L_xv(xi[j], vm);
            blk += 0.5 * (lxv + lxv.transpose());
            blk += (0.5 / h) * (L.L_vv(xi[j - 1], vm) + L.L_vv(xi[j], vm));
        }
        // F_aa of interval (j, j+1):
        blk += 0.5 * h * L.L_xx(xi[j], vp);
        {
            const Mat lxv = L.L_xv(xi[j], vp);
            blk -= 0.5 * (lxv + lxv.transpose());
            blk += (0.5 / h) * (L.L_vv(xi[j], vp) + L.L_vv(xi[j + 1], vp));
        }
        D[j - 1] = blk;
        if (j < m - 1) {
            // F_ab of interval (j, j+1) couples xi_j with xi_{j+1}.
            U[j - 1] = 0.5 * L.L_xv(xi[j], vp) - 0.5 * L.L_xv(xi[j + 1], vp).transpose() -
                       (0.5 / h) * (L.L_vv(xi[j], vp) + L.L_vv(xi[j + 1], vp));
        }
    }
}

// Solves the symmetric block-tridiagonal system (H + mu I) d = -g by block
// LDL^T. Returns false if a pivot block fails to factorize positively.
bool block_tridiag_solve(std::vector<Mat> D, const std::vector<Mat>& U, const std::vector<Vec>& g,
                         double mu, std::vector<Vec>& d) {
    const int k = int(D.size());
    const int n = int(g[0].size());
    std::vector<Mat> W(std::max(k - 1, 0)); // C_j^{-1} U_j
    std::vector<Eigen::LDLT<Mat>> fact(k);
    for (int j = 0; j < k; ++j) {
        D[j] += mu * Mat::Identity(n, n);
        if (j > 0) D[j] -= U[j - 1].transpose() * W[j - 1];
        fact[j].compute(D[j]);
        if (fact[j].info() != Eigen::Success || !fact[j].isPositive()) return false;
        if (j < k - 1) W[j] = fact[j].solve(U[j]);
    }
    std::vector<Vec> z(k);
    z[0] = g[0];
    for (int j = 1; j < k; ++j)
        z[j] = g[j] - U[j - 1].transpose() * Vec(fact[j - 1].solve(z[j - 1]));
    d.assign(k, Vec::Zero(n));
    d[k - 1] = fact[k - 1].solve(Vec(-z[k - 1]));
    for (int j = k - 2; j >= 0; --j) d[j] = fact[j].solve(Vec(-z[j] - U[j] * d[j + 1]));
    return true;
}

DiscretePath newton_on_path(const LagrangianModel& L, std::vector<Vec> xi, double t,
                            double guard_radius, const Vec& x0, int max_iter) {
    DiscretePath out;
    const int m = int(xi.size()) - 1;
    const double h = t / m;
    if (m < 2) {
        out.xi = xi;
        out.action = discrete_action(L, xi, h);
        out.converged = true;
        return out;
    }
    std::vector<Vec> g, d;
    std::vector<Mat> D, U;
    double S = discrete_action(L, xi, h);
    double mu = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        discrete_gradient(L, xi, h, g);
        double gmax = 0.0;
        for (const auto& gi : g) gmax = std::max(gmax, gi.cwiseAbs().maxCoeff());
        if (gmax <= 1e-12 * (1.0 + std::abs(S))) {
            out.converged = true;
            break;
        }
        discrete_hessian(L, xi, h, D, U);
        bool solved = false;
        for (int tries = 0; tries < 12 && !solved; ++tries) {
            solved = block_tridiag_solve(D, U, g, mu, d);
            if (solved) {
                double gd = 0.0;
                for (size_t j = 0; j < g.size(); ++j) gd += g[j].dot(d[j]);
                if (gd >= 0.0) solved = false; // not a descent direction
            }
            if (!solved) mu = (mu == 0.0) ? 1e-8 * (1.0 + std::abs(S)) : mu * 10.0;
        }
        if (!solved) break;
        // Armijo backtracking on the action.
        double gd = 0.0;
        for (size_t j = 0; j < g.size(); ++j) gd += g[j].dot(d[j]);
        double alpha = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            std::vector<Vec> trial = xi;
            for (int j = 1; j < m; ++j) trial[j] = xi[j] + alpha * d[j - 1];
            const double St = discrete_action(L, trial, h);
            if (St <= S + 1e-4 * alpha * gd) {
                xi = std::move(trial);
                S = St;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;
        mu = std::max(mu * 0.25, 0.0);
        for (int j = 1; j < m; ++j) {
            if ((xi[j] - x0).norm() > guard_radius) {
                out.blew_up = true;
                out.xi = xi;
                out.action = S;
                return out;
            }
        }
    }
    if (!out.converged) {
        // Accept near-converged paths; they only seed the shooting stage.
        discrete_gradient(L, xi, h, g);
        double gmax = 0.0;
        for (const auto& gi : g) gmax = std::max(gmax, gi.cwiseAbs().maxCoeff());
        out.converged = gmax <= 1e-6 * (1.0 + std::abs(S));
    }
    out.xi = std::move(xi);
    out.action = S;
    return out;
}

// ---------------------------------------------------------------------------
// Shooting stage: RK4 on the Hamiltonian flow augmented with the running
// action, Newton on the initial covector.
// ---------------------------------------------------------------------------

struct FlowState {
    Vec xi, p;
    double S = 0.0;
};

void flow_rhs(const HamiltonianModel& H, const LagrangianModel& L, const Vec& xi, const Vec& p,
              Vec& dxi, Vec& dp, double& dS) {
    dxi = H.H_p(xi, p);
    dp = -H.H_x(xi, p);
    dS = L.L(xi, dxi);
}

// Integrates the flow from (x, p0) over [0, t] and records the state at the
// m+1 node times. substeps RK4 steps per node interval.
void integrate_flow(const TonelliModel& m, const Vec& x, const Vec& p0, double t, int nodes,
                    int substeps, std::vector<FlowState>& out) {
    const int n = m.lag.dim;
    const double h = t / nodes / substeps;
    FlowState st;
    st.xi = x;
    st.p = p0;
    st.S = 0.0;
    out.assign(nodes + 1, st);
    Vec k1x(n), k1p(n), k2x(n), k2p(n), k3x(n), k3p(n), k4x(n), k4p(n);
    double k1s, k2s, k3s, k4s;
    for (int i = 0; i < nodes; ++i) {
        for (int ss = 0; ss < substeps; ++ss) {
            flow_rhs(m.ham, m.lag, st.xi, st.p, k1x, k1p, k1s);
            flow_rhs(m.ham, m.lag, st.xi + 0.5 * h * k1x, st.p + 0.5 * h * k1p, k2x, k2p, k2s);
            flow_rhs(m.ham, m.lag, st.xi + 0.5 * h * k2x, st.p + 0.5 * h * k2p, k3x, k3p, k3s);
            flow_rhs(m.ham, m.lag, st.xi + h * k3x, st.p + h * k3p, k4x, k4p, k4s);
            st.xi += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
            st.p += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
            st.S += (h / 6.0) * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
        }
        out[i + 1] = st;
    }
}

struct ShootResult {
    std::vector<FlowState> flow;
    double mismatch = 0.0;
    bool ok = false;
};

ShootResult shoot(const TonelliModel& m, const Vec& x, const Vec& y, double t, Vec p0,
                  int nodes, int substeps, double tol, int max_iter) {
    const int n = m.lag.dim;
    ShootResult res;
    std::vector<FlowState> flow;
    integrate_flow(m, x, p0, t, nodes, substeps, flow);
    double err = (flow.back().xi - y).norm();
    for (int it = 0; it < max_iter && err > 1e-13 * (1.0 + y.norm()); ++it) {
        // Jacobian d xi(t) / d p0 by central differences.
        Mat J(n, n);
        const double fd = 1e-6 * (1.0 + p0.norm());
        for (int k = 0; k < n; ++k) {
            Vec pp = p0, pm = p0;
            pp(k) += fd;
            pm(k) -= fd;
            std::vector<FlowState> fp, fm;
            integrate_flow(m, x, pp, t, 1, nodes * substeps, fp);
            integrate_flow(m, x, pm, t, 1, nodes * substeps, fm);
            J.col(k) = (fp.back().xi - fm.back().xi) / (2.0 * fd);
        }
        const Vec rhs = y - flow.back().xi;
        Vec dp = J.fullPivLu().solve(rhs);
        if (!dp.allFinite()) break;
        double alpha = 1.0;
        bool better = false;
        for (int ls = 0; ls < 25; ++ls) {
            std::vector<FlowState> trial;
            integrate_flow(m, x, p0 + alpha * dp, t, nodes, substeps, trial);
            const double e = (trial.back().xi - y).norm();
            if (e < err) {
                p0 += alpha * dp;
                flow = std::move(trial);
                err = e;
                better = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!better) break;
    }
    res.flow = std::move(flow);
    res.mismatch = err;
    res.ok = err <= tol * (1.0 + y.norm());
    return res;
}

Trajectory trajectory_from_flow(const TonelliModel& m, const Vec& x, const Vec& y, double t,
                                const std::vector<FlowState>& flow, double mismatch) {
    const int nodes = int(flow.size()) - 1;
    const double h = t / nodes;
    Trajectory tr;
    tr.t = t;
    tr.s.resize(nodes + 1);
    tr.xi.resize(nodes + 1);
    tr.xi_dot.resize(nodes + 1);
    tr.p.resize(nodes + 1);
    for (int i = 0; i <= nodes; ++i) {
        tr.s[i] = t * i / nodes;
        tr.xi[i] = flow[i].xi;
        tr.p[i] = flow[i].p;
        tr.xi_dot[i] = m.ham.H_p(flow[i].xi, flow[i].p);
    }
    tr.endpoint_error = std::max(mismatch, (tr.xi[0] - x).norm());
    tr.xi[0] = x;
    tr.xi[nodes] = y; // pin the endpoints; the mismatch is recorded above
    tr.action = flow.back().S;

    const double e0 = m.ham.H(tr.xi[0], tr.p[0]);
    double drift = 0.0, vmax = 0.0, elres = 0.0;
    for (int i = 0; i <= nodes; ++i) {
        const double ei = m.ham.H(tr.xi[i], tr.p[i]);
        drift = std::max(drift, std::abs(ei - e0) / (1.0 + std::abs(e0)));
        vmax = std::max(vmax, tr.xi_dot[i].norm());
        if (i > 0 && i < nodes) {
            const Vec pdot = (tr.p[i + 1] - tr.p[i - 1]) / (2.0 * h);
            elres = std::max(elres, (pdot - m.lag.L_x(tr.xi[i], tr.xi_dot[i])).norm());
        }
    }
    tr.energy_drift = drift;
    tr.max_speed = vmax;
    tr.el_residual = elres;
    return tr;
}

std::vector<Vec> straight_seed(const Vec& x, const Vec& y, int m) {
    std::vector<Vec> xi(m + 1);
    for (int i = 0; i <= m; ++i) xi[i] = x + (double(i) / m) * (y - x);
    return xi;
}

} // namespace

Trajectory minimize_action(const TonelliModel& tm, const Vec& x, const Vec& y, double t,
                           const SolveOptions& opts) {
    if (!(t > 0.0)) throw SolverError("minimize_action: t must be positive");
    const LagrangianModel& L = tm.lag;
    const int n = L.dim;
    const int m = opts.nodes > 0 ? opts.nodes : default_nodes(t);
    const double R = std::max((y - x).norm(), 1e-12);
    const double guard = 2.0 * velocity_bound_kappa(L, R / t) * std::max(t, 1.0) + R;

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Multi-start seeds: straight segment plus smooth bump perturbations.
    std::vector<std::vector<Vec>> seeds;
    seeds.push_back(straight_seed(x, y, m));
    for (int k = 1; k < std::max(opts.multistart, 1); ++k) {
        std::vector<Vec> xi = straight_seed(x, y, m);
        Vec d1(n), d2(n);
        for (int i = 0; i < n; ++i) d1(i) = gauss(rng);
        for (int i = 0; i < n; ++i) d2(i) = gauss(rng);
        const double amp = 0.2 * std::max(R, 1e-3);
        d1 *= amp / std::max(d1.norm(), 1e-300);
        d2 *= 0.5 * amp / std::max(d2.norm(), 1e-300);
        for (int i = 1; i < m; ++i) {
            const double u = double(i) / m;
            xi[i] += std::sin(M_PI * u) * d1 + std::sin(2.0 * M_PI * u) * d2;
        }
        seeds.push_back(std::move(xi));
    }

    std::vector<DiscretePath> paths(seeds.size());
    int blowups = 0;
    for (size_t k = 0; k < seeds.size(); ++k) {
        paths[k] = newton_on_path(L, seeds[k], t, guard, x, opts.max_newton_iter);
        if (paths[k].blew_up) ++blowups;
    }

    // Distinct local minimizers, best action first.
    std::vector<int> order;
    for (size_t k = 0; k < paths.size(); ++k)
        if (paths[k].converged && !paths[k].blew_up) order.push_back(int(k));
    if (order.empty()) {
        if (blowups == int(paths.size()))
            throw BlowUp("minimize_action: all starts left the a-priori ball");
        throw NoConvergence("minimize_action: no start converged on the discrete stage");
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return paths[a].action < paths[b].action; });
    const double dedup = 1e-4 * (1.0 + R);
    std::vector<int> distinct;
    for (int k : order) {
        bool fresh = true;
        for (int j : distinct) {
            double dist = 0.0;
            for (size_t i = 0; i < paths[k].xi.size(); ++i)
                dist = std::max(dist, (paths[k].xi[i] - paths[j].xi[i]).norm());
            if (dist <= dedup) {
                fresh = false;
                break;
            }
        }
        if (fresh) distinct.push_back(k);
    }

    if (!opts.refine_shooting) {
        Trajectory tr;
        const DiscretePath& best = paths[distinct.front()];
        const double h = t / m;
        tr.t = t;
        tr.action = best.action;
        tr.s.resize(m + 1);
        tr.xi = best.xi;
        tr.xi_dot.resize(m + 1);
        tr.p.resize(m + 1);
        for (int i = 0; i <= m; ++i) {
            tr.s[i] = t * i / m;
            const Vec v = i < m ? Vec((best.xi[i + 1] - best.xi[i]) / h)
                                : Vec((best.xi[m] - best.xi[m - 1]) / h);
            tr.xi_dot[i] = v;
            tr.p[i] = L.L_v(best.xi[i], v);
            tr.max_speed = std::max(tr.max_speed, v.norm());
        }
        return tr;
    }

    std::ostringstream failures;
    for (int k : distinct) {
        const DiscretePath& cand = paths[k];
        const double h = t / m;
        const Vec v0 = (-3.0 * cand.xi[0] + 4.0 * cand.xi[1] - cand.xi[2]) / (2.0 * h);
        const Vec p0 = L.L_v(x, v0);
        ShootResult sr = shoot(tm, x, y, t, p0, m, opts.substeps, opts.shooting_tol, 40);
        if (sr.ok) {
            for (const auto& st : sr.flow) {
                if ((st.xi - x).norm() > guard)
                    throw BlowUp("minimize_action: refined flow left the a-priori ball");
            }
            return trajectory_from_flow(tm, x, y, t, sr.flow, sr.mismatch);
        }
        failures << " start " << k << ": mismatch " << sr.mismatch << ";";
    }
    throw NoConvergence("minimize_action: shooting refinement failed;" + failures.str());
}

namespace {

int count_multiplicity(const TonelliModel& tm, const Vec& x, const Vec& y, double t,
                       const SolveOptions& opts) {
    if (opts.multistart <= 1) return 1;
    const LagrangianModel& L = tm.lag;
    const int m = opts.nodes > 0 ? opts.nodes : default_nodes(t);
    const double R = std::max((y - x).norm(), 1e-12);
    const double guard = 2.0 * velocity_bound_kappa(L, R / t) * std::max(t, 1.0) + R;
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<Vec>> xs;
    xs.push_back(straight_seed(x, y, m));
    for (int k = 1; k < opts.multistart; ++k) {
        std::vector<Vec> xi = straight_seed(x, y, m);
        Vec d1(L.dim);
        for (int i = 0; i < L.dim; ++i) d1(i) = gauss(rng);
        d1 *= 0.2 * std::max(R, 1e-3) / std::max(d1.norm(), 1e-300);
        for (int i = 1; i < m; ++i) xi[i] += std::sin(M_PI * double(i) / m) * d1;
        xs.push_back(std::move(xi));
    }
    std::vector<std::vector<Vec>> mins;
    for (auto& seed : xs) {
        DiscretePath p = newton_on_path(L, seed, t, guard, x, 60);
        if (p.converged && !p.blew_up) mins.push_back(std::move(p.xi));
    }
    const double dedup = 1e-4 * (1.0 + R);
    std::vector<int> reps;
    for (size_t k = 0; k < mins.size(); ++k) {
        bool fresh = true;
        for (int j : reps) {
            double dist = 0.0;
            for (size_t i = 0; i < mins[k].size(); ++i)
                dist = std::max(dist, (mins[k][i] - mins[j][i]).norm());
            if (dist <= dedup) fresh = false;
        }
        if (fresh) reps.push_back(int(k));
    }
    return std::max(1, int(reps.size()));
}

} // namespace

FundamentalSolution fundamental_solution(const TonelliModel& tm, const Vec& x, const Vec& y,
                                         double t, const SolveOptions& opts) {
    FundamentalSolution fs;
    fs.minimizer = minimize_action(tm, x, y, t, opts);
    const Trajectory& tr = fs.minimizer;
    fs.value = tr.action;
    fs.grad_y = tr.p.back();
    fs.grad_x = -tr.p.front();
    fs.energy = tm.ham.H(tr.xi.front(), tr.p.front());
    fs.dt = -fs.energy;
    fs.multiplicity_hint = count_multiplicity(tm, x, y, t, opts);
    return fs;
}

// ---------------------------------------------------------------------------
// Regularity probes
// ---------------------------------------------------------------------------

namespace {

Vec random_dir(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec d(n);
    do {
        for (int i = 0; i < n; ++i) d(i) = gauss(rng);
    } while (d.norm() < 1e-12);
    return d / d.norm();
}

SolveOptions probe_solve_opts(const ProbeOptions& opts) {
    SolveOptions s = opts.solve;
    if (s.multistart == 5) s.multistart = 3; // enough to flag non-uniqueness
    return s;
}

} // namespace

RegularityProbeReport probe_convexity(const TonelliModel& m, const Vec& x, double t,
                                      double lambda, int sample_count,
                                      const ProbeOptions& opts) {
    if (!(t > 0.0) || !(lambda > 0.0))
        throw SolverError("probe_convexity: t and lambda must be positive");
    const int n = m.lag.dim;
    const double r = lambda * t;
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    std::vector<ProbeSample> samples(sample_count);
    for (auto& s : samples) {
        s.y = x + (0.85 * r * std::pow(u01(rng), 1.0 / n)) * random_dir(rng, n);
        const double zr = std::min(r - (s.y - x).norm(), r) * 0.95;
        s.z = (zr * (0.25 + 0.75 * u01(rng))) * random_dir(rng, n);
    }

    const SolveOptions so = probe_solve_opts(opts);
    std::vector<std::string> errors(sample_count);
    parallel_for(
        sample_count,
        [&](std::ptrdiff_t i) {
            ProbeSample& s = samples[i];
            try {
                FundamentalSolution a0 = fundamental_solution(m, x, s.y, t, so);
                FundamentalSolution ap = fundamental_solution(m, x, s.y + s.z, t, so);
                FundamentalSolution am = fundamental_solution(m, x, s.y - s.z, t, so);
                s.excess = ap.value + am.value - 2.0 * a0.value;
                s.ratio = s.excess * t / s.z.squaredNorm();
                s.unique = a0.multiplicity_hint == 1 && ap.multiplicity_hint == 1 &&
                           am.multiplicity_hint == 1;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        },
        opts.threads);
    for (const auto& e : errors)
        if (!e.empty()) throw SolverError("probe_convexity: " + e);

    RegularityProbeReport rep;
    rep.samples = std::move(samples);
    double lo = 1e300;
    for (const auto& s : rep.samples) lo = std::min(lo, s.ratio);
    rep.constant_estimate = lo;
    rep.worst_ratio = lo;
    rep.pass = lo > 0.0;
    rep.small_time_regime = t < 1.0;
    return rep;
}

RegularityProbeReport probe_semiconcavity(const TonelliModel& m, const Vec& x, double t,
                                          double lambda, int sample_count,
                                          const ProbeOptions& opts) {
    if (!(t > 0.0) || !(lambda > 0.0))
        throw SolverError("probe_semiconcavity: t and lambda must be positive");
    const int n = m.lag.dim;
    const double r = lambda * t;
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    std::vector<ProbeSample> samples(sample_count);
    for (auto& s : samples) {
        s.y = x + (0.85 * r * std::pow(u01(rng), 1.0 / n)) * random_dir(rng, n);
        s.z = (0.9 * r * (0.25 + 0.75 * u01(rng))) * random_dir(rng, n);
        s.h = 0.45 * t * (0.25 + 0.75 * u01(rng));
    }

    const SolveOptions so = probe_solve_opts(opts);
    std::vector<std::string> errors(sample_count);
    parallel_for(
        sample_count,
        [&](std::ptrdiff_t i) {
            ProbeSample& s = samples[i];
            try {
                FundamentalSolution a0 = fundamental_solution(m, x, s.y, t, so);
                FundamentalSolution ap = fundamental_solution(m, x, s.y + s.z, t + s.h, so);
                FundamentalSolution am = fundamental_solution(m, x, s.y - s.z, t - s.h, so);
                s.excess = ap.value + am.value - 2.0 * a0.value;
                s.ratio = s.excess * t / (s.h * s.h + s.z.squaredNorm());
                s.unique = a0.multiplicity_hint == 1 && ap.multiplicity_hint == 1 &&
                           am.multiplicity_hint == 1;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        },
        opts.threads);
    for (const auto& e : errors)
        if (!e.empty()) throw SolverError("probe_semiconcavity: " + e);

    RegularityProbeReport rep;
    rep.samples = std::move(samples);
    double hi = -1e300;
    for (const auto& s : rep.samples) hi = std::max(hi, s.ratio);
    rep.constant_estimate = hi;
    rep.worst_ratio = hi;
    rep.pass = std::isfinite(hi) && hi <= opts.cap;
    rep.small_time_regime = t < 2.0 / 3.0;
    return rep;
}

RegularityRatios main_regularity_check(const TonelliModel& m, const Vec& x, double t,
                                       const Vec& y1, const Vec& y2, const SolveOptions& opts) {
    SolveOptions so = opts;
    if (so.nodes == 0) so.nodes = default_nodes(t);
    const Trajectory t1 = minimize_action(m, x, y1, t, so);
    const Trajectory t2 = minimize_action(m, x, y2, t, so);
    const double dy2 = (y2 - y1).squaredNorm();
    RegularityRatios out;
    if (dy2 == 0.0) return out;

    const int nodes = t1.nodes();
    const double h = t / nodes;
    double sup2 = 0.0, ip = 0.0, iv = 0.0;
    for (int i = 0; i <= nodes; ++i) {
        sup2 = std::max(sup2, (t2.xi[i] - t1.xi[i]).squaredNorm());
        const double w = (i == 0 || i == nodes) ? 0.5 : 1.0;
        ip += w * h * (t2.p[i] - t1.p[i]).squaredNorm();
        iv += w * h * (t2.xi_dot[i] - t1.xi_dot[i]).squaredNorm();
    }
    out.state_ratio = sup2 * t / dy2;
    out.dual_ratio = ip * t / dy2;
    out.velocity_ratio = iv * t / dy2;
    return out;
}

} // namespace hjs
