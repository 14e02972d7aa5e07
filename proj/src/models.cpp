#include "hjs/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hjs {

namespace {

double dual_objective(const LagrangianModel& m, const Vec& x, const Vec& p, const Vec& v) {
    return p.dot(v) - m.L(x, v);
}

std::string fmt_residual(double r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

LegendreResult legendre(const LagrangianModel& m, const Vec& x, const Vec& p) {
    const int n = m.dim;
    Vec v = p; // exact for unit quadratic kinetic energy, a sane seed otherwise
    if (!v.allFinite()) v = Vec::Zero(n);

    const double scale = 1.0 + p.norm();
    double res = (m.L_v(x, v) - p).norm();

    for (int it = 0; it < 120 && res > 1e-14 * scale; ++it) {
        Vec g = m.L_v(x, v) - p;
        Mat J = m.L_vv(x, v);
        Vec step;
        bool newton_ok = false;
        Eigen::LDLT<Mat> ldlt(J);
        if (ldlt.info() == Eigen::Success) {
            step = ldlt.solve(-g);
            newton_ok = step.allFinite();
        }
        if (!newton_ok || J.diagonal().minCoeff() <= 0.0) {
            // Gradient ascent on the dual objective with step halving.
            step = g.norm() > 0 ? Vec(-g) : Vec::Zero(n);
        }
        double alpha = 1.0;
        const double f0 = dual_objective(m, x, p, v);
        bool accepted = false;
        for (int ls = 0; ls < 50; ++ls) {
            Vec trial = v + alpha * step;
            const double f1 = dual_objective(m, x, p, trial);
            const double r1 = (m.L_v(x, trial) - p).norm();
            if (f1 > f0 - 1e-14 * (1.0 + std::abs(f0)) || r1 < res) {
                v = trial;
                res = r1;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;
    }

    if (res > 1e-10 * scale) {
        throw NoConvergence("legendre: dual stationarity residual " + fmt_residual(res) +
                            " after Newton with gradient fallback");
    }
    LegendreResult out;
    out.v_star = v;
    out.H = p.dot(v) - m.L(x, v);
    return out;
}

double energy(const LagrangianModel& m, const Vec& x, const Vec& v) {
    return v.dot(m.L_v(x, v)) - m.L(x, v);
}

namespace {

// Golden-section maximum of a concave-ish 1-D function on [a, b].
double golden_max(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > rel_tol * (1.0 + std::abs(a) + std::abs(b))) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::max(f(0.5 * (a + b)), std::max(fc, fd));
}

} // namespace

double conjugate_bound(const LagrangianModel& m, double s) {
    if (s < 0.0) throw Unbounded("conjugate_bound: negative argument");
    auto g = [&](double r) { return r * s - m.theta(r); };
    double r_max = 1.0;
    int doublings = 0;
    while (g(r_max) >= g(0.5 * r_max) && doublings < 80) {
        r_max *= 2.0;
        ++doublings;
    }
    if (doublings >= 80) {
        throw Unbounded("conjugate_bound: no decreasing tail up to r = " + fmt_residual(r_max));
    }
    const double val = golden_max(g, 0.0, r_max, 1e-10);
    return std::max(val, g(0.0));
}

double lambda0_radius(const LagrangianModel& m, double lip) {
    return conjugate_bound(m, lip + 1.0) + m.c0 + m.K(0.0);
}

double velocity_bound_kappa(const LagrangianModel& m, double r) {
    const double c1 = m.K(r) + m.c0;
    const double c2 = c1 + conjugate_bound(m, 1.0);
    const double c3 = 4.0 * m.c0 + 3.0 * m.K(4.0 * c2 / 3.0);
    const double c4 = (m.c0 - c3) + conjugate_bound(m, m.K(1.0) + c3 + 1.0);
    const double c5 = std::max(2.0, c4);
    return std::max(c5, c2);
}

HamiltonianModel dual_hamiltonian(const LagrangianModel& m) {
    HamiltonianModel h;
    h.dim = m.dim;
    h.id = m.id + ":dual";
    h.periodic = m.periodic;
    h.provenance = HamiltonianModel::Provenance::derived_from_lagrangian;

    h.H = [m](const Vec& x, const Vec& p) { return legendre(m, x, p).H; };
    h.H_p = [m](const Vec& x, const Vec& p) { return legendre(m, x, p).v_star; };
    h.H_x = [m](const Vec& x, const Vec& p) {
        const Vec v = legendre(m, x, p).v_star;
        return Vec(-m.L_x(x, v));
    };
    h.H_pp = [m](const Vec& x, const Vec& p) {
        const Vec v = legendre(m, x, p).v_star;
        return Mat(m.L_vv(x, v).inverse());
    };
    h.H_xp = [m](const Vec& x, const Vec& p) {
        const Vec v = legendre(m, x, p).v_star;
        const Mat hpp = m.L_vv(x, v).inverse();
        return Mat(-m.L_xv(x, v) * hpp);
    };
    h.H_xx = [m](const Vec& x, const Vec& p) {
        const Vec v = legendre(m, x, p).v_star;
        const Mat lxv = m.L_xv(x, v);
        const Mat hpp = m.L_vv(x, v).inverse();
        return Mat(-m.L_xx(x, v) + lxv * hpp * lxv.transpose());
    };

    // Derived bound envelope: |H_p| <= C1(|p|) with
    // C1(r) = c0 + theta_bar(0) + theta*(r + 1).
    const LagrangianModel lag = m;
    auto c1 = [lag](double r) {
        return lag.c0 + lag.theta_bar(0.0) + conjugate_bound(lag, r + 1.0);
    };
    h.nu = [lag, c1](double r) { return 1.0 / std::max(lag.K(c1(r)), 1e-12); };
    h.theta = [lag](double s) {
        // sup_R { R s - theta_bar(R) }: conjugate of the upper envelope.
        LagrangianModel tmp = lag;
        tmp.theta = lag.theta_bar;
        return conjugate_bound(tmp, s);
    };
    h.theta_bar = [lag](double s) { return conjugate_bound(lag, s) + lag.c0; };
    h.c0 = 0.0;
    h.K = [lag, c1](double r) {
        const double kl = lag.K(c1(r));
        const double inv = 1.0 / std::max(lag.nu(c1(r)), 1e-12);
        return kl * (1.0 + inv) * (1.0 + inv); // crude but monotone envelope
    };
    return h;
}

namespace {

void fd_check_block(const LagrangianModel& m, const Vec& x, const Vec& v, double& worst) {
    // Central differences of L against the analytic first derivatives, and of
    // those against the second-derivative blocks.
    const int n = m.dim;
    const double hx = 1e-5 * (1.0 + x.norm());
    const double hv = 1e-5 * (1.0 + v.norm());
    const Vec lx = m.L_x(x, v), lv = m.L_v(x, v);
    const Mat lxx = m.L_xx(x, v), lxv = m.L_xv(x, v), lvv = m.L_vv(x, v);
    const double scale1 = 1.0 + lx.norm() + lv.norm();
    const double scale2 = 1.0 + lxx.norm() + lxv.norm() + lvv.norm();
    for (int i = 0; i < n; ++i) {
        Vec e = Vec::Zero(n);
        e(i) = 1.0;
        const double dLx = (m.L(x + hx * e, v) - m.L(x - hx * e, v)) / (2 * hx);
        const double dLv = (m.L(x, v + hv * e) - m.L(x, v - hv * e)) / (2 * hv);
        worst = std::max(worst, std::abs(dLx - lx(i)) / scale1);
        worst = std::max(worst, std::abs(dLv - lv(i)) / scale1);
        const Vec dxx = (m.L_x(x + hx * e, v) - m.L_x(x - hx * e, v)) / (2 * hx);
        const Vec dxv = (m.L_v(x + hx * e, v) - m.L_v(x - hx * e, v)) / (2 * hx);
        const Vec dvv = (m.L_v(x, v + hv * e) - m.L_v(x, v - hv * e)) / (2 * hv);
        worst = std::max(worst, (dxx - lxx.col(i)).norm() / scale2);
        worst = std::max(worst, (dxv - lxv.row(i).transpose()).norm() / scale2);
        worst = std::max(worst, (dvv - lvv.col(i)).norm() / scale2);
    }
}

double max_abs_entry(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

} // namespace

TonelliReport check_tonelli(const TonelliModel& tm, const SampleSpec& spec) {
    const LagrangianModel& m = tm.lag;
    const int n = m.dim;
    Vec lo = spec.box_lo.size() == n ? spec.box_lo : m.box_lo;
    Vec hi = spec.box_hi.size() == n ? spec.box_hi : m.box_hi;

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double m_l1 = 1e300, m_l2lo = 1e300, m_l2hi = 1e300, m_l3 = 1e300;
    double worst_fd = 0.0;
    double m_h1 = 1e300, m_h2 = 1e300, m_h3 = 1e300;
    double worst_dual = 0.0;

    for (int k = 0; k < spec.count; ++k) {
        Vec x(n), v(n);
        for (int i = 0; i < n; ++i) x(i) = lo(i) + (hi(i) - lo(i)) * u01(rng);
        for (int i = 0; i < n; ++i) v(i) = gauss(rng);
        v *= spec.v_radius * u01(rng) / std::max(v.norm(), 1e-300);
        const double r = v.norm();

        Eigen::SelfAdjointEigenSolver<Mat> es(m.L_vv(x, v));
        m_l1 = std::min(m_l1, es.eigenvalues().minCoeff() - m.nu(r));
        const double lval = m.L(x, v);
        m_l2lo = std::min(m_l2lo, lval - (m.theta(r) - m.c0));
        m_l2hi = std::min(m_l2hi, m.theta_bar(r) - lval);
        double dbound = std::max({m.L_x(x, v).cwiseAbs().maxCoeff(),
                                  m.L_v(x, v).cwiseAbs().maxCoeff(), max_abs_entry(m.L_xx(x, v)),
                                  max_abs_entry(m.L_xv(x, v)), max_abs_entry(m.L_vv(x, v))});
        m_l3 = std::min(m_l3, m.K(r) - dbound);
        if (k < std::min(spec.count, 40)) fd_check_block(m, x, v, worst_fd);

        // Hamiltonian side, probed at p = L_v(x, v) so the dual solve is benign.
        const Vec p = m.L_v(x, v);
        const double rp = p.norm();
        const HamiltonianModel& h = tm.ham;
        Eigen::SelfAdjointEigenSolver<Mat> esh(h.H_pp(x, p));
        m_h1 = std::min(m_h1, esh.eigenvalues().minCoeff() - h.nu(rp));
        const double hval = h.H(x, p);
        m_h2 = std::min(m_h2, hval - (h.theta(rp) - h.c0));
        m_h2 = std::min(m_h2, h.theta_bar(rp) - hval);
        double hd = std::max({h.H_x(x, p).cwiseAbs().maxCoeff(),
                              h.H_p(x, p).cwiseAbs().maxCoeff(), max_abs_entry(h.H_pp(x, p)),
                              max_abs_entry(h.H_xp(x, p)), max_abs_entry(h.H_xx(x, p))});
        m_h3 = std::min(m_h3, h.K(rp) - hd);

        // Fenchel identity H(x, L_v(x,v)) + L(x,v) = <p, v>.
        worst_dual = std::max(worst_dual,
                              std::abs(hval + lval - p.dot(v)) / (1.0 + std::abs(hval) + std::abs(lval)));
    }

    TonelliReport rep;
    auto add = [&rep](const std::string& name, double margin, const std::string& note = "") {
        ConditionReport c;
        c.name = name;
        c.worst_margin = margin;
        c.pass = margin >= -1e-12;
        c.note = note;
        rep.conditions.push_back(c);
    };
    add("L1 uniform convexity", m_l1);
    add("L2 lower growth", m_l2lo);
    add("L2 upper growth", m_l2hi);
    add("L3 uniform regularity", m_l3);
    add("L derivative consistency", 1e-5 - worst_fd, "analytic vs central differences");
    add("H1 uniform convexity", m_h1);
    add("H2 growth", m_h2);
    add("H3 uniform regularity", m_h3);
    add("Fenchel identity", 1e-8 - worst_dual);
    rep.all_pass = true;
    for (const auto& c : rep.conditions) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

struct ModelParams {
    std::string name;
    std::vector<std::pair<std::string, std::string>> kv;

    double get(const std::string& key, double fallback) const {
        for (const auto& [k, v] : kv)
            if (k == key) return std::stod(v);
        return fallback;
    }
    std::string get_str(const std::string& key, const std::string& fallback) const {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        return fallback;
    }
};

ModelParams parse_model_spec(const std::string& spec) {
    ModelParams p;
    auto lp = spec.find('(');
    if (lp == std::string::npos) {
        p.name = spec;
        return p;
    }
    p.name = spec.substr(0, lp);
    auto rp = spec.rfind(')');
    if (rp == std::string::npos || rp < lp)
        throw ConfigError("model spec: unbalanced parentheses in '" + spec + "'");
    std::string args = spec.substr(lp + 1, rp - lp - 1);
    std::istringstream is(args);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("model spec: expected key=value in '" + item + "'");
        auto trim = [](std::string s) {
            const char* ws = " \t";
            s.erase(0, s.find_first_not_of(ws));
            s.erase(s.find_last_not_of(ws) + 1);
            return s;
        };
        p.kv.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
    }
    return p;
}

LagrangianModel quadratic_kinetic_base(int n, double box) {
    LagrangianModel m;
    m.dim = n;
    m.box_lo = Vec::Constant(n, -box);
    m.box_hi = Vec::Constant(n, box);
    m.nu = [](double) { return 1.0; };
    return m;
}

TonelliModel make_free(int n) {
    LagrangianModel m = quadratic_kinetic_base(n, 100.0);
    m.id = "free";
    m.L = [](const Vec&, const Vec& v) { return 0.5 * v.squaredNorm(); };
    m.L_x = [n = m.dim](const Vec&, const Vec&) { return Vec::Zero(n); };
    m.L_v = [](const Vec&, const Vec& v) { return v; };
    m.L_xx = [n = m.dim](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    m.L_xv = [n = m.dim](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    m.L_vv = [n = m.dim](const Vec&, const Vec&) { return Mat::Identity(n, n); };
    m.theta = [](double r) { return 0.5 * r * r; };
    m.theta_bar = m.theta;
    m.K = [](double r) { return std::max(r, 1.0); };
    m.c0 = 0.0;

    HamiltonianModel h;
    h.dim = n;
    h.id = "free";
    h.provenance = HamiltonianModel::Provenance::native;
    h.H = [](const Vec&, const Vec& p) { return 0.5 * p.squaredNorm(); };
    h.H_x = [n](const Vec&, const Vec&) { return Vec::Zero(n); };
    h.H_p = [](const Vec&, const Vec& p) { return p; };
    h.H_pp = [n](const Vec&, const Vec&) { return Mat::Identity(n, n); };
    h.H_xp = [n](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    h.H_xx = [n](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    h.nu = [](double) { return 1.0; };
    h.theta = [](double s) { return 0.5 * s * s; };
    h.theta_bar = h.theta;
    h.K = [](double s) { return std::max(s, 1.0); };
    h.c0 = 0.0;
    return {m, h};
}

TonelliModel make_mechanical_const(int n, double c) {
    // L = |v|^2/2 - c with constant potential V = c.
    TonelliModel tm = make_free(n);
    tm.lag.id = "mechanical";
    tm.ham.id = "mechanical";
    const double c0 = std::max(c, 0.0);
    const double up = std::max(-c, 0.0);
    tm.lag.L = [c](const Vec&, const Vec& v) { return 0.5 * v.squaredNorm() - c; };
    tm.lag.theta = [](double r) { return 0.5 * r * r; };
    tm.lag.theta_bar = [up](double r) { return 0.5 * r * r + up; };
    tm.lag.c0 = c0;
    tm.ham.H = [c](const Vec&, const Vec& p) { return 0.5 * p.squaredNorm() + c; };
    tm.ham.theta = [c](double s) { return 0.5 * s * s + c; };
    tm.ham.theta_bar = [c](double s) { return 0.5 * s * s + c; };
    return tm;
}

TonelliModel make_harmonic(int n, double omega, double box) {
    LagrangianModel m = quadratic_kinetic_base(n, box);
    m.id = "harmonic";
    const double w2 = omega * omega;
    m.L = [w2](const Vec& x, const Vec& v) { return 0.5 * v.squaredNorm() - 0.5 * w2 * x.squaredNorm(); };
    m.L_x = [w2](const Vec& x, const Vec&) { return Vec(-w2 * x); };
    m.L_v = [](const Vec&, const Vec& v) { return v; };
    m.L_xx = [w2, n](const Vec&, const Vec&) { return Mat(-w2 * Mat::Identity(n, n)); };
    m.L_xv = [n](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    m.L_vv = [n](const Vec&, const Vec&) { return Mat::Identity(n, n); };
    const double xmax = box * std::sqrt(double(n));
    m.theta = [](double r) { return 0.5 * r * r; };
    m.theta_bar = [](double r) { return 0.5 * r * r; };
    m.c0 = 0.5 * w2 * xmax * xmax;
    m.K = [w2, xmax](double r) { return std::max({r, 1.0, w2 * xmax, w2}); };

    HamiltonianModel h;
    h.dim = n;
    h.id = "harmonic";
    h.provenance = HamiltonianModel::Provenance::native;
    h.H = [w2](const Vec& x, const Vec& p) { return 0.5 * p.squaredNorm() + 0.5 * w2 * x.squaredNorm(); };
    h.H_x = [w2](const Vec& x, const Vec&) { return Vec(w2 * x); };
    h.H_p = [](const Vec&, const Vec& p) { return p; };
    h.H_pp = [n](const Vec&, const Vec&) { return Mat::Identity(n, n); };
    h.H_xp = [n](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    h.H_xx = [w2, n](const Vec&, const Vec&) { return Mat(w2 * Mat::Identity(n, n)); };
    h.nu = [](double) { return 1.0; };
    h.theta = [](double s) { return 0.5 * s * s; };
    h.theta_bar = [w2, xmax](double s) { return 0.5 * s * s + 0.5 * w2 * xmax * xmax; };
    h.K = m.K;
    h.c0 = 0.0;
    return {m, h};
}

TonelliModel make_quartic1d() {
    LagrangianModel m;
    m.dim = 1;
    m.id = "quartic1d";
    m.box_lo = Vec::Constant(1, -100.0);
    m.box_hi = Vec::Constant(1, 100.0);
    m.L = [](const Vec&, const Vec& v) { return 0.25 * std::pow(v(0), 4); };
    m.L_x = [](const Vec&, const Vec&) { return Vec::Zero(1); };
    m.L_v = [](const Vec&, const Vec& v) { return Vec::Constant(1, std::pow(v(0), 3)); };
    m.L_xx = [](const Vec&, const Vec&) { return Mat::Zero(1, 1); };
    m.L_xv = [](const Vec&, const Vec&) { return Mat::Zero(1, 1); };
    m.L_vv = [](const Vec&, const Vec& v) { return Mat::Constant(1, 1, 3.0 * v(0) * v(0)); };
    // The convexity floor degenerates at v = 0; check_tonelli reports this.
    m.nu = [](double r) { return std::max(3.0 * r * r, 1e-12); };
    m.theta = [](double r) { return 0.25 * std::pow(r, 4); };
    m.theta_bar = m.theta;
    m.c0 = 0.0;
    m.K = [](double r) { return std::max({std::pow(r, 3), 3.0 * r * r, 1.0}); };
    return {m, dual_hamiltonian(m)};
}

TonelliModel make_pendulum(int n) {
    LagrangianModel m;
    m.dim = n;
    m.id = "pendulum";
    m.periodic = true;
    m.box_lo = Vec::Zero(n);
    m.box_hi = Vec::Ones(n);
    const double tp = 2.0 * M_PI;
    m.L = [tp](const Vec& x, const Vec& v) {
        double pot = 0.0;
        for (int i = 0; i < x.size(); ++i) pot += std::cos(tp * x(i));
        return 0.5 * v.squaredNorm() - pot;
    };
    m.L_x = [tp, n](const Vec& x, const Vec&) {
        Vec g(n);
        for (int i = 0; i < n; ++i) g(i) = tp * std::sin(tp * x(i));
        return g;
    };
    m.L_v = [](const Vec&, const Vec& v) { return v; };
    m.L_xx = [tp, n](const Vec& x, const Vec&) {
        Mat a = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) a(i, i) = tp * tp * std::cos(tp * x(i));
        return a;
    };
    m.L_xv = [n](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    m.L_vv = [n](const Vec&, const Vec&) { return Mat::Identity(n, n); };
    m.nu = [](double) { return 1.0; };
    m.theta = [](double r) { return 0.5 * r * r; };
    m.theta_bar = [n](double r) { return 0.5 * r * r + n; };
    m.c0 = double(n);
    m.K = [tp, n](double r) { return std::max({r, tp * tp, std::sqrt(double(n)) * tp}); };

    HamiltonianModel h;
    h.dim = n;
    h.id = "pendulum";
    h.periodic = true;
    h.provenance = HamiltonianModel::Provenance::native;
    h.H = [tp](const Vec& x, const Vec& p) {
        double pot = 0.0;
        for (int i = 0; i < x.size(); ++i) pot += std::cos(tp * x(i));
        return 0.5 * p.squaredNorm() + pot;
    };
    h.H_x = [tp, n](const Vec& x, const Vec&) {
        Vec g(n);
        for (int i = 0; i < n; ++i) g(i) = -tp * std::sin(tp * x(i));
        return g;
    };
    h.H_p = [](const Vec&, const Vec& p) { return p; };
    h.H_pp = [n](const Vec&, const Vec&) { return Mat::Identity(n, n); };
    h.H_xp = [n](const Vec&, const Vec&) { return Mat::Zero(n, n); };
    h.H_xx = [tp, n](const Vec& x, const Vec&) {
        Mat a = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) a(i, i) = -tp * tp * std::cos(tp * x(i));
        return a;
    };
    h.nu = [](double) { return 1.0; };
    h.theta = [n](double s) { return 0.5 * s * s - n; };
    h.theta_bar = [n](double s) { return 0.5 * s * s + n; };
    h.K = m.K;
    h.c0 = double(n);
    return {m, h};
}

} // namespace

TonelliModel make_model(const std::string& spec) {
    const ModelParams p = parse_model_spec(spec);
    const int dim = int(p.get("dim", p.name == "quartic1d" || p.name == "pendulum" ? 1.0 : 2.0));
    if (dim < 1 || dim > 8) throw ConfigError("model: dim out of range");
    if (p.name == "free") return make_free(dim);
    if (p.name == "harmonic") return make_harmonic(dim, p.get("omega", 1.0), p.get("box", 4.0));
    if (p.name == "mechanical") {
        const std::string v = p.get_str("v", "zero");
        if (v == "zero") return make_mechanical_const(dim, 0.0);
        if (v == "const") return make_mechanical_const(dim, p.get("c", 0.0));
        throw ConfigError("model: unknown potential id '" + v + "'");
    }
    if (p.name == "quartic1d") return make_quartic1d();
    if (p.name == "pendulum") return make_pendulum(dim);
    throw ConfigError("model: unknown id '" + p.name + "'");
}

std::vector<std::string> list_models() {
    return {"free(dim=)", "harmonic(omega=,dim=,box=)", "mechanical(v=zero|const,c=,dim=)",
            "quartic1d", "pendulum(dim=)"};
}

} // namespace hjs
