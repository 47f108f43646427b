#include "spinv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinv/ledger.hpp"

namespace spinv::oracle {

namespace {

constexpr double kRenormThreshold = 1e250;

struct SweepResult {
    double g;
    double f;
    int nodes_g;
    int nodes_f;
};

struct Problem {
    double za;     // Z alpha
    int kappa;
    double eps;
};

// Derivatives in x = ln r: dG/dx = -kappa G + (za + r(eps+1)) F,
//                          dF/dx =  kappa F - (za + r(eps-1)) G.
inline void deriv(Problem const& p, double x, double g, double f, double& dg, double& df)
{
    double r = std::exp(x);
    dg = -p.kappa * g + (p.za + r * (p.eps + 1.0)) * f;
    df = p.kappa * f - (p.za + r * (p.eps - 1.0)) * g;
}

SweepResult rk4_sweep(Problem const& p, double x0, double x1, int m, double g, double f)
{
    double h = (x1 - x0) / m;
    double x = x0;
    int nodes_g = 0;
    int nodes_f = 0;
    double pg = g;
    double pf = f;
    for (int i = 0; i < m; ++i) {
        double k1g, k1f, k2g, k2f, k3g, k3f, k4g, k4f;
        deriv(p, x, g, f, k1g, k1f);
        deriv(p, x + 0.5 * h, g + 0.5 * h * k1g, f + 0.5 * h * k1f, k2g, k2f);
        deriv(p, x + 0.5 * h, g + 0.5 * h * k2g, f + 0.5 * h * k2f, k3g, k3f);
        deriv(p, x + h, g + h * k3g, f + h * k3f, k4g, k4f);
        g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        x += h;
        double mag = std::max(std::abs(g), std::abs(f));
        if (mag > kRenormThreshold) {
            g /= mag;
            f /= mag;
            pg /= mag;
            pf /= mag;
        }
        if (pg != 0.0 && g != 0.0 && std::signbit(pg) != std::signbit(g)) {
            ++nodes_g;
        }
        if (pf != 0.0 && f != 0.0 && std::signbit(pf) != std::signbit(f)) {
            ++nodes_f;
        }
        if (g != 0.0) {
            pg = g;
        }
        if (f != 0.0) {
            pf = f;
        }
    }
    return {g, f, nodes_g, nodes_f};
}

struct Match {
    double defect;
    int nodes_g;
    int nodes_f;
};

Match match_at(int Z, int kappa, double eps, double r_min, double r_max, int steps, double alpha,
               double match_radius = 0.0)
{
    Problem p{Z * alpha, kappa, eps};
    double xmin = std::log(r_min);
    double xmax = std::log(r_max);
    double h = (xmax - xmin) / steps;

    // matching index near the outer turning point (or as pinned), inside the grid
    double rtp = match_radius > 0.0 ? match_radius : p.za / (1.0 - eps);
    double xm = std::log(rtp);
    xm = std::clamp(xm, xmin + 0.1 * (xmax - xmin), xmax - 0.1 * (xmax - xmin));
    int im = static_cast<int>(std::lround((xm - xmin) / h));
    im = std::clamp(im, 1, steps - 1);
    xm = xmin + im * h;

    // outward start from the exact power-law exponent; for kappa < 0 the
    // small-component ratio is written to avoid cancellation in gamma + kappa
    double gam = std::sqrt(double(kappa) * kappa - p.za * p.za);
    double f0 = (kappa < 0) ? -p.za / (gam + std::abs(kappa)) : (gam + kappa) / p.za;
    SweepResult out = rk4_sweep(p, xmin, xm, im, 1.0, f0);

    // inward start on the decaying tail
    double fN = -std::sqrt((1.0 - eps) / (1.0 + eps));
    SweepResult in = rk4_sweep(p, xmax, xm, steps - im, 1.0, fN);

    double no = std::hypot(out.g, out.f);
    double ni = std::hypot(in.g, in.f);
    double defect = (out.f * in.g - in.f * out.g) / (no * ni);
    return {defect, out.nodes_g, out.nodes_f};
}

double default_rmax(int Z, int n, double alpha)
{
    return 40.0 * n * n / (Z * alpha);
}

void require_solvable(int Z, int kappa_d, int n_r, double alpha)
{
    if (Z < 1) {
        throw std::invalid_argument("solver requires Z >= 1");
    }
    if (kappa_d == 0) {
        throw std::invalid_argument("kappa_d must be a nonzero integer");
    }
    if (n_r < 0) {
        throw std::invalid_argument("n_r must be >= 0");
    }
    if (kappa_d > 0 && n_r == 0) {
        throw std::invalid_argument("no bound state: nodeless positive-kappa states do not exist");
    }
    if (!(Z * alpha < std::abs(kappa_d))) {
        throw std::domain_error("supercritical coupling: Z*alpha >= |kappa_d|");
    }
}

// Bisection + secant polish on the matching defect over [lo, hi] where a
// sign change has been established.
double refine_root(int Z, int kappa, double lo, double hi, double d_lo, SolverConfig const& cfg,
                   double r_max, double alpha, int& used)
{
    double d = d_lo;
    int it = 0;
    while (hi - lo > cfg.tol && it < cfg.max_bisections) {
        double mid = 0.5 * (lo + hi);
        double dm = match_at(Z, kappa, mid, cfg.r_min, r_max, cfg.steps, alpha, cfg.match_radius).defect;
        ++it;
        if (dm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (std::signbit(dm) == std::signbit(d)) {
            lo = mid;
            d = dm;
        } else {
            hi = mid;
        }
    }
    used = it;

    double e1 = lo;
    double e2 = hi;
    double d1 = match_at(Z, kappa, e1, cfg.r_min, r_max, cfg.steps, alpha, cfg.match_radius).defect;
    double d2 = match_at(Z, kappa, e2, cfg.r_min, r_max, cfg.steps, alpha, cfg.match_radius).defect;
    for (int k = 0; k < 4 && d2 != d1; ++k) {
        double e3 = e2 - d2 * (e2 - e1) / (d2 - d1);
        if (!std::isfinite(e3) || e3 <= 0.0 || e3 >= 1.0) {
            break;
        }
        e1 = e2;
        d1 = d2;
        e2 = e3;
        d2 = match_at(Z, kappa, e2, cfg.r_min, r_max, cfg.steps, alpha, cfg.match_radius).defect;
    }
    return e2;
}

} // namespace

void SolverConfig::validate() const
{
    if (!(r_min > 0.0)) {
        throw std::invalid_argument("SolverConfig: r_min must be positive");
    }
    if (r_max != 0.0 && !(r_max > r_min)) {
        throw std::invalid_argument("SolverConfig: r_max must exceed r_min");
    }
    if (steps < 1000) {
        throw std::invalid_argument("SolverConfig: steps must be >= 1000");
    }
    if (!(tol >= 1e-12)) {
        throw std::invalid_argument("SolverConfig: tol must be >= 1e-12");
    }
    if (!(bracket > 0.0 && bracket < 1.0)) {
        throw std::invalid_argument("SolverConfig: bracket must be in (0,1)");
    }
    if (match_radius != 0.0 && !(match_radius > r_min)) {
        throw std::invalid_argument("SolverConfig: match_radius must exceed r_min");
    }
}

double matching_defect(int Z, int kappa_d, double eps, SolverConfig const& config, double alpha)
{
    config.validate();
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("matching_defect requires eps in (0,1)");
    }
    if (kappa_d == 0 || Z < 1 || !(Z * alpha < std::abs(kappa_d))) {
        throw std::invalid_argument("matching_defect: bad (Z, kappa_d)");
    }
    double r_max = config.r_max > 0.0
                       ? config.r_max
                       : default_rmax(Z, 3 * std::abs(kappa_d), alpha);
    return match_at(Z, kappa_d, eps, config.r_min, r_max, config.steps, alpha,
                    config.match_radius).defect;
}

RadialSolution solve_bound_state(int Z, int kappa_d, int n_r, SolverConfig const& config,
                                 double alpha)
{
    config.validate();
    require_solvable(Z, kappa_d, n_r, alpha);

    int n = n_r + std::abs(kappa_d);
    int two_j = 2 * std::abs(kappa_d) - 1;
    double r_max = config.r_max > 0.0 ? config.r_max : default_rmax(Z, n, alpha);
    if (!(r_max > config.r_min)) {
        throw std::invalid_argument("SolverConfig: r_max must exceed r_min");
    }

    double binding_seed = config.bohr_seed
                              ? (Z * alpha) * (Z * alpha) / (2.0 * n * n)
                              : 1.0 - ledger::energy(n, two_j, Z, alpha);
    double width = config.bohr_seed ? std::max(config.bracket, 0.25) : config.bracket;

    // the grid must host the state: the outer classical turning point has to
    // sit well inside r_max, otherwise the tail boundary condition is wrong
    // and the matching converges to a box artifact
    double rtp_seed = Z * alpha / binding_seed;
    if (r_max < 1.5 * rtp_seed) {
        throw ConvergenceError("grid cannot host the state: r_max " + std::to_string(r_max) +
                               " is below the outer turning radius " + std::to_string(rtp_seed));
    }

    // widen the binding bracket until the matching defect changes sign
    double d_lo = 0.0;
    double d_hi = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    for (int attempt = 0; attempt < 6 && !bracketed; ++attempt) {
        double b_hi = std::min(binding_seed * (1.0 + width), 1.0 - 1e-12);
        double b_lo = binding_seed * (1.0 - width);
        lo = 1.0 - b_hi; // deeper binding = lower eps
        hi = 1.0 - b_lo;
        if (!(lo > 0.0 && hi < 1.0 && lo < hi)) {
            break;
        }
        d_lo = match_at(Z, kappa_d, lo, config.r_min, r_max, config.steps, alpha,
                        config.match_radius).defect;
        d_hi = match_at(Z, kappa_d, hi, config.r_min, r_max, config.steps, alpha,
                        config.match_radius).defect;
        bracketed = std::signbit(d_lo) != std::signbit(d_hi);
        width *= 1.6;
    }
    if (!bracketed) {
        throw ConvergenceError("bracket failure: no matching-defect sign change around the seed "
                               "(Z=" + std::to_string(Z) + ", kappa_d=" + std::to_string(kappa_d) +
                               ", n_r=" + std::to_string(n_r) + ")");
    }

    int used = 0;
    double eps = refine_root(Z, kappa_d, lo, hi, d_lo, config, r_max, alpha, used);
    if (used >= config.max_bisections) {
        throw ConvergenceError("bisection did not converge within the iteration cap");
    }

    Match final = match_at(Z, kappa_d, eps, config.r_min, r_max, config.steps, alpha,
                           config.match_radius);
    int expected_g = n_r - (kappa_d > 0 ? 1 : 0);
    if (final.nodes_g != expected_g || final.nodes_f != n_r) {
        throw ConvergenceError("node-count mismatch: found G:" + std::to_string(final.nodes_g) +
                               " F:" + std::to_string(final.nodes_f) + ", expected G:" +
                               std::to_string(expected_g) + " F:" + std::to_string(n_r));
    }

    RadialSolution sol;
    sol.eps = eps;
    sol.kappa_d = kappa_d;
    sol.n_r = n_r;
    sol.nodes_large = final.nodes_g;
    sol.nodes_small = final.nodes_f;
    sol.residual = std::abs(final.defect);
    sol.bisections = used;
    return sol;
}

std::vector<RadialSolution> spectrum(int Z, int n_max, SolverConfig const& config, double alpha)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be >= 1");
    }
    std::vector<RadialSolution> out;
    if (Z == 0) {
        return out;
    }
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            out.push_back(solve_bound_state(Z, -k, n - k, config, alpha));
            if (n - k >= 1) {
                out.push_back(solve_bound_state(Z, +k, n - k, config, alpha));
            }
        }
    }
    return out;
}

CompareReport compare(int Z, int n_max, SolverConfig const& config, double alpha)
{
    CompareReport report;
    if (Z == 0) {
        return report; // nothing to compare at zero coupling
    }
    for (auto const& sol : spectrum(Z, n_max, config, alpha)) {
        int n = sol.n_r + std::abs(sol.kappa_d);
        int two_j = 2 * std::abs(sol.kappa_d) - 1;
        double eps_l = ledger::energy(n, two_j, Z, alpha);
        StateComparison c;
        c.n = n;
        c.kappa_d = sol.kappa_d;
        c.n_r = sol.n_r;
        c.eps_oracle = sol.eps;
        c.eps_ledger = eps_l;
        c.rel_dev = std::abs(sol.eps - eps_l) / (1.0 - eps_l);
        report.max_rel_dev = std::max(report.max_rel_dev, c.rel_dev);
        report.states.push_back(c);
    }
    return report;
}

std::vector<RadialSolution> scan_states(int Z, int kappa_d, double binding_lo, double binding_hi,
                                        int points, SolverConfig const& config, double alpha)
{
    config.validate();
    if (!(binding_lo > 0.0 && binding_hi > binding_lo && binding_hi < 1.0)) {
        throw std::invalid_argument("scan_states: need 0 < binding_lo < binding_hi < 1");
    }
    if (points < 3) {
        throw std::invalid_argument("scan_states: need at least 3 points");
    }
    if (kappa_d == 0 || Z < 1 || !(Z * alpha < std::abs(kappa_d))) {
        throw std::invalid_argument("scan_states: bad (Z, kappa_d)");
    }
    int n_window = static_cast<int>(std::ceil(Z * alpha / std::sqrt(2.0 * binding_lo))) + 1;
    double r_max = config.r_max > 0.0 ? config.r_max : default_rmax(Z, n_window, alpha);

    double ratio = std::pow(binding_hi / binding_lo, 1.0 / (points - 1));
    std::vector<RadialSolution> found;
    double b_prev = binding_lo;
    double d_prev = match_at(Z, kappa_d, 1.0 - b_prev, config.r_min, r_max, config.steps, alpha,
                              config.match_radius).defect;
    for (int i = 1; i < points; ++i) {
        double b = binding_lo * std::pow(ratio, i);
        double d = match_at(Z, kappa_d, 1.0 - b, config.r_min, r_max, config.steps, alpha,
                            config.match_radius).defect;
        if (std::signbit(d) != std::signbit(d_prev)) {
            double lo = 1.0 - b;      // higher binding end
            double hi = 1.0 - b_prev; // keep eps ordering lo < hi
            if (lo > hi) {
                std::swap(lo, hi);
            }
            double dl = match_at(Z, kappa_d, lo, config.r_min, r_max, config.steps, alpha,
                                 config.match_radius).defect;
            int used = 0;
            double eps = refine_root(Z, kappa_d, lo, hi, dl, config, r_max, alpha, used);
            Match fin = match_at(Z, kappa_d, eps, config.r_min, r_max, config.steps, alpha,
                                 config.match_radius);
            RadialSolution sol;
            sol.eps = eps;
            sol.kappa_d = kappa_d;
            sol.nodes_large = fin.nodes_g;
            sol.nodes_small = fin.nodes_f;
            sol.n_r = fin.nodes_f; // F carries n_r sign changes for both kappa signs
            sol.residual = std::abs(fin.defect);
            sol.bisections = used;
            found.push_back(sol);
        }
        b_prev = b;
        d_prev = d;
    }
    return found;
}

} // namespace spinv::oracle
