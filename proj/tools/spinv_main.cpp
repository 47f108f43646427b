// Command-line front end: closed-form spectra, algebra verification, frame
// rotations, and the independent radial-solver comparison.
//
// Exit codes: 0 success, 1 identity violation or comparison over tolerance,
//             2 invalid input or supercritical coupling, 3 solver non-convergence.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spinv/clifford.hpp"
#include "spinv/constants.hpp"
#include "spinv/frame.hpp"
#include "spinv/ledger.hpp"
#include "spinv/oracle.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spinv;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

PhysicalConstants constants_from_env()
{
    PhysicalConstants pc;
    char const* path = std::getenv("SPINV_CONSTANTS");
    if (path == nullptr) {
        return pc;
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument(std::string("cannot read constants file: ") + path);
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto pos = line.find('=');
        if (pos == std::string::npos) {
            continue;
        }
        std::string key = line.substr(0, pos);
        double value = std::stod(line.substr(pos + 1));
        if (key == "alpha") {
            pc.alpha = value;
        } else if (key == "rest_energy_ev" || key == "mc2_ev") {
            pc.rest_energy_ev = value;
        } else {
            throw std::invalid_argument("unknown key in constants file: " + key);
        }
    }
    pc.validate();
    return pc;
}

std::array<double, 2> as_pair(cplx z) { return {z.real(), z.imag()}; }

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(int Z, int n_max, std::string const& format, PhysicalConstants const& pc)
{
    auto lines = ledger::spectrum_table(Z, n_max, pc);
    if (format == "json") {
        std::printf("%s\n", ledger::to_json(lines).c_str());
    } else if (format == "csv") {
        std::printf("%s\n", ledger::csv_header().c_str());
        for (auto const& line : lines) {
            std::printf("%s\n", ledger::to_csv_row(line).c_str());
        }
    } else {
        std::printf("%-16s %3s %5s %3s %6s %18s %14s %4s\n", "label", "n", "j", "nr", "kappa",
                    "eps", "binding_eV", "deg");
        for (auto const& line : lines) {
            std::printf("%-16s %3d %3d/2 %3d %6d %18.15f %14.8f %4d\n", line.label.c_str(),
                        line.n, line.two_j, line.nr, line.kappa, line.eps, line.binding_ev,
                        line.degeneracy);
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------- algebra

struct SuiteLine {
    std::string name;
    double residual;
    double tol;
};

int cmd_algebra(std::uint64_t seed, int samples, double tol, bool inject_fault)
{
    std::vector<SuiteLine> report;

    auto clifford_checks = clifford::verify_products();
    report.push_back({"clifford product identities", clifford::max_residual(clifford_checks), 0.0});

    double r_anti = 0.0;
    double r_commut = 0.0;
    double r_square = 0.0;
    double r_unitary = 0.0;
    double r_axis = 0.0;
    double r_group = 0.0;
    double r_norm = 0.0;

    PhysicalConstants pc;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> jdist(0, 7);
    std::uniform_real_distribution<double> psi_dist(-std::numbers::pi, std::numbers::pi);
    cplx const two_i(0, 2);

    for (int k = 0; k < samples; ++k) {
        int two_j = 2 * jdist(rng) + 1;
        int kappa = (two_j + 1) / 2;
        int zmax = std::min(137 * kappa, static_cast<int>(kappa / pc.alpha) - 1);
        std::uniform_int_distribution<int> zdist(1, zmax);
        int Z = zdist(rng);
        double eps_min = ledger::gamma_j(two_j, Z, pc.alpha) / kappa;
        std::uniform_real_distribution<double> edist(eps_min + 1e-12, 1.0 - 1e-12);
        auto s = ledger::ScalarInvariants::from_state(edist(rng), two_j, Z, pc.alpha);

        auto rep = frame::rep_matrices(s);
        if (inject_fault && k == 0) {
            rep.k(0, 0) += 1e-6; // negative-control hook
        }
        r_anti = std::max(r_anti, anticommutator(rep.k, rep.a).max_abs());
        r_anti = std::max(r_anti, anticommutator(rep.i, rep.k).max_abs());
        r_anti = std::max(r_anti, anticommutator(rep.a, rep.i).max_abs());
        r_commut = std::max(r_commut, (commutator(rep.k, rep.a) - two_i * rep.i).max_abs());
        r_commut = std::max(r_commut, (commutator(rep.i, rep.k) - two_i * s.g1 * rep.a).max_abs());
        r_commut = std::max(r_commut, (commutator(rep.a, rep.i) - two_i * s.g2 * rep.k).max_abs());
        auto sq = rep.k * rep.k + rep.a * rep.a + rep.i * rep.i;
        r_square = std::max(
            r_square,
            (sq - (s.g1 + s.g2 + s.g3) * frame::FrameOperator::identity()).max_abs());

        double psi = psi_dist(rng);
        auto rot = frame::rotation(frame::Axis::x, psi) * frame::rotation(frame::Axis::z, psi * 0.7);
        r_unitary = std::max(
            r_unitary,
            (rot * rot.dagger() - frame::FrameOperator::identity()).max_abs());

        auto ax = frame::eigen_axis(s);
        auto diag_rot = frame::rotation(frame::Axis::x, ax.theta0) *
                        frame::rotation(frame::Axis::z, ax.phi0);
        auto conj = diag_rot * frame::composite(s) * diag_rot.dagger();
        r_axis = std::max(r_axis, std::abs(conj(0, 1)));

        double p2 = psi_dist(rng);
        auto u1 = frame::su2_rotation(psi, s);
        auto u2 = frame::su2_rotation(p2, s);
        auto u12 = frame::su2_rotation(psi + p2, s);
        r_group = std::max(r_group, (u1.r * u2.r - u12.r).max_abs());
        r_norm = std::max(r_norm,
                          std::abs(std::norm(u1.c1) + std::norm(u1.c2) - 1.0));
    }

    report.push_back({"rep anticommutators vanish", r_anti, 0.0});
    report.push_back({"rep commutators ([K,A]=2iI and cyclic)", r_commut, tol});
    report.push_back({"rep squares sum to (g1+g2+g3) Id", r_square, tol});
    report.push_back({"rotation unitarity", r_unitary, 1e-14});
    report.push_back({"eigen-axis off-diagonal", r_axis, tol});
    report.push_back({"hidden-symmetry group law", r_group, tol});
    report.push_back({"|c1|^2 + |c2|^2 = 1", r_norm, tol});

    bool ok = true;
    std::printf("algebra suite: seed=%llu samples=%d tol=%.1e\n",
                static_cast<unsigned long long>(seed), samples, tol);
    for (auto const& line : report) {
        bool pass = line.residual <= std::max(line.tol, tol);
        ok = ok && pass;
        std::printf("  %-42s max residual %.3e  [%s]\n", line.name.c_str(), line.residual,
                    pass ? "ok" : "FAIL");
    }
    std::printf("%s\n", ok ? "all identities hold" : "identity violation detected");
    return ok ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ rotate

int cmd_rotate(int Z, int n, double j, double eps_in, double theta, double phi, double psi,
               PhysicalConstants const& pc)
{
    int two_j = ledger::two_j_from_double(j);
    double eps = eps_in;
    if (eps_in == 0.0) {
        eps = ledger::energy(n, two_j, Z, pc.alpha);
    } else if (!(eps_in > 0.0 && eps_in < 1.0)) {
        throw std::invalid_argument("--eps must lie in (0,1)");
    }
    auto s = ledger::ScalarInvariants::from_state(eps, two_j, Z, pc.alpha);

    auto gen = frame::general_invariant(theta, phi, s);
    auto axis = frame::eigen_axis(s);
    auto su2 = frame::su2_rotation(psi, s);
    bool collapsed = s.g2 <= frame::kCollapseThreshold;

    ordered_json out;
    out["Z"] = Z;
    out["two_j"] = two_j;
    if (n > 0) {
        out["n"] = n;
    }
    out["eps"] = eps;
    out["g"] = {s.g1, s.g2, s.g3};
    out["C"] = {gen.c_k, gen.c_a, gen.c_i};
    out["general_eigenvalue"] = gen.eigenvalue;
    out["eigen_axis"] = {{"phi0", axis.phi0}, {"theta0", axis.theta0}};
    out["c_eig"] = frame::c_eig(s);
    out["psi"] = psi;
    out["c1"] = as_pair(su2.c1);
    out["c2"] = as_pair(su2.c2);
    out["mix_norm"] = std::norm(su2.c1) + std::norm(su2.c2);
    out["collapsed"] = collapsed;
    if (collapsed) {
        auto c = frame::collapse_nr0(s);
        out["surviving_state"] = {as_pair(c.state.c_plus), as_pair(c.state.c_minus)};
        out["note"] = "nodeless shell: sigma families reduce to the single surviving state";
    }
    std::printf("%s\n", out.dump(2).c_str());
    return kExitOk;
}

// ------------------------------------------------------------------ oracle

int cmd_oracle(int Z, int n_max, oracle::SolverConfig const& config, double tol,
               std::string const& format, PhysicalConstants const& pc)
{
    auto report = oracle::compare(Z, n_max, config, pc.alpha);
    if (format == "json") {
        ordered_json out;
        out["Z"] = Z;
        out["n_max"] = n_max;
        out["max_rel_dev"] = report.max_rel_dev;
        out["tol"] = tol;
        out["states"] = ordered_json::array();
        for (auto const& st : report.states) {
            ordered_json row;
            row["n"] = st.n;
            row["kappa_d"] = st.kappa_d;
            row["nr"] = st.n_r;
            row["eps_oracle"] = st.eps_oracle;
            row["eps_ledger"] = st.eps_ledger;
            row["rel_dev"] = st.rel_dev;
            out["states"].push_back(row);
        }
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == "csv") {
        std::printf("n,kappa_d,nr,eps_oracle,eps_ledger,rel_dev\n");
        for (auto const& st : report.states) {
            std::printf("%d,%d,%d,%.17g,%.17g,%.3e\n", st.n, st.kappa_d, st.n_r, st.eps_oracle,
                        st.eps_ledger, st.rel_dev);
        }
    } else {
        std::printf("%3s %8s %3s %20s %20s %10s\n", "n", "kappa_d", "nr", "eps_oracle",
                    "eps_ledger", "rel_dev");
        for (auto const& st : report.states) {
            std::printf("%3d %8d %3d %20.15f %20.15f %10.3e\n", st.n, st.kappa_d, st.n_r,
                        st.eps_oracle, st.eps_ledger, st.rel_dev);
        }
        std::printf("max relative binding deviation: %.3e (tol %.1e)\n", report.max_rel_dev, tol);
    }
    return report.max_rel_dev <= tol ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spinor-invariant algebra of the Dirac-Coulomb problem"};
    app.require_subcommand(1);

    double alpha_override = 0.0;
    double mc2_override = 0.0;
    app.add_option("--alpha", alpha_override, "override the fine-structure constant");
    app.add_option("--mc2", mc2_override, "override the electron rest energy in eV");

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "closed-form bound-state table");
    sp->fallthrough();
    int sp_Z = 1;
    int sp_nmax = 3;
    std::string sp_format = "plain";
    sp->add_option("--Z", sp_Z, "nuclear charge")->required();
    sp->add_option("--nmax", sp_nmax, "largest principal quantum number");
    sp->add_option("--format", sp_format, "json|csv|plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    // algebra
    auto* al = app.add_subcommand("algebra", "verify the invariant-algebra identities");
    al->fallthrough();
    std::uint64_t al_seed = 12345;
    int al_samples = 1000;
    double al_tol = 1e-12;
    bool al_fault = false;
    al->add_option("--seed", al_seed, "random seed");
    al->add_option("--samples", al_samples, "number of random scalar samples");
    al->add_option("--tol", al_tol, "residual tolerance");
    al->add_flag("--inject-fault", al_fault, "perturb one matrix (negative control)");

    // rotate
    auto* ro = app.add_subcommand("rotate", "frame rotations and mixing coefficients");
    ro->fallthrough();
    int ro_Z = 1;
    int ro_n = 0;
    double ro_j = 0.5;
    double ro_eps = 0.0;
    double ro_theta = 0.0;
    double ro_phi = 0.0;
    double ro_psi = 0.0;
    ro->add_option("--Z", ro_Z, "nuclear charge")->required();
    ro->add_option("--n", ro_n, "principal quantum number");
    ro->add_option("--j", ro_j, "total angular momentum (half-odd)")->required();
    ro->add_option("--eps", ro_eps, "dimensionless energy in (0,1), replaces --n");
    ro->add_option("--theta", ro_theta, "polar frame angle");
    ro->add_option("--phi", ro_phi, "azimuthal frame angle");
    ro->add_option("--psi", ro_psi, "hidden-symmetry rotation angle");

    // oracle
    auto* orc = app.add_subcommand("oracle", "radial-solver cross validation");
    orc->fallthrough();
    int or_Z = 1;
    int or_nmax = 3;
    double or_tol = 1e-4;
    std::string or_format = "plain";
    oracle::SolverConfig config;
    orc->add_option("--Z", or_Z, "nuclear charge")->required();
    orc->add_option("--nmax", or_nmax, "largest principal quantum number");
    orc->add_option("--steps", config.steps, "radial grid steps");
    orc->add_option("--rmin", config.r_min, "inner radius (Compton units)");
    orc->add_option("--rmax", config.r_max, "outer radius (0 = automatic)");
    orc->add_option("--tol", or_tol, "acceptable relative binding deviation");
    orc->add_option("--bisect-tol", config.tol, "bisection tolerance on eps");
    orc->add_flag("--bohr-seed", config.bohr_seed,
                  "seed brackets from the nonrelativistic value");
    orc->add_option("--format", or_format, "json|csv|plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    try {
        app.parse(argc, argv);

        PhysicalConstants pc = constants_from_env();
        if (alpha_override != 0.0) {
            pc.alpha = alpha_override;
        }
        if (mc2_override != 0.0) {
            pc.rest_energy_ev = mc2_override;
        }
        pc.validate();

        if (sp->parsed()) {
            return cmd_spectrum(sp_Z, sp_nmax, sp_format, pc);
        }
        if (al->parsed()) {
            return cmd_algebra(al_seed, al_samples, al_tol, al_fault);
        }
        if (ro->parsed()) {
            if (ro_n == 0 && ro_eps == 0.0) {
                throw std::invalid_argument("rotate needs --n or --eps");
            }
            return cmd_rotate(ro_Z, ro_n, ro_j, ro_eps, ro_theta, ro_phi, ro_psi, pc);
        }
        if (orc->parsed()) {
            return cmd_oracle(or_Z, or_nmax, config, or_tol, or_format, pc);
        }
        return kExitInvalid;
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return kExitInvalid;
    } catch (oracle::ConvergenceError const& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoConvergence;
    } catch (std::invalid_argument const& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    } catch (std::domain_error const& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
}
