#include "spinv/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace spinv::ledger {

namespace {

void require_subcritical(double za, int kappa)
{
    if (!(za < kappa)) {
        throw std::domain_error("supercritical coupling: Z*alpha >= kappa_j");
    }
}

char l_letter(int l)
{
    // spectroscopic series: j is skipped, and p/s are not reused after o/r
    static char const letters[] = "spdfghiklmnoqrtuvwxyz";
    if (l >= 0 && l < static_cast<int>(sizeof(letters) - 1)) {
        return letters[l];
    }
    return '?';
}

} // namespace

bool QuantumNumbers::valid() const
{
    if (n < 1) {
        return false;
    }
    if (two_j < 1 || two_j % 2 == 0 || two_j > 2 * n - 1) {
        return false;
    }
    if (std::abs(two_mj) > two_j || ((two_mj - two_j) % 2) != 0) {
        return false;
    }
    if (n_r() == 0 && sigma == Sign::minus) {
        return false; // the sigma = - vector vanishes on the nodeless shell
    }
    return true;
}

void QuantumNumbers::require_valid() const
{
    if (!valid()) {
        throw std::invalid_argument("invalid quantum numbers {n, j, m_j, sigma}");
    }
}

int kappa_from_two_j(int two_j)
{
    if (two_j < 1 || two_j % 2 == 0) {
        throw std::invalid_argument("j must be a positive half-odd integer");
    }
    return (two_j + 1) / 2;
}

int two_j_from_double(double j)
{
    double two = 2.0 * j;
    int rounded = static_cast<int>(std::lround(two));
    if (std::abs(two - rounded) > 1e-9 || rounded < 1 || rounded % 2 == 0) {
        throw std::invalid_argument("j must be a positive half-odd integer");
    }
    return rounded;
}

double gamma_j(int two_j, int Z, double alpha)
{
    if (Z < 0) {
        throw std::invalid_argument("Z must be non-negative");
    }
    int kappa = kappa_from_two_j(two_j);
    double za = Z * alpha;
    require_subcritical(za, kappa);
    return std::sqrt(double(kappa) * kappa - za * za);
}

double a_eps(double eps, int two_j, int Z, double alpha)
{
    int kappa = kappa_from_two_j(two_j);
    double za = Z * alpha;
    if (za == 0.0) {
        // no bound states at zero coupling; a is defined only through the
        // eps = 1 free limit
        if (eps == 1.0) {
            return 1.0;
        }
        throw std::domain_error("a_eps undefined at Z*alpha = 0 for eps != 1");
    }
    double k2 = double(kappa) * kappa;
    // (1-eps)(1+eps) keeps the relative error of 1 - eps^2 at machine scale;
    // the eps^2 - 1 form loses ~ (Z alpha)^-2 digits near threshold
    double radicand = 1.0 - k2 * (1.0 - eps) * (1.0 + eps) / (za * za);
    // on-shell states reach a^2 = 0 only up to the ulp of eps scaled by the
    // sensitivity 2 kappa^2 / (Z alpha)^2, so the clamp must track that floor
    double clamp = std::max(1e-12, 16.0 * k2 * std::numeric_limits<double>::epsilon() / (za * za));
    if (radicand < -clamp) {
        throw std::domain_error("inconsistent (eps, j): negative a^2 radicand");
    }
    return std::sqrt(std::max(radicand, 0.0));
}

double lambda_value(double kappa, double a)
{
    if (!(kappa >= 1.0) || !(a >= 0.0)) {
        throw std::invalid_argument("lambda_value requires kappa >= 1 and a >= 0");
    }
    return kappa * kappa + (1.0 + kappa * kappa) * a * a;
}

int kappa_max_from_lambda(double lambda)
{
    if (!(lambda >= 1.0)) {
        throw std::invalid_argument("kappa_max_from_lambda requires lambda >= 1");
    }
    int n = static_cast<int>(std::floor(std::sqrt(lambda)));
    // guard the floor against sqrt rounding at perfect squares
    while (double(n + 1) * (n + 1) <= lambda) {
        ++n;
    }
    while (n > 1 && double(n) * n > lambda) {
        --n;
    }
    return n;
}

double energy(int n, int two_j, int Z, double alpha)
{
    int kappa = kappa_from_two_j(two_j);
    if (n < 1 || kappa > n) {
        throw std::invalid_argument("invalid (n, j): requires j + 1/2 <= n");
    }
    double g = gamma_j(two_j, Z, alpha); // also enforces subcriticality
    double za = Z * alpha;
    double gn = (n - kappa) + g;
    return gn / std::sqrt(gn * gn + za * za);
}

double energy_circular(int n, int Z, double alpha)
{
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    double za = Z * alpha;
    require_subcritical(za, n);
    double x = za / n;
    return std::sqrt((1.0 - x) * (1.0 + x));
}

ScalarInvariants ScalarInvariants::from_state(double eps, int two_j, int Z, double alpha)
{
    int kappa = kappa_from_two_j(two_j);
    double a = a_eps(eps, two_j, Z, alpha);
    ScalarInvariants s;
    s.eps = eps;
    s.g1 = double(kappa) * kappa;
    s.g2 = a * a;
    s.g3 = s.g1 * s.g2;
    s.b = std::sqrt(s.g3);
    return s;
}

ScalarInvariants ScalarInvariants::from_g(double g1, double g2, double g3)
{
    if (g1 < 0.0 || g2 < 0.0 || g3 < 0.0) {
        throw std::invalid_argument("invariant eigenvalue squares must be non-negative");
    }
    ScalarInvariants s;
    s.g1 = g1;
    s.g2 = g2;
    s.g3 = g3;
    s.b = std::sqrt(g3);
    return s;
}

InvariantEigenvalues invariant_eigenvalues(double eps, int two_j, int Z, double alpha, Sign sigma)
{
    double kappa = kappa_from_two_j(two_j);
    double a = a_eps(eps, two_j, Z, alpha);
    double s = sign_value(sigma);
    return {s * kappa, s * a, s * kappa * a};
}

std::vector<QuantumNumbers> enumerate_states(int n)
{
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    std::vector<QuantumNumbers> out;
    out.reserve(static_cast<std::size_t>(2 * n * n));
    for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
        int kappa = (two_j + 1) / 2;
        bool nodeless = (kappa == n);
        for (int two_mj = -two_j; two_mj <= two_j; two_mj += 2) {
            out.push_back({n, two_j, two_mj, Sign::plus});
            if (!nodeless) {
                out.push_back({n, two_j, two_mj, Sign::minus});
            }
        }
    }
    return out;
}

std::string spectroscopic_label(int n, int two_j, int nr)
{
    // sigma = + maps to l = j - 1/2, sigma = - to l = j + 1/2; cells with
    // n_r > 0 carry both terms at one energy.
    int l_plus = (two_j - 1) / 2;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d%c%d/2", n, l_letter(l_plus), two_j);
    std::string label(buf);
    if (nr > 0) {
        std::snprintf(buf, sizeof(buf), "/%d%c%d/2", n, l_letter(l_plus + 1), two_j);
        label += buf;
    }
    return label;
}

std::vector<SpectralLine> spectrum_table(int Z, int n_max, PhysicalConstants const& pc)
{
    pc.validate();
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be >= 1");
    }
    if (Z < 0) {
        throw std::invalid_argument("Z must be non-negative");
    }
    std::vector<SpectralLine> out;
    if (Z == 0) {
        return out; // zero coupling binds nothing
    }
    for (int n = 1; n <= n_max; ++n) {
        for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
            int kappa = (two_j + 1) / 2;
            int nr = n - kappa;
            double eps = energy(n, two_j, Z, pc.alpha);
            SpectralLine line;
            line.Z = Z;
            line.n = n;
            line.two_j = two_j;
            line.nr = nr;
            line.kappa = kappa;
            line.label = spectroscopic_label(n, two_j, nr);
            line.eps = eps;
            line.binding_ev = (1.0 - eps) * pc.rest_energy_ev;
            line.degeneracy = (two_j + 1) * (nr > 0 ? 2 : 1);
            out.push_back(std::move(line));
        }
    }
    std::sort(out.begin(), out.end(),
              [](SpectralLine const& a, SpectralLine const& b) { return a.eps < b.eps; });
    return out;
}

std::string csv_header()
{
    return "Z,n,two_j,nr,kappa,label,eps,binding_eV,degeneracy";
}

std::string to_csv_row(SpectralLine const& line)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%d,%s,%.17g,%.17g,%d", line.Z, line.n,
                  line.two_j, line.nr, line.kappa, line.label.c_str(), line.eps,
                  line.binding_ev, line.degeneracy);
    return buf;
}

namespace {

nlohmann::ordered_json line_json(SpectralLine const& line)
{
    nlohmann::ordered_json j;
    j["Z"] = line.Z;
    j["n"] = line.n;
    j["two_j"] = line.two_j;
    j["nr"] = line.nr;
    j["kappa"] = line.kappa;
    j["label"] = line.label;
    j["eps"] = line.eps;
    j["binding_eV"] = line.binding_ev;
    j["degeneracy"] = line.degeneracy;
    return j;
}

} // namespace

std::string to_json(SpectralLine const& line)
{
    return line_json(line).dump();
}

std::string to_json(std::vector<SpectralLine> const& lines)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto const& line : lines) {
        arr.push_back(line_json(line));
    }
    return arr.dump(2);
}

} // namespace spinv::ledger
