#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "spinv/ledger.hpp"

using namespace spinv;
using namespace spinv::ledger;

namespace {
PhysicalConstants const pc{};
double const kAlpha = pc.alpha;
} // namespace

TEST_CASE("kappa from j")
{
    CHECK(kappa_from_two_j(1) == 1);
    CHECK(kappa_from_two_j(3) == 2);
    CHECK(kappa_from_two_j(9) == 5);
    CHECK_THROWS_AS(kappa_from_two_j(2), std::invalid_argument);
    CHECK_THROWS_AS(kappa_from_two_j(0), std::invalid_argument);
    CHECK_THROWS_AS(kappa_from_two_j(-1), std::invalid_argument);
    CHECK(two_j_from_double(0.5) == 1);
    CHECK(two_j_from_double(7.5) == 15);
    CHECK_THROWS_AS(two_j_from_double(1.0), std::invalid_argument);
    CHECK_THROWS_AS(two_j_from_double(0.4999), std::invalid_argument);
}

TEST_CASE("gamma_j values")
{
    CHECK(gamma_j(1, 0, kAlpha) == 1.0);
    CHECK(gamma_j(3, 0, kAlpha) == 2.0);
    // frozen from a 50-digit evaluation with CODATA alpha
    CHECK(gamma_j(1, 1, kAlpha) == doctest::Approx(0.99997337396826688).epsilon(1e-15));
    CHECK(gamma_j(1, 92, kAlpha) == doctest::Approx(0.74113462699907292).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_j(1, 138, kAlpha), std::domain_error); // 138 alpha > 1
}

TEST_CASE("a_eps limits and round trip")
{
    CHECK(a_eps(1.0, 1, 1, kAlpha) == 1.0);
    // nodeless states sit on a = 0 up to the eps-rounding floor
    // ~ kappa^2 ulp / (Z alpha)^2 in a^2
    for (int n = 1; n <= 10; ++n) {
        double eps = energy(n, 2 * n - 1, 1, kAlpha);
        double a = a_eps(eps, 2 * n - 1, 1, kAlpha);
        CHECK(a * a <= 1e-9);
    }
    // frozen: a(eps_{2,1/2}, j=1/2, Z=1) from the closed-form inversion
    double eps = energy(2, 1, 1, kAlpha);
    CHECK(a_eps(eps, 1, 1, kAlpha) == doctest::Approx(0.86602348218840098).epsilon(1e-12));
    // analytic alternative a^2 = nr (nr + 2 gamma) / N^2
    double g = gamma_j(1, 1, kAlpha);
    double n2 = (1.0 + g) * (1.0 + g) + kAlpha * kAlpha;
    double a2 = 1.0 * (1.0 + 2.0 * g) / n2;
    CHECK(a_eps(eps, 1, 1, kAlpha) * a_eps(eps, 1, 1, kAlpha) == doctest::Approx(a2).epsilon(1e-10));
    CHECK_THROWS_AS(a_eps(0.5, 1, 1, kAlpha), std::domain_error); // strongly negative radicand
}

TEST_CASE("lambda bound and reconstruction")
{
    CHECK(lambda_value(1.0, 0.0) == 1.0);
    CHECK(lambda_value(2.0, 1.0) == 9.0);
    CHECK(kappa_max_from_lambda(1.0) == 1);
    CHECK(kappa_max_from_lambda(9.0) == 3);
    CHECK(kappa_max_from_lambda(9.0 - 1e-13) == 2);
    CHECK(kappa_max_from_lambda(15.99) == 3);

    // kappa^2 <= lambda always; saturation exactly on the nodeless shell
    for (int n = 1; n <= 6; ++n) {
        for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
            int kappa = (two_j + 1) / 2;
            double eps = energy(n, two_j, 1, kAlpha);
            double a = a_eps(eps, two_j, 1, kAlpha);
            double lam = lambda_value(kappa, a);
            CHECK(lam >= double(kappa) * kappa - 1e-12);
            CHECK(kappa_max_from_lambda(lam) >= kappa);
            if (n == kappa) {
                CHECK(kappa_max_from_lambda(lam) == n);
                CHECK(lam == doctest::Approx(double(n) * n).epsilon(1e-8));
            } else {
                CHECK(lam > double(kappa) * kappa);
            }
        }
    }

    // random property: lambda >= kappa^2
    for (int k = 1; k <= 8; ++k) {
        for (double a = 0.0; a < 1.0; a += 0.13) {
            CHECK(lambda_value(k, a) >= double(k) * k);
        }
    }
}

TEST_CASE("energy: frozen values and identities")
{
    // ground state, CODATA constants
    double eps1 = energy(1, 1, 1, kAlpha);
    CHECK(eps1 == doctest::Approx(std::sqrt(1.0 - kAlpha * kAlpha)).epsilon(1e-15));
    CHECK((1.0 - eps1) * pc.rest_energy_ev == doctest::Approx(13.605874258289765).epsilon(1e-12));

    // Z = 92 ground state
    CHECK(energy(1, 1, 92, kAlpha) == doctest::Approx(0.74113462699907292).epsilon(1e-14));

    // fine-structure ordering at n = 2 and the shared 2s/2p cell
    CHECK(energy(2, 1, 1, kAlpha) < energy(2, 3, 1, kAlpha));
    CHECK(energy(2, 3, 1, kAlpha) - energy(2, 1, 1, kAlpha) ==
          doctest::Approx(8.8618785621309263e-11).epsilon(1e-6));

    // circular branch agrees with energy(n, j_max)
    for (int n = 1; n <= 10; ++n) {
        CHECK(std::abs(energy_circular(n, 1, kAlpha) - energy(n, 2 * n - 1, 1, kAlpha)) <= 1e-15);
    }
    CHECK(energy_circular(1, 1, kAlpha) == doctest::Approx(std::sqrt(1.0 - kAlpha * kAlpha)).epsilon(1e-16));
    CHECK(energy_circular(2, 1, kAlpha) ==
          doctest::Approx(std::sqrt(1.0 - kAlpha * kAlpha / 4.0)).epsilon(1e-16));

    // free limit: Z -> 0 gives eps -> 1
    CHECK(energy(1, 1, 0, kAlpha) == 1.0);
    CHECK(energy(5, 3, 0, kAlpha) == 1.0);

    CHECK_THROWS_AS(energy(1, 3, 1, kAlpha), std::invalid_argument); // j > n - 1/2
    CHECK_THROWS_AS(energy(1, 1, 200, kAlpha), std::domain_error);   // supercritical
}

TEST_CASE("energy monotonicity in n and j")
{
    for (int n = 1; n <= 6; ++n) {
        for (int two_j = 1; two_j <= 2 * n - 3; two_j += 2) {
            CHECK(energy(n, two_j, 1, kAlpha) < energy(n, two_j + 2, 1, kAlpha));
        }
    }
    for (int two_j = 1; two_j <= 5; two_j += 2) {
        int n0 = (two_j + 1) / 2;
        for (int n = n0; n <= 6; ++n) {
            CHECK(energy(n, two_j, 1, kAlpha) < energy(n + 1, two_j, 1, kAlpha));
        }
    }
}

TEST_CASE("nonrelativistic limit matches the Bohr ladder")
{
    double za2 = kAlpha * kAlpha;
    for (int n = 1; n <= 5; ++n) {
        for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
            double eps = energy(n, two_j, 1, kAlpha);
            CHECK(std::abs(2.0 * (1.0 - eps) / za2 - 1.0 / double(n * n)) <= za2);
        }
    }
}

TEST_CASE("invariant eigenvalues")
{
    auto ev = invariant_eigenvalues(energy(3, 5, 1, kAlpha), 5, 1, kAlpha, Sign::plus);
    CHECK(ev.eps_k == 3.0);
    CHECK(ev.eps_a * ev.eps_a <= 1e-9); // nodeless: a = 0 up to rounding
    CHECK(ev.eps_i * ev.eps_i <= 1e-8);

    auto em = invariant_eigenvalues(0.99999, 1, 1, kAlpha, Sign::minus);
    CHECK(em.eps_k == -1.0);
    CHECK(em.eps_a <= 0.0);
    CHECK(em.eps_i == doctest::Approx(em.eps_k * std::abs(em.eps_a)).epsilon(1e-14));

    // consistency with the defining relation a^2 = 1 + kappa^2 (eps^2-1)/(Z alpha)^2
    double eps = energy(4, 3, 20, kAlpha);
    auto e4 = invariant_eigenvalues(eps, 3, 20, kAlpha, Sign::plus);
    double za = 20.0 * kAlpha;
    CHECK(e4.eps_a * e4.eps_a ==
          doctest::Approx(1.0 + 4.0 * (eps * eps - 1.0) / (za * za)).epsilon(1e-10));
}

TEST_CASE("state catalog: 2 n^2 with the nodeless sigma exclusion")
{
    for (int n = 1; n <= 8; ++n) {
        auto states = enumerate_states(n);
        CHECK(static_cast<int>(states.size()) == 2 * n * n);
        std::set<std::tuple<int, int, int>> seen;
        for (auto const& q : states) {
            CHECK(q.valid());
            if (q.n_r() == 0) {
                CHECK(q.sigma == Sign::plus);
            }
            seen.insert({q.two_j, q.two_mj, sign_value(q.sigma)});
        }
        CHECK(seen.size() == states.size()); // all distinct
    }

    QuantumNumbers bad{2, 3, 1, Sign::minus}; // n_r = 0 with sigma = -
    CHECK_FALSE(bad.valid());
    CHECK_THROWS_AS(bad.require_valid(), std::invalid_argument);
    QuantumNumbers good{2, 1, -1, Sign::minus};
    CHECK(good.valid());
    CHECK(good.n_r() == 1);
    CHECK(good.kappa() == 1);
}

TEST_CASE("spectrum table structure")
{
    auto t1 = spectrum_table(1, 1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].label == "1s1/2");
    CHECK(t1[0].degeneracy == 2);
    CHECK(t1[0].binding_ev == doctest::Approx(13.605874258289765).epsilon(1e-12));

    auto t2 = spectrum_table(1, 2);
    REQUIRE(t2.size() == 3);
    CHECK(t2[0].label == "1s1/2");
    CHECK(t2[1].label == "2s1/2/2p1/2"); // one cell, both sigma families
    CHECK(t2[1].degeneracy == 4);
    CHECK(t2[2].label == "2p3/2");
    CHECK(t2[2].degeneracy == 4);
    CHECK(t2[1].eps < t2[2].eps);
    for (std::size_t i = 1; i < t2.size(); ++i) {
        CHECK(t2[i - 1].eps < t2[i].eps);
        CHECK(t2[i].binding_ev > 0.0);
        CHECK(t2[i].degeneracy >= 2);
    }

    // total state count over cells matches the catalog
    auto t3 = spectrum_table(1, 3);
    int total = 0;
    for (auto const& line : t3) {
        total += line.degeneracy;
    }
    CHECK(total == 2 * (1 + 4 + 9));

    auto t92 = spectrum_table(92, 1);
    REQUIRE(t92.size() == 1);
    CHECK(t92[0].eps == doctest::Approx(0.741134626999073).epsilon(1e-10));

    CHECK(spectrum_table(0, 3).empty());
}

TEST_CASE("spectral line serialization")
{
    auto lines = spectrum_table(1, 2);
    CHECK(csv_header() == "Z,n,two_j,nr,kappa,label,eps,binding_eV,degeneracy");
    auto row = to_csv_row(lines[0]);
    CHECK(row.substr(0, 4) == "1,1,");
    CHECK(row.find("1s1/2") != std::string::npos);

    auto j = nlohmann::json::parse(to_json(lines[1]));
    CHECK(j["Z"] == 1);
    CHECK(j["n"] == 2);
    CHECK(j["two_j"] == 1);
    CHECK(j["nr"] == 1);
    CHECK(j["kappa"] == 1);
    CHECK(j["label"] == "2s1/2/2p1/2");
    CHECK(j["eps"].is_number_float());
    CHECK(j["binding_eV"].is_number_float());
    CHECK(j["degeneracy"] == 4);

    auto arr = nlohmann::json::parse(to_json(lines));
    CHECK(arr.is_array());
    CHECK(arr.size() == 3);
}

TEST_CASE("g1 realizes the total-momentum eigenvalue shadow")
{
    // kappa^2 = j(j+1) + 1/4 ties the first invariant square to J^2
    for (int two_j = 1; two_j <= 15; two_j += 2) {
        double j = 0.5 * two_j;
        double kappa = kappa_from_two_j(two_j);
        CHECK(kappa * kappa == j * (j + 1.0) + 0.25);
    }
}

TEST_CASE("constants validation")
{
    PhysicalConstants bad;
    bad.alpha = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = PhysicalConstants{};
    bad.rest_energy_ev = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(PhysicalConstants{}.validate());
}

TEST_CASE("quantum-number edge validity")
{
    CHECK_FALSE(QuantumNumbers{2, 1, 2, Sign::plus}.valid());  // m_j parity
    CHECK_FALSE(QuantumNumbers{2, 1, 3, Sign::plus}.valid());  // |m_j| > j
    CHECK_FALSE(QuantumNumbers{2, 4, 1, Sign::plus}.valid());  // integer j
    CHECK_FALSE(QuantumNumbers{0, 1, 1, Sign::plus}.valid());
    CHECK_FALSE(QuantumNumbers{2, 5, 1, Sign::plus}.valid());  // j > n - 1/2
    CHECK(QuantumNumbers{3, 5, -3, Sign::plus}.valid());

    CHECK_THROWS_AS(kappa_max_from_lambda(0.5), std::invalid_argument);
    CHECK_THROWS_AS(gamma_j(1, -2, kAlpha), std::invalid_argument);
    CHECK_THROWS_AS(energy_circular(0, 1, kAlpha), std::invalid_argument);
    CHECK_THROWS_AS(lambda_value(0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_states(0), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_table(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_table(-1, 2), std::invalid_argument);
}

TEST_CASE("every table line satisfies the type invariants")
{
    for (int Z : {1, 20, 92}) {
        for (auto const& line : spectrum_table(Z, 4)) {
            CHECK(line.binding_ev > 0.0);
            CHECK(line.degeneracy >= 2);
            CHECK(line.eps > 0.0);
            CHECK(line.eps < 1.0);
            CHECK(line.kappa == (line.two_j + 1) / 2);
            CHECK(line.nr == line.n - line.kappa);
        }
    }
}

TEST_CASE("scalar invariants carrier")
{
    auto s = ScalarInvariants::from_state(energy(2, 1, 1, kAlpha), 1, 1, kAlpha);
    CHECK(s.g1 == 1.0);
    CHECK(s.g3 == s.g1 * s.g2);
    CHECK(s.b == doctest::Approx(std::sqrt(s.g3)).epsilon(1e-16));
    CHECK(s.g2 > 0.0);

    auto nodeless = ScalarInvariants::from_state(energy(3, 5, 1, kAlpha), 5, 1, kAlpha);
    CHECK(nodeless.g2 <= 1e-9);

    CHECK_THROWS_AS(ScalarInvariants::from_g(-1.0, 0.0, 0.0), std::invalid_argument);
}
