#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/bethe.hpp"
#include "core/local_ops.hpp"

#include <cmath>
#include <numbers>

using namespace fmz;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("magnon energy") {
    CHECK(magnon_energy({Complex(0, 0)}) == doctest::Approx(0));
    CHECK(magnon_energy({Complex(kPi, 0)}) == doctest::Approx(4));
    CHECK(magnon_energy({Complex(2 * kPi / 5, 0)}) ==
          doctest::Approx(2 * (1 - std::cos(2 * kPi / 5))));
    // conjugate momenta: imaginary parts cancel exactly
    CHECK(magnon_energy({Complex(1, 0.5), Complex(1, -0.5)}) ==
          doctest::Approx(2 * (2 - 2 * std::cos(1) * std::cosh(0.5))));
    CHECK_THROWS_AS(magnon_energy({Complex(1, 0.5)}), std::invalid_argument);
}

TEST_CASE("one-particle solutions") {
    const int L = 6;
    auto sols = one_particle_solutions(L);
    REQUIRE(sols.size() == 6);
    double sum = 0;
    for (int m = 0; m < L; ++m) {
        CHECK(sols[m].m == std::vector<int>{m});
        CHECK(sols[m].k[0].real() == doctest::Approx(2 * kPi * m / L));
        CHECK(sols[m].k[0].imag() == 0);
        CHECK(sols[m].energy == doctest::Approx(2 * (1 - std::cos(2 * kPi * m / L))));
        sum += sols[m].energy;
    }
    CHECK(sum == doctest::Approx(2.0 * L));  // sum of 2(1 - cos) over a full period
    CHECK(sols[0].cls == BetheClass::VacuumDescendant);
    CHECK(sols[1].cls == BetheClass::RealScattering);
}

TEST_CASE("scattering phase properties") {
    CHECK(std::abs(scattering_phase_factor(0.7, 0.7) - Complex(-1, 0)) < 1e-12);
    CHECK(std::abs(scattering_phase(Complex(0.7), Complex(0.7)).real()) ==
          doctest::Approx(kPi));
    for (double k1 : {0.3, 1.1}) {
        for (double k2 : {0.9, 2.4}) {
            Complex f = scattering_phase_factor(k1, k2);
            CHECK(std::abs(std::abs(f) - 1.0) < 1e-12);  // unimodular for real momenta
            // exchanging the momenta inverts the factor
            CHECK(std::abs(f * scattering_phase_factor(k2, k1) - Complex(1, 0)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(scattering_phase_factor(0, 0), std::invalid_argument);
}

TEST_CASE("two-particle census for L = 4..12") {
    for (int L = 4; L <= 12; ++L) {
        auto sols = solve_two_particle(L);
        int64_t desc = 0, scat = 0, bound = 0, strings = 0;
        for (const BetheSolution& s : sols) {
            REQUIRE(s.r == 2);
            CHECK(s.bethe_residual < 1e-8);
            switch (s.cls) {
                case BetheClass::VacuumDescendant: ++desc; break;
                case BetheClass::RealScattering: ++scat; break;
                case BetheClass::Bound:
                    ++bound;
                    if (s.string_limit) ++strings;
                    break;
            }
        }
        INFO("L=" << L);
        CHECK(desc == L);
        CHECK(scat == (L - 3) * (L - 2) / 2);
        CHECK(bound == L - 3);
        CHECK(strings == (L % 2 == 0 ? 1 : 0));
        CHECK(static_cast<int64_t>(sols.size()) == L * (L - 1) / 2);
    }
}

TEST_CASE("vacuum descendants carry theta = 0 and a one-magnon energy") {
    for (const BetheSolution& s : solve_two_particle(8)) {
        if (s.cls != BetheClass::VacuumDescendant) continue;
        CHECK(std::abs(s.theta) < 1e-12);
        CHECK(std::abs(s.k[0]) == 0);
        CHECK(s.energy == doctest::Approx(2 * (1 - std::cos(s.k[1].real()))));
    }
}

TEST_CASE("bound states: conjugate pair, energy below the two-magnon band edge") {
    for (int L : {5, 7, 8}) {
        for (const BetheSolution& s : solve_two_particle(L)) {
            if (s.cls != BetheClass::Bound || s.string_limit) continue;
            CHECK(s.k[0].real() == doctest::Approx(s.k[1].real()));
            CHECK(s.k[0].imag() == doctest::Approx(-s.k[1].imag()));
            CHECK(s.k[0].imag() > 0);
            double K = s.k[0].real() + s.k[1].real();
            double v = s.k[0].imag();
            // two-string dispersion E = 4 - 4 cos(K/2) cosh(v)
            CHECK(s.energy == doctest::Approx(4 - 4 * std::cos(K / 2) * std::cosh(v)));
        }
    }
}

TEST_CASE("string-limit state at even L has energy exactly 2 and K = pi") {
    for (int L : {4, 6, 8, 10}) {
        int found = 0;
        for (const BetheSolution& s : solve_two_particle(L)) {
            if (!s.string_limit) continue;
            ++found;
            CHECK(s.energy == doctest::Approx(2.0));
            CHECK(s.k[0].real() + s.k[1].real() == doctest::Approx(kPi));
        }
        CHECK(found == 1);
    }
}

TEST_CASE("constructed uu states are eigenvectors of the full chain") {
    for (int L : {4, 5, 6}) {
        ExactMatrix h = hamiltonian({L, 0});
        for (const BetheSolution& s : solve_two_particle(L)) {
            INFO("L=" << L << " m=(" << s.m[0] << "," << s.m[1] << ")");
            Eigen::VectorXcd v = two_particle_state(L, s, "uu");
            CHECK(eigen_residual(v, s.energy, h) < 1e-8);
        }
    }
}

TEST_CASE("dd states inherit the same residuals by interchange symmetry") {
    const int L = 5;
    ExactMatrix h = hamiltonian({L, 0});
    for (const BetheSolution& s : solve_two_particle(L)) {
        Eigen::VectorXcd v = two_particle_state(L, s, "dd");
        CHECK(eigen_residual(v, s.energy, h) < 1e-8);
    }
}

TEST_CASE("r_particle_state agrees with two_particle_state away from the string limit") {
    const int L = 6;
    ExactMatrix h = hamiltonian({L, 0});
    for (const BetheSolution& s : solve_two_particle(L)) {
        if (s.cls == BetheClass::Bound) continue;  // complex momenta need the pair form
        if (s.m[0] == 0 && s.m[1] == 0) continue;  // phase singularity at k1 = k2 = 0
        Eigen::VectorXcd a = two_particle_state(L, s, "uu");
        Eigen::VectorXcd b = r_particle_state(L, s.k, "uu");
        // same ray: overlap magnitude 1 after normalization
        CHECK(std::abs(a.dot(b)) / b.norm() == doctest::Approx(1.0));
        CHECK(eigen_residual(b / b.norm(), s.energy, h) < 1e-8);
    }
}

TEST_CASE("r_particle_state with zero momenta is the equal-weight zero mode") {
    const int L = 4;
    Eigen::VectorXcd v = r_particle_state(L, {Complex(0), Complex(0), Complex(0)}, "uuu");
    ExactMatrix h = hamiltonian({L, 0});
    CHECK(eigen_residual(v, 0.0, h) < 1e-12);
    int64_t support = 0;
    for (int64_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > 1e-12) ++support;
    CHECK(support == binomial(L, 3));  // one word per ordered position tuple
}

TEST_CASE("eigen_residual edge cases") {
    ExactMatrix h = hamiltonian({3, 0});
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(27);
    CHECK_THROWS_AS(eigen_residual(zero, 0.0, h), std::invalid_argument);
    Eigen::VectorXcd flat = Eigen::VectorXcd::Zero(27);
    flat[ConfigWord::all_flat(3).code()] = 1;
    CHECK(eigen_residual(flat, 0.0, h) == doctest::Approx(0));
}
