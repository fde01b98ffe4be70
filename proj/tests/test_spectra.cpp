#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/bethe.hpp"
#include "core/spectra.hpp"

#include <cmath>
#include <numbers>

using namespace fmz;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("distinct clustering") {
    auto d = distinct_eigenvalues({0.0, 1e-12, 1.0, 1.0 + 1e-12, 2.5});
    REQUIRE(d.size() == 3);
    CHECK(d[0].multiplicity == 2);
    CHECK(d[1].multiplicity == 2);
    CHECK(d[2].multiplicity == 1);
}

TEST_CASE("spectrum is positive semidefinite with the expected kernel") {
    const int64_t expected[] = {7, 14, 26, 48, 88};  // L = 2..6
    for (int L = 2; L <= 6; ++L) {
        SpectrumReport rep = dense_spectrum(L, 0);
        CHECK(static_cast<int64_t>(rep.eigenvalues.size()) == pow3(L));
        CHECK(rep.eigenvalues.front() > -1e-10);
        CHECK(rep.kernel_dim == expected[L - 2]);
        CHECK_FALSE(rep.gap_ambiguity);
        CHECK(rep.smallest_nonzero > 1e-8);
        int64_t from_sectors = 0;
        for (const SectorSpectrum& s : rep.sectors) {
            from_sectors += static_cast<int64_t>(s.eigenvalues.size());
            CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
        }
        CHECK(from_sectors == pow3(L));
    }
}

TEST_CASE("kernel report per aggregated r-sector") {
    KernelReport rep = kernel_dimension(5, 0);
    CHECK(rep.total == 48);
    REQUIRE(rep.per_r.size() == 6);
    int64_t sum = 0;
    for (int64_t z : rep.per_r) sum += z;
    CHECK(sum == rep.total);
    CHECK(rep.per_r[0] == 1);                    // the all-flat state
    CHECK(rep.per_r[5] == (int64_t(1) << 5));    // every flat-free word
}

TEST_CASE("interchange symmetry: sector (u, d) matches (d, u)") {
    const int L = 5;
    for (auto [u, d] : {std::pair{2, 0}, {2, 1}, {3, 1}}) {
        auto a = sector_spectrum(L, {u, d, L});
        auto b = sector_spectrum(L, {d, u, L});
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
    }
}

TEST_CASE("single-flavor sector matches the oracle magnon block") {
    const int L = 6;
    for (int r : {2, 3}) {
        auto fm = sector_spectrum(L, {r, 0, L});
        auto xxx = xxx_reference_spectrum(L, r);
        REQUIRE(fm.size() == xxx.size());
        for (size_t i = 0; i < fm.size(); ++i)
            CHECK(fm[i] == doctest::Approx(xxx[i]).epsilon(1e-8));
    }
}

TEST_CASE("one-magnon sector matches the free dispersion") {
    const int L = 6;
    auto vals = sector_spectrum(L, {1, 0, L});
    std::vector<double> expected;
    for (int m = 0; m < L; ++m) expected.push_back(2 * (1 - std::cos(2 * kPi * m / L)));
    std::sort(expected.begin(), expected.end());
    REQUIRE(vals.size() == expected.size());
    for (size_t i = 0; i < vals.size(); ++i)
        CHECK(vals[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("xxx oracle: magnon blocks") {
    const int L = 6;
    auto zero = xxx_reference_spectrum(L, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == doctest::Approx(0));
    auto one = xxx_reference_spectrum(L, 1);
    REQUIRE(one.size() == 6);
    std::vector<double> expected;
    for (int m = 0; m < L; ++m) expected.push_back(2 * (1 - std::cos(2 * kPi * m / L)));
    std::sort(expected.begin(), expected.end());
    for (size_t i = 0; i < one.size(); ++i)
        CHECK(one[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("xxx two-magnon block equals the two-particle root energies") {
    const int L = 6;
    auto xxx = xxx_reference_spectrum(L, 2);
    std::vector<double> bethe;
    for (const BetheSolution& s : solve_two_particle(L)) bethe.push_back(s.energy);
    std::sort(bethe.begin(), bethe.end());
    REQUIRE(xxx.size() == bethe.size());
    for (size_t i = 0; i < xxx.size(); ++i)
        CHECK(xxx[i] == doctest::Approx(bethe[i]).epsilon(1e-7));
}

TEST_CASE("comparison to the spin-1/2 oracle records the mismatch honestly") {
    ComparisonReport rep = compare_to_xxx(5);
    CHECK_FALSE(rep.all_match);
    CHECK_FALSE(rep.distinct_match);
    CHECK(rep.distinct_fm == 29);
    CHECK(rep.distinct_xxx == 6);
    CHECK_FALSE(rep.fm_only.empty());
    CHECK(rep.xxx_only.empty());  // the oracle levels all appear in the chain
    bool r1_clean = false, some_sector_fails = false;
    for (const SectorComparison& s : rep.sectors) {
        if (s.r == 1 && s.zero_modes_match && s.nonzero_ratio_match) r1_clean = true;
        if (s.r >= 2 && !(s.zero_modes_match && s.nonzero_ratio_match))
            some_sector_fails = true;
    }
    CHECK(r1_clean);
    CHECK(some_sector_fails);
}

TEST_CASE("momentum resolution inside the (1, 0) sector") {
    const int L = 5;
    auto blocks = momentum_resolve(L, {1, 0, L});
    int64_t total = 0;
    for (const auto& [m, vals] : blocks) {
        CHECK(m >= 0);
        CHECK(m < L);
        total += static_cast<int64_t>(vals.size());
    }
    CHECK(total == sector_dimension({1, 0, L}));
    // the magnon at k = 2 pi / 5 sits in the m = 1 block, its mirror in m = 4
    double e = 2 * (1 - std::cos(2 * kPi / 5));
    REQUIRE(blocks.count(1) == 1);
    REQUIRE(blocks.count(4) == 1);
    CHECK(blocks.at(1).size() == 1);
    CHECK(blocks.at(1)[0] == doctest::Approx(e).epsilon(1e-9));
    CHECK(blocks.at(4)[0] == doctest::Approx(e).epsilon(1e-9));
}

TEST_CASE("the all-flat state carries zero momentum") {
    auto blocks = momentum_resolve(4, {0, 0, 4});
    REQUIRE(blocks.size() == 1);
    CHECK(blocks.count(0) == 1);
    CHECK(blocks.at(0)[0] == doctest::Approx(0));
}

TEST_CASE("dense cap is enforced") {
    CHECK_THROWS_AS(dense_spectrum(kDenseCap + 1, 0), std::invalid_argument);
}

TEST_CASE("interacting spectrum stays positive semidefinite") {
    for (const Rational& eps : {Rational(1, 4), Rational(1), Rational(4)}) {
        SpectrumReport rep = dense_spectrum(4, eps);
        CHECK(rep.eigenvalues.front() > -1e-10);
        CHECK(rep.sectors.empty());  // sectors mix away from epsilon = 0
    }
}
