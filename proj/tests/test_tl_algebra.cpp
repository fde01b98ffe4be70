#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/local_ops.hpp"
#include "core/tl_algebra.hpp"

#include <random>

using namespace fmz;

TEST_CASE("PTL relations hold exactly for L = 3..6") {
    for (int L : {3, 4, 5, 6}) {
        for (const RelationReport& r : check_ptl(L)) {
            INFO(r.relation << " at L=" << L);
            CHECK(r.exact_equal);
            CHECK(r.defect == 0);
            if (r.scalar) CHECK(*r.scalar == 2);  // q + 1/q with q = 1
        }
    }
    CHECK_THROWS_AS(check_ptl(2), std::invalid_argument);
}

TEST_CASE("R-matrix special values") {
    const int L = 3;
    CHECK(r_matrix(1, Rational(-1), L) == local_e(1, L));
    CHECK(r_matrix(1, Rational(1), L) ==
          local_e(1, L) - ExactMatrix::identity(pow3(L)).scaled(2));
    CHECK(r_matrix(2, Rational(5, 7), L) == r_matrix(2, Rational(5, 7), L).transposed());
    CHECK_THROWS_AS(r_matrix(1, Rational(0), L), std::invalid_argument);
}

TEST_CASE("Yang-Baxter holds exactly at fixed rational pairs") {
    CHECK(check_ybe(Rational(1), Rational(2), 3).exact_equal);
    CHECK(check_ybe(Rational(1, 2), Rational(1, 2), 4).exact_equal);
    CHECK_THROWS_AS(check_ybe(Rational(1), Rational(-1), 3), std::invalid_argument);
    CHECK_THROWS_AS(check_ybe(Rational(0), Rational(1), 3), std::invalid_argument);
}

TEST_CASE("Yang-Baxter property sweep: 20 seeded random rational pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int L : {3, 4}) {
        int done = 0;
        while (done < 20) {
            Rational l1(num(rng), den(rng));
            Rational l2(num(rng), den(rng));
            if (l1 == 0 || l2 == 0 || l1 + l2 == 0) continue;
            RelationReport r = check_ybe(l1, l2, L);
            INFO(r.relation);
            CHECK(r.exact_equal);
            ++done;
        }
    }
}

TEST_CASE("g/h builders and transpose duality") {
    auto ops = build_gh(1, 3);
    CHECK(ops.at("h3") == ops.at("h2").transposed());
    CHECK(ops.at("h4") == ops.at("h1").transposed());
    CHECK(ops.at("g2") == ops.at("g2").transposed());
    CHECK(ops.at("g1") == ops.at("g1").transposed());
    CHECK_THROWS_AS(build_gh(1, 2), std::invalid_argument);
}

TEST_CASE("flat-move algebra: scalars, nilpotency and the two deviating entries") {
    for (int L : {3, 4}) {
        int failures = 0;
        for (const RelationReport& r : check_flat_algebra(L)) {
            if (r.scalar) {
                CHECK(*r.scalar == 2);  // every idempotent in the family closes at 2
                continue;
            }
            if (r.relation.find("^2 = 0") != std::string::npos) {
                CHECK(r.exact_equal);
                continue;
            }
            if (!r.exact_equal) {
                ++failures;
                // the only failing products are h2 g1 (lands on h1) and
                // g1 h3 (lands on h4), in both index families
                bool typo1 = r.relation.find("h2 g1 = h2") != std::string::npos;
                bool typo2 = r.relation.find("g1 h3 = h3") != std::string::npos;
                CHECK((typo1 || typo2));
                REQUIRE(r.actual.has_value());
                CHECK(*r.actual == (typo1 ? "h1" : "h4"));
                CHECK(r.defect == Rational(1, 2));
            }
        }
        CHECK(failures == 4 * L);  // 2 relations x 2 index families x L anchors
    }
}

TEST_CASE("both S21 subsets compose as the delta rule") {
    for (int L : {3, 4, 5}) {
        auto reports = check_s21(L);
        REQUIRE(reports.size() == 2);
        for (const RelationReport& r : reports) {
            INFO(r.relation);
            CHECK(r.exact_equal);
        }
    }
}
