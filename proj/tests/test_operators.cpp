#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/local_ops.hpp"

using namespace fmz;

namespace {

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b - b * a;
}

}  // namespace

TEST_CASE("local projector scale: X^2 = 2X, trace 2") {
    for (int L : {2, 3, 4}) {
        for (int j = 1; j <= L; ++j) {
            for (auto* build : {local_U, local_D, local_F}) {
                ExactMatrix x = build(j, L);
                CHECK(x * x == x.scaled(2));
                CHECK(x.trace() == 2 * pow3(L - 2));
                CHECK(x == x.transposed());
            }
        }
    }
}

TEST_CASE("two-site action of U on uf / fu") {
    // U_1 |uf> = |uf> - |fu>, U_1 |fu> = |fu> - |uf>
    ExactMatrix u = local_U(1, 2);
    int64_t uf = ConfigWord::from_string("uf").code();
    int64_t fu = ConfigWord::from_string("fu").code();
    CHECK(u.at(uf, uf) == 1);
    CHECK(u.at(fu, uf) == -1);
    CHECK(u.at(uf, fu) == -1);
    CHECK(u.at(fu, fu) == 1);
    CHECK(u.at(ConfigWord::from_string("dd").code(), ConfigWord::from_string("dd").code()) == 0);
}

TEST_CASE("hamiltonian is symmetric, annihilates the all-flat state") {
    for (int L : {3, 4, 5}) {
        ExactMatrix h = hamiltonian({L, 0});
        CHECK(h == h.transposed());
        std::vector<Rational> flat(pow3(L), Rational(0));
        flat[ConfigWord::all_flat(L).code()] = 1;
        for (const Rational& x : h.apply(flat)) CHECK(x == 0);
    }
    CHECK_THROWS_AS(hamiltonian({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian({4, Rational(-1)}), std::invalid_argument);
}

TEST_CASE("number operators commute with H at epsilon = 0, n_u breaks at epsilon > 0") {
    const int L = 4;
    NumberOps n = number_ops(L);
    ExactMatrix h0 = hamiltonian({L, 0});
    CHECK(commutator(n.n_u, h0).is_zero());
    CHECK(commutator(n.n_d, h0).is_zero());
    CHECK(commutator(n.n_f, h0).is_zero());
    ExactMatrix h1 = hamiltonian({L, 1});
    CHECK_FALSE(commutator(n.n_u, h1).is_zero());
    // u - d stays conserved: ff <-> ud exchanges a balanced pair
    CHECK(commutator(n.n_u - n.n_d, h1).is_zero());
    CHECK_FALSE(commutator(n.n_u + n.n_d, h1).is_zero());
}

TEST_CASE("sector restriction agrees with the full matrix") {
    const int L = 4;
    ExactMatrix h = hamiltonian({L, 0});
    for (SectorLabel s : {SectorLabel{1, 0, L}, SectorLabel{2, 0, L}, SectorLabel{1, 1, L}}) {
        auto words = enumerate_sector(L, s);
        std::vector<int64_t> codes;
        for (const auto& w : words) codes.push_back(w.code());
        CHECK(sector_hamiltonian(L, s) == h.restricted(codes));
    }
}

TEST_CASE("P_d is a projector commuting with H") {
    for (int L : {3, 4}) {
        ExactMatrix p = projector_Pd(L);
        CHECK(p * p == p);
        CHECK(commutator(p, hamiltonian({L, 0})).is_zero());
    }
}

TEST_CASE("interchange and translation are symmetries") {
    for (int L : {3, 4}) {
        ExactMatrix h = hamiltonian({L, 0});
        ExactMatrix s = interchange_op(L);
        ExactMatrix t = translation_op(L);
        CHECK(s * s == ExactMatrix::identity(pow3(L)));
        CHECK(t * t.transposed() == ExactMatrix::identity(pow3(L)));
        CHECK(commutator(s, h).is_zero());
        CHECK(commutator(t, h).is_zero());
        // translation also commutes with the interacting chain
        CHECK(commutator(t, hamiltonian({L, Rational(1, 2)})).is_zero());
    }
}

TEST_CASE("coordinate-list export") {
    ExactMatrix m(2);
    m.set(0, 1, Rational(-1, 3));
    m.set(1, 0, 2);
    CHECK(m.to_coordinate_list() == "0 1 -1/3\n1 0 2/1\n");
}

TEST_CASE("exact rank") {
    ExactMatrix h = hamiltonian({3, 0});
    CHECK(exact_rank(h) == 27 - 14);  // kernel of the L=3 chain has dimension 14
    CHECK(exact_rank(ExactMatrix::identity(5)) == 5);
    CHECK(exact_rank(ExactMatrix(4)) == 0);
}

TEST_CASE("two-site sums reproduce H through the spin embedding") {
    // H at epsilon = 0 equals the sum of the two hopping families plus the
    // diagonal assembled from 1^u, 1^d and the z matrices
    const int L = 4;
    ExactMatrix hop = two_site_sum(L, site::u_plus(), site::u_minus()) +
                      two_site_sum(L, site::u_minus(), site::u_plus()) +
                      two_site_sum(L, site::d_plus(), site::d_minus()) +
                      two_site_sum(L, site::d_minus(), site::d_plus());
    ExactMatrix diag = two_site_sum(L, site::one_u(), site::one_u()).scaled(Rational(1, 2)) +
                       two_site_sum(L, site::one_d(), site::one_d()).scaled(Rational(1, 2)) -
                       two_site_sum(L, site::u_z(), site::u_z()).scaled(Rational(1, 2)) -
                       two_site_sum(L, site::d_z(), site::d_z()).scaled(Rational(1, 2));
    CHECK(diag - hop == hamiltonian({L, 0}));
}
