#pragma once

#include "exact_matrix.hpp"
#include "word.hpp"

#include <array>

namespace fmz {

struct HamiltonianSpec {
    int length = 0;
    Rational epsilon = 0;  // coupling of the flat term, >= 0
};

/// Local two-link operators on the full 3^L space, acting on links (j, j+1)
/// with link L+1 identified with link 1. All are unnormalized rank-1 outer
/// products |psi><psi| with <psi|psi> = 2, so X^2 = 2X and the magnon
/// dispersion of the assembled Hamiltonian is 2(1 - cos k).
ExactMatrix local_U(int j, int L);
ExactMatrix local_D(int j, int L);
ExactMatrix local_F(int j, int L);
/// e_j = U_j + D_j, the Temperley-Lieb generator (e^2 = 2e).
ExactMatrix local_e(int j, int L);

/// H = sum_j [U_j + D_j + eps * F_j], periodic.
ExactMatrix hamiltonian(const HamiltonianSpec& spec);

/// H restricted to the (u,d) sector, in enumerate_sector order.
/// Only valid at epsilon = 0 (the flat term does not conserve the sector).
ExactMatrix sector_hamiltonian(int L, const SectorLabel& sector);

struct NumberOps {
    ExactMatrix n_u, n_d, n_f;
};
NumberOps number_ops(int L);

/// Site-wise product of [|f><f| + |u><u| + |u><d|]: maps every d to u.
ExactMatrix projector_Pd(int L);

/// Global u <-> d interchange, with the per-site |f><f| term included so the
/// operator is a permutation (the bare product of |u><d| + |d><u| factors
/// annihilates every flat-containing state).
ExactMatrix interchange_op(int L);

/// Permutation matrix of the one-link cyclic translation.
ExactMatrix translation_op(int L);

/// 3x3 single-site matrix over rationals, basis order (u, f, d).
using SiteMatrix = std::array<std::array<Rational, 3>, 3>;

/// sum_j A_j B_{j+1} over the periodic chain.
ExactMatrix two_site_sum(int L, const SiteMatrix& a, const SiteMatrix& b);

namespace site {
SiteMatrix one_u();   // |u><u| + |f><f|
SiteMatrix one_d();   // |f><f| + |d><d|
SiteMatrix u_z();     // |u><u| - |f><f|
SiteMatrix d_z();     // |f><f| - |d><d|
SiteMatrix u_plus();  // |u><f|
SiteMatrix u_minus(); // |f><u|
SiteMatrix d_plus();  // |f><d|
SiteMatrix d_minus(); // |d><f|
}  // namespace site

}  // namespace fmz
