#pragma once

#include "exact_matrix.hpp"

#include <complex>
#include <string>
#include <vector>

namespace fmz {

using Complex = std::complex<double>;

enum class BetheClass { VacuumDescendant, RealScattering, Bound };

std::string bethe_class_name(BetheClass c);

struct BetheSolution {
    int L = 0;
    int r = 0;
    std::vector<Complex> k;  // momenta, conjugate pair for bound states
    std::vector<int> m;      // quantum numbers in [0, L-1]
    Complex theta = 0;       // theta_12 (r = 2), antisymmetric partner is -theta
    BetheClass cls = BetheClass::VacuumDescendant;
    /// Bound state in the v -> infinity string limit (total momentum pi,
    /// even L): the nearest-neighbor pair state with energy exactly 2.
    bool string_limit = false;
    double energy = 0;          // 2[r - sum_j cos k_j]
    double bethe_residual = 0;  // quantization-equation defect in exponential form
};

/// E = 2[r - sum cos k_j]; throws "non-physical root set" when the imaginary
/// part survives above 1e-9 (conjugate pairs cancel it).
double magnon_energy(const std::vector<Complex>& momenta);

/// The L one-magnon solutions k = 2 pi m / L, m = 0..L-1; m = 0 is the
/// vacuum descendant.
std::vector<BetheSolution> one_particle_solutions(int L);

/// Principal-branch theta with e^{i theta} =
/// -e^{i(k1-k2)} (e^{-i k1} + e^{i k2} - 2) / (e^{i k1} + e^{-i k2} - 2).
/// Throws "phase singularity" when the denominator magnitude is below 1e-14
/// (both momenta at zero).
Complex scattering_phase(Complex k1, Complex k2);

/// e^{i theta} evaluated directly from the ratio, branch-free.
Complex scattering_phase_factor(Complex k1, Complex k2);

/// All L(L-1)/2 two-particle solutions:
///  - L vacuum descendants k1 = 0, k2 = 2 pi m / L;
///  - (L-3)(L-2)/2 real scattering solutions, quantum numbers
///    1 <= m1 < m2 <= L-1 with m2 - m1 >= 2, from damped fixed-point
///    iteration on L k1 = 2 pi m1 + theta, L k2 = 2 pi m2 - theta;
///  - L-3 bound states, two-string k = K/2 +- iv with v > 0 from
///    one-dimensional root finding; the K = pi candidate at even L has no
///    finite root and enters as the string-limit state.
std::vector<BetheSolution> solve_two_particle(int L);

/// Bethe wavefunction on the full 3^L space: flavored steps (one of "uu",
/// "ud", "du", "dd") at positions n1 < n2, flats elsewhere, amplitude
/// f(n1,n2) = e^{i(k1 n1 + k2 n2 + theta/2)} + e^{i(k2 n1 + k1 n2 - theta/2)},
/// unit norm.
Eigen::VectorXcd two_particle_state(int L, const BetheSolution& sol,
                                    const std::string& flavors);

/// General r-particle Bethe state for supplied momenta: r! plane waves with
/// pairwise half-phases, flavors laid onto ordered positions. All-zero
/// momenta give the equal-weight state; a singular nonidentical pair throws.
Eigen::VectorXcd r_particle_state(int L, const std::vector<Complex>& momenta,
                                  const std::string& flavors);

/// ||H v - E v||_2 for a unit vector; throws on a zero vector.
double eigen_residual(const Eigen::VectorXcd& v, double energy, const ExactMatrix& h);

}  // namespace fmz
