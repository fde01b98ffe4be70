#include "bethe.hpp"

#include "word.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fmz {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Complex cis(Complex z) { return std::exp(Complex(0, 1) * z); }

}  // namespace

std::string bethe_class_name(BetheClass c) {
    switch (c) {
        case BetheClass::VacuumDescendant: return "vacuum-descendant";
        case BetheClass::RealScattering: return "real-scattering";
        case BetheClass::Bound: return "bound";
    }
    throw std::logic_error("bad class");
}

double magnon_energy(const std::vector<Complex>& momenta) {
    if (momenta.empty()) throw std::invalid_argument("empty momentum list");
    Complex e = 0;
    for (Complex k : momenta) e += 2.0 * (1.0 - std::cos(k));
    if (std::abs(e.imag()) > 1e-9) throw std::invalid_argument("non-physical root set");
    return e.real();
}

std::vector<BetheSolution> one_particle_solutions(int L) {
    if (L < 2) throw std::invalid_argument("need L >= 2");
    std::vector<BetheSolution> out;
    for (int m = 0; m < L; ++m) {
        BetheSolution s;
        s.L = L;
        s.r = 1;
        s.m = {m};
        s.k = {Complex(kTwoPi * m / L, 0)};
        s.cls = m == 0 ? BetheClass::VacuumDescendant : BetheClass::RealScattering;
        s.energy = magnon_energy(s.k);
        out.push_back(std::move(s));
    }
    return out;
}

Complex scattering_phase_factor(Complex k1, Complex k2) {
    Complex num = cis(-k1) + cis(k2) - 2.0;
    Complex den = cis(k1) + cis(-k2) - 2.0;
    if (std::abs(den) < 1e-14) throw std::invalid_argument("phase singularity");
    return -cis(k1 - k2) * num / den;
}

Complex scattering_phase(Complex k1, Complex k2) {
    return -Complex(0, 1) * std::log(scattering_phase_factor(k1, k2));
}

namespace {

BetheSolution make_two(int L, int m1, int m2, Complex k1, Complex k2, BetheClass cls) {
    BetheSolution s;
    s.L = L;
    s.r = 2;
    s.m = {m1, m2};
    s.k = {k1, k2};
    s.cls = cls;
    if (k1 == 0.0 && k2 == 0.0) {
        s.theta = 0;
        s.bethe_residual = 0;
    } else {
        s.theta = scattering_phase(k1, k2);
        // quantization in exponential form, branch-free
        Complex f = scattering_phase_factor(k1, k2);
        s.bethe_residual = std::abs(cis(Complex(L, 0) * k1) - f) +
                           std::abs(cis(Complex(L, 0) * k2) * f - 1.0);
    }
    s.energy = magnon_energy(s.k);
    return s;
}

/// Bound-state condition for the two-string k = K/2 +- iv at quantum
/// numbers (m1, m2): with c = cos(pi (m1+m2) / L) and s = (-1)^(m2-m1),
///   s e^{-Lv} + e^{-2v} (e^v c - 1) / (e^{-v} c - 1) = 0.
double bound_condition(int L, double c, int sign, double v) {
    return sign * std::exp(-L * v) +
           std::exp(-2 * v) * (std::exp(v) * c - 1) / (std::exp(-v) * c - 1);
}

}  // namespace

std::vector<BetheSolution> solve_two_particle(int L) {
    if (L < 4) throw std::invalid_argument("need L >= 4");
    std::vector<BetheSolution> out;

    // vacuum descendants: k1 = 0, the partner a free one-magnon wave
    for (int m = 0; m < L; ++m)
        out.push_back(make_two(L, 0, m, 0.0, kTwoPi * m / L, BetheClass::VacuumDescendant));

    // real scattering: damped fixed point on the coupled quantization equations
    for (int m1 = 1; m1 < L; ++m1) {
        for (int m2 = m1 + 2; m2 < L; ++m2) {
            double k1 = kTwoPi * m1 / L, k2 = kTwoPi * m2 / L;
            bool converged = false;
            for (int it = 0; it < 20000; ++it) {
                double th = scattering_phase(k1, k2).real();
                double n1 = (kTwoPi * m1 + th) / L;
                double n2 = (kTwoPi * m2 - th) / L;
                double step = std::abs(n1 - k1) + std::abs(n2 - k2);
                k1 += 0.5 * (n1 - k1);
                k2 += 0.5 * (n2 - k2);
                if (step < 1e-13) {
                    converged = true;
                    break;
                }
            }
            BetheSolution s = make_two(L, m1, m2, k1, k2, BetheClass::RealScattering);
            if (!converged || s.bethe_residual > 1e-12)
                throw std::runtime_error("two-particle root did not converge at (m1, m2) = (" +
                                         std::to_string(m1) + ", " + std::to_string(m2) + ")");
            out.push_back(std::move(s));
        }
    }

    // bound states: candidates have m2 - m1 in {0, 1}
    for (int m1 = 1; m1 < L; ++m1) {
        for (int m2 = m1; m2 <= m1 + 1 && m2 < L; ++m2) {
            int I = m1 + m2;
            double c = std::cos(std::numbers::pi * I / L);
            int sign = (m2 - m1) % 2 == 0 ? 1 : -1;
            if (std::abs(c) < 1e-12) {
                // no finite root: the string limit v -> infinity, K = pi.
                // Both c = 0 candidates (I = L/2 and 3L/2) describe the same
                // state; keep the first.
                if (I != L / 2 || 2 * I != L) continue;
                BetheSolution s;
                s.L = L;
                s.r = 2;
                s.m = {m1, m2};
                double K = kTwoPi * I / L;  // = pi
                s.k = {Complex(K / 2, 0), Complex(K / 2, 0)};  // real parts of the string
                s.cls = BetheClass::Bound;
                s.string_limit = true;
                s.energy = 2.0;  // exact for the nearest-neighbor pair state
                s.bethe_residual = 0;
                out.push_back(std::move(s));
                continue;
            }
            // bracket scan then bisection on v in (0, 15]
            const int kGrid = 8000;
            const double lo = 1e-6, hi = 15.0;
            double prev_v = lo, prev_g = bound_condition(L, c, sign, lo);
            double root = -1;
            for (int i = 1; i <= kGrid; ++i) {
                double v = lo + (hi - lo) * i / kGrid;
                double g = bound_condition(L, c, sign, v);
                if (prev_g == 0) {
                    root = prev_v;
                    break;
                }
                if (prev_g * g < 0) {
                    double a = prev_v, b = v;
                    for (int it = 0; it < 200; ++it) {
                        double mid = 0.5 * (a + b);
                        double gm = bound_condition(L, c, sign, mid);
                        if (gm == 0) {
                            a = b = mid;
                            break;
                        }
                        (prev_g * gm < 0 ? b : a) = mid;
                    }
                    root = 0.5 * (a + b);
                    break;
                }
                prev_v = v;
                prev_g = g;
            }
            if (root <= 1e-6) continue;  // candidate without a bound state
            double K = kTwoPi * I / L;
            BetheSolution s = make_two(L, m1, m2, Complex(K / 2, root), Complex(K / 2, -root),
                                       BetheClass::Bound);
            out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

void validate_flavors(const std::string& flavors, size_t r) {
    if (flavors.size() != r) throw std::invalid_argument("flavor word length mismatch");
    for (char c : flavors)
        if (c != 'u' && c != 'd') throw std::invalid_argument("flavors must be over {u, d}");
}

int64_t word_code(int L, const std::vector<int>& positions, const std::string& flavors) {
    std::vector<Step> steps(L, Step::F);
    for (size_t i = 0; i < positions.size(); ++i)
        steps[positions[i] - 1] = flavors[i] == 'u' ? Step::U : Step::D;
    return ConfigWord(std::move(steps)).code();
}

Eigen::VectorXcd normalized(Eigen::VectorXcd v) {
    double n = v.norm();
    if (n < 1e-300) throw std::invalid_argument("zero Bethe state");
    return v / n;
}

}  // namespace

Eigen::VectorXcd two_particle_state(int L, const BetheSolution& sol,
                                    const std::string& flavors) {
    if (sol.r != 2 || sol.L != L) throw std::invalid_argument("not a two-particle solution");
    validate_flavors(flavors, 2);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(pow3(L));
    if (sol.string_limit) {
        for (int n = 1; n <= L; ++n) {
            int n1 = n, n2 = n % L + 1;
            if (n1 > n2) std::swap(n1, n2);
            double sign = n % 2 == 0 ? 1.0 : -1.0;
            // the wrap pair (1, L) enters from n = L with sign (-1)^L
            v[word_code(L, {n1, n2}, n == L ? std::string{flavors[1], flavors[0]} : flavors)] +=
                sign;
        }
        return normalized(std::move(v));
    }
    Complex k1 = sol.k[0], k2 = sol.k[1];
    Complex half = cis(sol.theta / 2.0);
    for (int n1 = 1; n1 <= L; ++n1) {
        for (int n2 = n1 + 1; n2 <= L; ++n2) {
            Complex amp = cis(k1 * double(n1) + k2 * double(n2)) * half +
                          cis(k2 * double(n1) + k1 * double(n2)) / half;
            v[word_code(L, {n1, n2}, flavors)] = amp;
        }
    }
    return normalized(std::move(v));
}

Eigen::VectorXcd r_particle_state(int L, const std::vector<Complex>& momenta,
                                  const std::string& flavors) {
    const int r = static_cast<int>(momenta.size());
    if (r < 1 || r > L) throw std::invalid_argument("need 1 <= r <= L");
    validate_flavors(flavors, r);

    bool all_zero = std::all_of(momenta.begin(), momenta.end(),
                                [](Complex k) { return k == 0.0; });
    // pairwise half-phases; theta(j, l) = -theta(l, j)
    std::vector<std::vector<Complex>> theta(r, std::vector<Complex>(r, 0));
    if (!all_zero) {
        for (int j = 0; j < r; ++j) {
            for (int l = j + 1; l < r; ++l) {
                theta[j][l] = scattering_phase(momenta[j], momenta[l]);
                theta[l][j] = -theta[j][l];
            }
        }
    }

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(pow3(L));
    std::vector<int> positions(r);
    for (int i = 0; i < r; ++i) positions[i] = i + 1;
    while (true) {
        Complex amp = 0;
        std::vector<int> perm(r);
        for (int i = 0; i < r; ++i) perm[i] = i;
        do {
            Complex phase = 0;
            for (int j = 0; j < r; ++j) phase += momenta[perm[j]] * double(positions[j]);
            for (int j = 0; j < r; ++j)
                for (int l = j + 1; l < r; ++l) phase += 0.5 * theta[perm[j]][perm[l]];
            amp += cis(phase);
        } while (std::next_permutation(perm.begin(), perm.end()));
        v[word_code(L, positions, flavors)] = amp;

        // advance to the next strictly increasing position tuple
        int i = r - 1;
        while (i >= 0 && positions[i] == L - (r - 1 - i)) --i;
        if (i < 0) break;
        ++positions[i];
        for (int j = i + 1; j < r; ++j) positions[j] = positions[j - 1] + 1;
    }
    return normalized(std::move(v));
}

double eigen_residual(const Eigen::VectorXcd& v, double energy, const ExactMatrix& h) {
    if (v.size() != h.dim()) throw std::invalid_argument("dimension mismatch");
    if (v.norm() < 1e-300) throw std::invalid_argument("zero vector");
    return (h.apply(v) - energy * v).norm();
}

}  // namespace fmz
