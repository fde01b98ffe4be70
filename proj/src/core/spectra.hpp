#pragma once

#include "exact_matrix.hpp"
#include "word.hpp"

#include <map>
#include <string>
#include <vector>

namespace fmz {

/// Largest L diagonalized densely (3^8 = 6561).
inline constexpr int kDenseCap = 8;

struct DistinctValue {
    double value = 0;
    int64_t multiplicity = 0;
};

/// Clusters a sorted eigenvalue list: adjacent values closer than
/// rel_tol * max(1, |value|) are merged.
std::vector<DistinctValue> distinct_eigenvalues(const std::vector<double>& sorted,
                                                double rel_tol = 1e-9);

struct SectorSpectrum {
    SectorLabel sector;
    std::vector<double> eigenvalues;  // ascending
    int64_t kernel_dim = 0;
};

struct SpectrumReport {
    int L = 0;
    Rational epsilon = 0;
    std::vector<double> eigenvalues;      // full spectrum, ascending
    std::vector<SectorSpectrum> sectors;  // populated at epsilon = 0 only
    int64_t kernel_dim = 0;
    double smallest_nonzero = 0;
    bool gap_ambiguity = false;  // smallest nonzero eigenvalue < 100 * tol
    std::vector<DistinctValue> distinct;
};

/// Full dense spectrum. At epsilon = 0 the matrix is diagonalized sector by
/// sector (the sectors are conserved); otherwise as one dense block.
SpectrumReport dense_spectrum(int L, const Rational& epsilon, double tol = 1e-10);

/// Spectrum of the (u, d) block at epsilon = 0.
std::vector<double> sector_spectrum(int L, const SectorLabel& sector);

struct KernelReport {
    int64_t total = 0;
    double smallest_nonzero = 0;
    bool gap_ambiguity = false;
    /// zero modes of the aggregated u + d = r subspace, r = 0..L (epsilon = 0 only)
    std::vector<int64_t> per_r;
};

KernelReport kernel_dimension(int L, const Rational& epsilon, double tol = 1e-10);

/// Independent reference: periodic spin-1/2 chain H = sum_j (1 - P_{j,j+1})
/// restricted to the fixed-magnon block, built directly on bitmask words.
std::vector<double> xxx_reference_spectrum(int L, int magnons);

struct SectorComparison {
    int r = 0;
    int64_t zero_modes = 0;
    int64_t expected_zero_modes = 0;  // 2^r for 1 <= r <= L-1, 1 at r=0, 2^L at r=L
    bool zero_modes_match = false;
    int64_t nonzero_count = 0;
    /// True when every distinct nonzero eigenvalue of the aggregated sector
    /// appears with multiplicity exactly 2^r times its XXX multiplicity and
    /// no values are unmatched on either side.
    bool nonzero_ratio_match = false;
    std::string detail;  // human-readable mismatch description, empty when clean
};

struct ComparisonReport {
    int L = 0;
    double tol = 0;
    bool distinct_match = false;
    int64_t distinct_fm = 0;
    int64_t distinct_xxx = 0;
    std::vector<double> fm_only;   // distinct values absent from the oracle
    std::vector<double> xxx_only;  // oracle values absent from the chain
    std::vector<SectorComparison> sectors;
    bool all_match = false;
};

ComparisonReport compare_to_xxx(int L, double tol = 1e-9);

/// Joint diagonalization with the translation operator inside one sector:
/// momentum index m (eigenvalue phase 2 pi m / L) -> ascending eigenvalues.
std::map<int, std::vector<double>> momentum_resolve(int L, const SectorLabel& sector);

}  // namespace fmz
