#include "spectra.hpp"

#include "local_ops.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fmz {

namespace {

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

int64_t count_below(const std::vector<double>& sorted, double tol) {
    return std::lower_bound(sorted.begin(), sorted.end(), tol) - sorted.begin();
}

double first_at_or_above(const std::vector<double>& sorted, double tol) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), tol);
    return it == sorted.end() ? std::numeric_limits<double>::infinity() : *it;
}

std::vector<SectorLabel> all_sectors(int L) {
    std::vector<SectorLabel> out;
    for (int u = 0; u <= L; ++u)
        for (int d = 0; d + u <= L; ++d) out.push_back({u, d, L});
    return out;
}

}  // namespace

std::vector<DistinctValue> distinct_eigenvalues(const std::vector<double>& sorted,
                                                double rel_tol) {
    std::vector<DistinctValue> out;
    for (double v : sorted) {
        if (!out.empty() &&
            v - out.back().value < rel_tol * std::max(1.0, std::abs(out.back().value))) {
            ++out.back().multiplicity;
        } else {
            out.push_back({v, 1});
        }
    }
    return out;
}

SpectrumReport dense_spectrum(int L, const Rational& epsilon, double tol) {
    if (L < 2) throw std::invalid_argument("need L >= 2");
    if (L > kDenseCap)
        throw std::invalid_argument("above dense cap; use --sector");
    SpectrumReport rep;
    rep.L = L;
    rep.epsilon = epsilon;
    if (epsilon == 0) {
        for (const SectorLabel& s : all_sectors(L)) {
            SectorSpectrum ss;
            ss.sector = s;
            ss.eigenvalues = symmetric_eigenvalues(sector_hamiltonian(L, s).to_dense());
            ss.kernel_dim = count_below(ss.eigenvalues, tol);
            rep.eigenvalues.insert(rep.eigenvalues.end(), ss.eigenvalues.begin(),
                                   ss.eigenvalues.end());
            rep.sectors.push_back(std::move(ss));
        }
        std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
    } else {
        rep.eigenvalues = symmetric_eigenvalues(hamiltonian({L, epsilon}).to_dense());
    }
    rep.kernel_dim = count_below(rep.eigenvalues, tol);
    rep.smallest_nonzero = first_at_or_above(rep.eigenvalues, tol);
    rep.gap_ambiguity = rep.smallest_nonzero < 100 * tol;
    rep.distinct = distinct_eigenvalues(rep.eigenvalues);
    return rep;
}

std::vector<double> sector_spectrum(int L, const SectorLabel& sector) {
    return symmetric_eigenvalues(sector_hamiltonian(L, sector).to_dense());
}

KernelReport kernel_dimension(int L, const Rational& epsilon, double tol) {
    SpectrumReport rep = dense_spectrum(L, epsilon, tol);
    KernelReport out;
    out.total = rep.kernel_dim;
    out.smallest_nonzero = rep.smallest_nonzero;
    out.gap_ambiguity = rep.gap_ambiguity;
    if (epsilon == 0) {
        out.per_r.assign(L + 1, 0);
        for (const SectorSpectrum& ss : rep.sectors)
            out.per_r[ss.sector.r()] += ss.kernel_dim;
    }
    return out;
}

std::vector<double> xxx_reference_spectrum(int L, int magnons) {
    if (L < 2) throw std::invalid_argument("need L >= 2");
    if (magnons < 0 || magnons > L) throw std::invalid_argument("bad magnon number");
    std::vector<uint32_t> basis;
    for (uint32_t mask = 0; mask < (uint32_t(1) << L); ++mask)
        if (std::popcount(mask) == magnons) basis.push_back(mask);
    std::unordered_map<uint32_t, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[basis[i]] = i;
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        uint32_t mask = basis[i];
        for (int j = 0; j < L; ++j) {
            int k = (j + 1) % L;
            bool bj = (mask >> j) & 1, bk = (mask >> k) & 1;
            if (bj == bk) continue;
            h(i, i) += 1.0;
            uint32_t flipped = mask ^ (uint32_t(1) << j) ^ (uint32_t(1) << k);
            h(index.at(flipped), i) -= 1.0;
        }
    }
    return symmetric_eigenvalues(h);
}

namespace {

/// Distinct-set comparison within tol; unmatched values land in the outputs.
bool match_distinct(const std::vector<DistinctValue>& a, const std::vector<DistinctValue>& b,
                    double tol, std::vector<double>& a_only, std::vector<double>& b_only) {
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].value < b[j].value - tol)) {
            a_only.push_back(a[i++].value);
        } else if (i == a.size() || b[j].value < a[i].value - tol) {
            b_only.push_back(b[j++].value);
        } else {
            ++i;
            ++j;
        }
    }
    return a_only.empty() && b_only.empty();
}

}  // namespace

ComparisonReport compare_to_xxx(int L, double tol) {
    if (L < 2) throw std::invalid_argument("need L >= 2");
    if (L > kDenseCap) throw std::invalid_argument("above dense cap");
    ComparisonReport rep;
    rep.L = L;
    rep.tol = tol;

    SpectrumReport fm = dense_spectrum(L, 0);
    std::vector<double> xxx_all;
    for (int r = 0; r <= L; ++r) {
        auto part = xxx_reference_spectrum(L, r);
        xxx_all.insert(xxx_all.end(), part.begin(), part.end());
    }
    std::sort(xxx_all.begin(), xxx_all.end());
    auto fm_distinct = distinct_eigenvalues(fm.eigenvalues);
    auto xxx_distinct = distinct_eigenvalues(xxx_all);
    rep.distinct_fm = static_cast<int64_t>(fm_distinct.size());
    rep.distinct_xxx = static_cast<int64_t>(xxx_distinct.size());
    rep.distinct_match =
        match_distinct(fm_distinct, xxx_distinct, tol, rep.fm_only, rep.xxx_only);

    const double zero_tol = 1e-10;
    rep.all_match = rep.distinct_match;
    for (int r = 0; r <= L; ++r) {
        SectorComparison sc;
        sc.r = r;
        std::vector<double> agg;
        for (const SectorSpectrum& ss : fm.sectors)
            if (ss.sector.r() == r)
                agg.insert(agg.end(), ss.eigenvalues.begin(), ss.eigenvalues.end());
        std::sort(agg.begin(), agg.end());
        sc.zero_modes = count_below(agg, zero_tol);
        sc.expected_zero_modes = (r == 0) ? 1 : (int64_t(1) << r);
        sc.zero_modes_match = (sc.zero_modes == sc.expected_zero_modes);
        sc.nonzero_count = static_cast<int64_t>(agg.size()) - sc.zero_modes;

        std::vector<double> fm_nonzero(agg.begin() + sc.zero_modes, agg.end());
        auto xxx_r = xxx_reference_spectrum(L, r);
        std::vector<double> xxx_nonzero(xxx_r.begin() + count_below(xxx_r, zero_tol),
                                        xxx_r.end());
        auto fm_cl = distinct_eigenvalues(fm_nonzero);
        auto xxx_cl = distinct_eigenvalues(xxx_nonzero);
        const int64_t factor = int64_t(1) << r;
        std::ostringstream detail;
        sc.nonzero_ratio_match = true;
        size_t i = 0, j = 0;
        while (i < fm_cl.size() || j < xxx_cl.size()) {
            if (j == xxx_cl.size() ||
                (i < fm_cl.size() && fm_cl[i].value < xxx_cl[j].value - tol)) {
                sc.nonzero_ratio_match = false;
                detail << "extra value " << fm_cl[i].value << " x" << fm_cl[i].multiplicity
                       << "; ";
                ++i;
            } else if (i == fm_cl.size() || xxx_cl[j].value < fm_cl[i].value - tol) {
                sc.nonzero_ratio_match = false;
                detail << "missing oracle value " << xxx_cl[j].value << "; ";
                ++j;
            } else {
                if (fm_cl[i].multiplicity != factor * xxx_cl[j].multiplicity) {
                    sc.nonzero_ratio_match = false;
                    detail << "value " << fm_cl[i].value << ": multiplicity "
                           << fm_cl[i].multiplicity << " != " << factor << " * "
                           << xxx_cl[j].multiplicity << "; ";
                }
                ++i;
                ++j;
            }
        }
        if (!sc.zero_modes_match)
            detail << "zero modes " << sc.zero_modes << " != " << sc.expected_zero_modes
                   << "; ";
        sc.detail = detail.str();
        if (!sc.zero_modes_match || !sc.nonzero_ratio_match) rep.all_match = false;
        rep.sectors.push_back(std::move(sc));
    }
    return rep;
}

std::map<int, std::vector<double>> momentum_resolve(int L, const SectorLabel& sector) {
    auto words = enumerate_sector(L, sector);
    const int n = static_cast<int>(words.size());
    std::unordered_map<int64_t, int> index;
    for (int i = 0; i < n; ++i) index[words[i].code()] = i;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) t(index.at(words[i].translated(1).code()), i) = 1.0;

    Eigen::MatrixXd h = sector_hamiltonian(L, sector).to_dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    const auto& evals = solver.eigenvalues();
    const auto& evecs = solver.eigenvectors();

    std::map<int, std::vector<double>> out;
    const double two_pi = 2 * std::numbers::pi;
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && evals[end] - evals[end - 1] < 1e-8 * std::max(1.0, std::abs(evals[end])))
            ++end;
        Eigen::MatrixXd block = evecs.middleCols(start, end - start);
        Eigen::MatrixXcd tb = (block.transpose() * t * block).cast<std::complex<double>>();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(tb, false);
        for (int i = 0; i < ces.eigenvalues().size(); ++i) {
            double phase = std::arg(ces.eigenvalues()[i]);
            int m = static_cast<int>(std::lround(phase * L / two_pi));
            m = ((m % L) + L) % L;
            out[m].push_back(evals[start]);
        }
        start = end;
    }
    for (auto& [m, vals] : out) std::sort(vals.begin(), vals.end());
    return out;
}

}  // namespace fmz
