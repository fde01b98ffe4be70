#pragma once

#include "rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fmz {

/// Square sparse matrix over exact rationals, row-major storage with
/// deterministic (sorted) column order inside each row.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int64_t dim) : dim_(dim), rows_(dim) {}
    static ExactMatrix identity(int64_t dim);

    int64_t dim() const { return dim_; }
    void add(int64_t row, int64_t col, const Rational& v);
    void set(int64_t row, int64_t col, const Rational& v);
    Rational at(int64_t row, int64_t col) const;
    const std::map<int64_t, Rational>& row(int64_t r) const { return rows_[r]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const Rational& c) const;
    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix& o) const;
    bool is_zero() const;
    Rational max_abs_entry() const;         // max |entry|
    Rational trace() const;
    int64_t nnz() const;

    /// If *this == c * o for a single scalar c (and o != 0), returns true and sets c.
    bool scalar_multiple_of(const ExactMatrix& o, Rational& c) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
    Eigen::MatrixXd to_dense() const;

    /// Restriction to the span of the given basis indices (indices into the
    /// full 0..dim-1 coordinate space), in the given order.
    ExactMatrix restricted(const std::vector<int64_t>& basis) const;

    /// Coordinate-list text: lines "row col num/den", sorted by (row, col).
    std::string to_coordinate_list() const;

private:
    int64_t dim_ = 0;
    std::vector<std::map<int64_t, Rational>> rows_;
};

/// max |LHS - RHS| entry, 0 iff equal.
Rational max_abs_defect(const ExactMatrix& a, const ExactMatrix& b);

/// Rank over Q of a set of sparse row vectors (col -> value), by fraction-free
/// style Gaussian elimination with pivot bookkeeping.
int64_t exact_rank(std::vector<std::map<int64_t, Rational>> rows);

int64_t exact_rank(const ExactMatrix& m);

}  // namespace fmz
