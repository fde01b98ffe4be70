#include "exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fmz {

ExactMatrix ExactMatrix::identity(int64_t dim) {
    ExactMatrix m(dim);
    for (int64_t i = 0; i < dim; ++i) m.rows_[i][i] = 1;
    return m;
}

void ExactMatrix::add(int64_t row, int64_t col, const Rational& v) {
    if (v == 0) return;
    auto& r = rows_[row];
    auto it = r.find(col);
    if (it == r.end()) {
        r.emplace(col, v);
    } else {
        it->second += v;
        if (it->second == 0) r.erase(it);
    }
}

void ExactMatrix::set(int64_t row, int64_t col, const Rational& v) {
    if (v == 0) rows_[row].erase(col);
    else rows_[row][col] = v;
}

Rational ExactMatrix::at(int64_t row, int64_t col) const {
    auto it = rows_[row].find(col);
    return it == rows_[row].end() ? Rational(0) : it->second;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    ExactMatrix out = *this;
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : o.rows_[r]) out.add(r, c, v);
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    ExactMatrix out = *this;
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : o.rows_[r]) out.add(r, c, -v);
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    ExactMatrix out(dim_);
    for (int64_t r = 0; r < dim_; ++r) {
        std::map<int64_t, Rational> acc;
        for (const auto& [k, a] : rows_[r]) {
            for (const auto& [c, b] : o.rows_[k]) {
                auto it = acc.find(c);
                if (it == acc.end()) acc.emplace(c, a * b);
                else it->second += a * b;
            }
        }
        for (auto& [c, v] : acc)
            if (v != 0) out.rows_[r].emplace(c, std::move(v));
    }
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
    ExactMatrix out(dim_);
    if (c == 0) return out;
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [col, v] : rows_[r]) out.rows_[r].emplace(col, c * v);
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(dim_);
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : rows_[r]) out.rows_[c].emplace(r, v);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return dim_ == o.dim_ && rows_ == o.rows_;
}

bool ExactMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

Rational ExactMatrix::max_abs_entry() const {
    Rational m(0);
    for (const auto& r : rows_)
        for (const auto& [c, v] : r) {
            Rational a = v < 0 ? Rational(-v) : v;
            if (a > m) m = a;
        }
    return m;
}

Rational ExactMatrix::trace() const {
    Rational t(0);
    for (int64_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

int64_t ExactMatrix::nnz() const {
    int64_t n = 0;
    for (const auto& r : rows_) n += static_cast<int64_t>(r.size());
    return n;
}

bool ExactMatrix::scalar_multiple_of(const ExactMatrix& o, Rational& c) const {
    if (dim_ != o.dim_) return false;
    bool have = false;
    Rational s(0);
    for (int64_t r = 0; r < dim_; ++r) {
        auto it = rows_[r].begin();
        auto jt = o.rows_[r].begin();
        while (it != rows_[r].end() || jt != o.rows_[r].end()) {
            if (jt == o.rows_[r].end() || (it != rows_[r].end() && it->first < jt->first))
                return false;  // entry here but zero in o
            if (it == rows_[r].end() || jt->first < it->first) {
                // o has an entry where we are zero: only consistent with c == 0
                if (have && s != 0) return false;
                have = true;
                s = 0;
                ++jt;
                continue;
            }
            Rational ratio = it->second / jt->second;
            if (!have) {
                have = true;
                s = ratio;
            } else if (ratio != s) {
                return false;
            }
            ++it;
            ++jt;
        }
    }
    if (!have) return false;  // o == 0
    c = s;
    return true;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int64_t>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
    std::vector<Rational> out(dim_, Rational(0));
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [c, a] : rows_[r]) out[r] += a * v[c];
    return out;
}

Eigen::VectorXcd ExactMatrix::apply(const Eigen::VectorXcd& v) const {
    if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_);
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [c, a] : rows_[r]) out[r] += to_double(a) * v[c];
    return out;
}

Eigen::MatrixXd ExactMatrix::to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : rows_[r]) m(r, c) = to_double(v);
    return m;
}

ExactMatrix ExactMatrix::restricted(const std::vector<int64_t>& basis) const {
    std::unordered_map<int64_t, int64_t> pos;
    pos.reserve(basis.size());
    for (int64_t i = 0; i < static_cast<int64_t>(basis.size()); ++i) pos[basis[i]] = i;
    ExactMatrix out(static_cast<int64_t>(basis.size()));
    for (int64_t i = 0; i < out.dim_; ++i) {
        for (const auto& [c, v] : rows_[basis[i]]) {
            auto it = pos.find(c);
            if (it != pos.end()) out.rows_[i].emplace(it->second, v);
        }
    }
    return out;
}

std::string ExactMatrix::to_coordinate_list() const {
    std::ostringstream os;
    for (int64_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : rows_[r])
            os << r << ' ' << c << ' ' << numerator(v) << '/' << denominator(v) << '\n';
    return os.str();
}

Rational max_abs_defect(const ExactMatrix& a, const ExactMatrix& b) {
    return (a - b).max_abs_entry();
}

int64_t exact_rank(std::vector<std::map<int64_t, Rational>> rows) {
    // pivot column -> reduced row with a 1 in that column
    std::map<int64_t, std::map<int64_t, Rational>> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto piv = pivots.find(lead->first);
            if (piv == pivots.end()) break;
            Rational factor = lead->second;
            for (const auto& [c, v] : piv->second) {
                auto it = row.find(c);
                if (it == row.end()) {
                    row.emplace(c, -factor * v);
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
        if (row.empty()) continue;
        auto lead = row.begin();
        Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        int64_t col = lead->first;
        pivots.emplace(col, std::move(row));
    }
    return static_cast<int64_t>(pivots.size());
}

int64_t exact_rank(const ExactMatrix& m) {
    std::vector<std::map<int64_t, Rational>> rows;
    rows.reserve(m.dim());
    for (int64_t r = 0; r < m.dim(); ++r) rows.push_back(m.row(r));
    return exact_rank(std::move(rows));
}

}  // namespace fmz
