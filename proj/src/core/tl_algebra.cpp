#include "tl_algebra.hpp"

#include "local_ops.hpp"

#include <sstream>
#include <stdexcept>

namespace fmz {

namespace {

int wrap(int j, int L) { return (j - 1) % L + 1; }

RelationReport equality_report(std::string relation, int L, int j,
                               const ExactMatrix& lhs, const ExactMatrix& rhs) {
    RelationReport rep;
    rep.relation = std::move(relation);
    rep.L = L;
    rep.j = j;
    rep.defect = max_abs_defect(lhs, rhs);
    rep.exact_equal = (rep.defect == 0);
    return rep;
}

std::string subst_j(const std::string& pattern, int j, int L) {
    std::string out;
    for (size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] == '%') {
            ++i;
            int shift = pattern[i] - '0';
            out += std::to_string(wrap(j + shift, L));
        } else {
            out += pattern[i];
        }
    }
    return out;
}

}  // namespace

std::vector<RelationReport> check_ptl(int L) {
    if (L < 3) throw std::invalid_argument("PTL needs >= 3 links");
    std::vector<ExactMatrix> e;
    e.reserve(L);
    for (int j = 1; j <= L; ++j) e.push_back(local_e(j, L));
    auto at = [&](int j) -> const ExactMatrix& { return e[wrap(j, L) - 1]; };

    std::vector<RelationReport> out;
    for (int j = 1; j <= L; ++j) {
        out.push_back(equality_report(subst_j("e_%0 e_%1 e_%0 = e_%0", j, L), L, j,
                                      at(j) * at(j + 1) * at(j), at(j)));
        out.push_back(equality_report(subst_j("e_%1 e_%0 e_%1 = e_%1", j, L), L, j,
                                      at(j + 1) * at(j) * at(j + 1), at(j + 1)));
        {
            RelationReport rep = equality_report(subst_j("e_%0^2 = 2 e_%0", j, L), L, j,
                                                 at(j) * at(j), at(j).scaled(2));
            Rational s;
            if ((at(j) * at(j)).scalar_multiple_of(at(j), s)) rep.scalar = s;
            out.push_back(rep);
        }
        for (int k = j + 2; k <= L; ++k) {
            int dist = std::min(k - j, L - (k - j));
            if (dist <= 1) continue;
            std::ostringstream name;
            name << "[e_" << j << ", e_" << k << "] = 0";
            out.push_back(equality_report(name.str(), L, j, at(j) * at(k), at(k) * at(j)));
        }
    }
    return out;
}

ExactMatrix r_matrix(int j, const Rational& lambda, int L) {
    if (lambda == 0) throw std::invalid_argument("spectral parameter pole");
    Rational shift = (lambda + 1) / lambda;
    return local_e(j, L) - ExactMatrix::identity(pow3(L)).scaled(shift);
}

RelationReport check_ybe(const Rational& l1, const Rational& l2, int L) {
    if (L < 3) throw std::invalid_argument("YBE needs >= 3 links");
    if (l1 == 0 || l2 == 0 || l1 + l2 == 0)
        throw std::invalid_argument("spectral parameter pole");
    ExactMatrix lhs = r_matrix(1, l1, L) * r_matrix(2, l1 + l2, L) * r_matrix(1, l2, L);
    ExactMatrix rhs = r_matrix(2, l2, L) * r_matrix(1, l1 + l2, L) * r_matrix(2, l1, L);
    std::ostringstream name;
    name << "YBE(" << format_rational(l1) << ", " << format_rational(l2) << ")";
    return equality_report(name.str(), L, 1, lhs, rhs);
}

std::map<std::string, ExactMatrix> build_gh(int j, int L) {
    if (L < 3) throw std::invalid_argument("flat-move operators need >= 3 links");
    const ExactMatrix ej = local_e(j, L);
    const ExactMatrix ejp = local_e(wrap(j + 1, L), L);
    const ExactMatrix fj = local_F(j, L);
    const ExactMatrix fjp = local_F(wrap(j + 1, L), L);
    std::map<std::string, ExactMatrix> ops;
    ops.emplace("e", ej);
    ops.emplace("f", fj);
    ops.emplace("g1", fj * fjp * fj);
    ops.emplace("g2", ej * fjp * ej);
    ops.emplace("g3", ej * fjp * fj * fjp * ej);
    ops.emplace("h1", ej * fjp * fj);
    ops.emplace("h2", ej * ejp * fj);
    ops.emplace("h3", fj * ejp * ej);
    ops.emplace("h4", fj * fjp * ej);
    return ops;
}

namespace {

/// Same products with the roles of links j and j+1 swapped, per the
/// index-interchange rule that generates the remaining relations.
std::map<std::string, ExactMatrix> build_gh_interchanged(int j, int L) {
    const ExactMatrix ej = local_e(wrap(j + 1, L), L);
    const ExactMatrix ejp = local_e(j, L);
    const ExactMatrix fj = local_F(wrap(j + 1, L), L);
    const ExactMatrix fjp = local_F(j, L);
    std::map<std::string, ExactMatrix> ops;
    ops.emplace("e", ej);
    ops.emplace("f", fj);
    ops.emplace("g1", fj * fjp * fj);
    ops.emplace("g2", ej * fjp * ej);
    ops.emplace("g3", ej * fjp * fj * fjp * ej);
    ops.emplace("h1", ej * fjp * fj);
    ops.emplace("h2", ej * ejp * fj);
    ops.emplace("h3", fj * ejp * ej);
    ops.emplace("h4", fj * fjp * ej);
    return ops;
}

struct ProductRelation {
    const char* a;
    const char* b;
    const char* expect;
};

// The twenty summarized product identities: six h*h composition rules and
// the twelve-entry g/h absorption table, plus h3 h2 = f and h2 h3 = g2.
constexpr ProductRelation kProductTable[] = {
    {"h2", "h3", "g2"}, {"h3", "h2", "f"},
    {"h1", "h3", "g3"}, {"h1", "h4", "g3"}, {"h2", "h4", "g3"},
    {"h4", "h1", "g1"}, {"h4", "h2", "g1"}, {"h3", "h1", "g1"},
    {"h1", "g1", "h1"}, {"g2", "h1", "h1"}, {"g3", "h1", "h1"},
    {"h2", "g1", "h2"}, {"g2", "h2", "h2"}, {"g3", "h2", "h1"},
    {"g1", "h3", "h3"}, {"h3", "g2", "h3"}, {"h3", "g3", "h4"},
    {"g1", "h4", "h4"}, {"h4", "g2", "h4"}, {"h4", "g3", "h4"},
};

std::optional<std::string> identify(const ExactMatrix& p,
                                    const std::map<std::string, ExactMatrix>& named) {
    if (p.is_zero()) return std::string("0");
    for (const auto& [name, op] : named) {
        Rational c;
        if (p.scalar_multiple_of(op, c)) {
            if (c == 1) return name;
            return format_rational(c) + " " + name;
        }
    }
    return std::nullopt;
}

void check_gh_family(int j, int L, bool interchanged,
                     const std::map<std::string, ExactMatrix>& raw,
                     std::vector<RelationReport>& out) {
    const std::string tag = interchanged ? " (j<->j+1)" : "";
    const ExactMatrix& e = raw.at("e");
    const ExactMatrix& f = raw.at("f");
    const int64_t dim = e.dim();

    // Sandwich identities at raw scale.
    {
        const ExactMatrix& ejp = interchanged ? local_e(j, L) : local_e(wrap(j + 1, L), L);
        out.push_back(equality_report(
            subst_j(interchanged ? "f_%1 e_%0 f_%1 = f_%1" : "f_%0 e_%1 f_%0 = f_%0", j, L) + tag,
            L, j, f * ejp * f, f));
    }

    // Idempotency scalars, then the product table in the normalized algebra.
    std::map<std::string, ExactMatrix> norm;
    for (const char* name : {"f", "g1", "g2", "g3"}) {
        const ExactMatrix& op = raw.at(name);
        RelationReport rep;
        rep.relation = std::string(name) + "^2 = c " + name + tag;
        rep.L = L;
        rep.j = j;
        Rational c;
        if ((op * op).scalar_multiple_of(op, c)) {
            rep.exact_equal = true;
            rep.scalar = c;
            norm.emplace(name, op.scaled(1 / c));
        } else {
            rep.exact_equal = false;
            rep.defect = (op * op).max_abs_entry();
        }
        out.push_back(rep);
    }
    for (const char* name : {"h1", "h2", "h3", "h4"}) {
        const ExactMatrix& op = raw.at(name);
        out.push_back(equality_report(std::string(name) + "^2 = 0" + tag, L, j,
                                      op * op, ExactMatrix(dim)));
        // The h operators carry the same normalization as f: it is the scale
        // at which h3 h2 closes onto the idempotent f.
        norm.emplace(name, op.scaled(Rational(1, 2)));
    }
    if (norm.size() != 8) return;  // scalar measurement failed, already reported

    for (const auto& pr : kProductTable) {
        ExactMatrix p = norm.at(pr.a) * norm.at(pr.b);
        RelationReport rep = equality_report(
            std::string(pr.a) + " " + pr.b + " = " + pr.expect + tag, L, j, p, norm.at(pr.expect));
        if (!rep.exact_equal) rep.actual = identify(p, norm);
        out.push_back(rep);
    }
}

}  // namespace

std::vector<RelationReport> check_flat_algebra(int L) {
    if (L < 3) throw std::invalid_argument("flat-move algebra needs >= 3 links");
    std::vector<RelationReport> out;
    for (int j = 1; j <= L; ++j) {
        out.push_back(equality_report(subst_j("e_%0 e_%1 e_%0 = e_%0", j, L), L, j,
                                      local_e(j, L) * local_e(wrap(j + 1, L), L) * local_e(j, L),
                                      local_e(j, L)));
        check_gh_family(j, L, false, build_gh(j, L), out);
        check_gh_family(j, L, true, build_gh_interchanged(j, L), out);
    }
    return out;
}

std::vector<RelationReport> check_s21(int L) {
    if (L < 3) throw std::invalid_argument("flat-move algebra needs >= 3 links");
    auto raw = build_gh(1, L);
    std::map<std::string, ExactMatrix> norm;
    for (const auto& [name, op] : raw) {
        if (name == "e") continue;
        norm.emplace(name, op.scaled(Rational(1, 2)));
    }
    const int64_t dim = raw.at("e").dim();

    // name -> (i, j) index of x_ij in the rank-one symmetric inverse semigroup
    struct Member {
        const char* name;
        int i, j;
    };
    const std::vector<std::vector<Member>> subsets = {
        {{"g2", 1, 1}, {"f", 2, 2}, {"h2", 1, 2}, {"h3", 2, 1}},
        {{"g3", 1, 1}, {"g1", 2, 2}, {"h1", 1, 2}, {"h4", 2, 1}},
    };

    std::vector<RelationReport> out;
    for (const auto& subset : subsets) {
        RelationReport rep;
        std::ostringstream name;
        name << "S21 {";
        for (size_t i = 0; i < subset.size(); ++i)
            name << (i ? ", " : "") << subset[i].name;
        name << "}";
        rep.relation = name.str();
        rep.L = L;
        rep.j = 1;
        rep.exact_equal = true;
        for (const auto& a : subset) {
            for (const auto& b : subset) {
                ExactMatrix p = norm.at(a.name) * norm.at(b.name);
                ExactMatrix expect =
                    a.j == b.i ? norm.at([&] {
                        for (const auto& m : subset)
                            if (m.i == a.i && m.j == b.j) return m.name;
                        throw std::logic_error("incomplete subset");
                    }()) : ExactMatrix(dim);
                Rational d = max_abs_defect(p, expect);
                if (d != 0) {
                    rep.exact_equal = false;
                    if (d > rep.defect) rep.defect = d;
                    if (!rep.actual)
                        rep.actual = std::string(a.name) + " " + b.name + " deviates";
                }
            }
        }
        out.push_back(rep);
    }
    return out;
}

}  // namespace fmz
