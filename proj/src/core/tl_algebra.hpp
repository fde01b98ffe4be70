#pragma once

#include "exact_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fmz {

/// Outcome of one exact operator identity check.
struct RelationReport {
    std::string relation;  // e.g. "e_j e_{j+1} e_j = e_j"
    int L = 0;
    int j = 0;  // link index the relation is anchored at, 0 when global
    bool exact_equal = false;
    Rational defect = 0;  // max |LHS - RHS| entry, 0 iff exact_equal
    /// Measured scalar, when the check is "LHS is a scalar multiple of RHS"
    /// (idempotency constants and the like).
    std::optional<Rational> scalar;
    /// When a product relation fails but the product still lands on a named
    /// operator (possibly rescaled), records what it actually equals.
    std::optional<std::string> actual;
};

/// e_j e_{j+-1} e_j = e_j, e_j^2 = 2 e_j, [e_j, e_k] = 0 at cyclic distance
/// > 1, with j = L wrapping to 1 so the boundary generator needs no special
/// case. Needs L >= 3.
std::vector<RelationReport> check_ptl(int L);

/// R_{j,j+1}(lambda) = e_j - ((lambda+1)/lambda) Id. lambda must be nonzero.
ExactMatrix r_matrix(int j, const Rational& lambda, int L);

/// R_{j,j+1}(l1) R_{j+1,j+2}(l1+l2) R_{j,j+1}(l2)
///   = R_{j+1,j+2}(l2) R_{j,j+1}(l1+l2) R_{j+1,j+2}(l1), checked exactly at
/// j = 1. l1, l2 and l1+l2 must all be nonzero; L >= 3.
RelationReport check_ybe(const Rational& l1, const Rational& l2, int L);

/// The seven flat-move operators anchored at link j:
///   g1 = f_j f_{j+1} f_j        h1 = e_j f_{j+1} f_j   h2 = e_j e_{j+1} f_j
///   g2 = e_j f_{j+1} e_j        h3 = f_j e_{j+1} e_j   h4 = f_j f_{j+1} e_j
///   g3 = e_j f_{j+1} f_j f_{j+1} e_j
/// Keys "g1".."g3", "h1".."h4", plus "e" and "f" for the bare generators at j.
std::map<std::string, ExactMatrix> build_gh(int j, int L);

/// Checks the flat-move relation set at every j: the sandwich identities
/// e_j e_{j+1} e_j = e_j and f_j e_{j+1} f_j = f_j, idempotency scalars of
/// g1..g3 and f, nilpotency of h1..h4, and the twenty product identities of
/// the g/h family in the normalized algebra (each named operator divided by
/// its measured idempotency scalar). The index-interchanged family (j and
/// j+1 swapped inside every product) is checked as well. Failed product
/// relations carry an `actual` tag naming what the product really equals.
std::vector<RelationReport> check_flat_algebra(int L);

/// Verifies that {g2, f, h2, h3} and {g3, g1, h1, h4}, normalized, compose
/// as x11, x22, x12, x21 of the rank-one symmetric inverse semigroup:
/// x_ij x_kl = delta_jk x_il. One report per subset with the full 16-product
/// table; a mismatch names the offending product.
std::vector<RelationReport> check_s21(int L);

}  // namespace fmz
