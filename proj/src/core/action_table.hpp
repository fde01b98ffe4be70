#pragma once

#include "exact_matrix.hpp"
#include "word.hpp"

#include <string>
#include <vector>

namespace fmz {

/// One (n1, n2) basis state audited against a displayed action formula.
struct ActionCase {
    int n1 = 0, n2 = 0;
    bool adjacent = false;       // n2 == n1 + 1 (the printed case split)
    bool wrap_involved = false;  // a shifted position left [1, L] or the pair
                                 // is cyclically adjacent across the boundary
    bool match = false;
    std::string note;  // what the actual action is when it deviates
};

struct EquationAudit {
    std::string equation;
    int matches = 0;
    int mismatches = 0;
    std::vector<ActionCase> cases;
};

/// Fidelity audit of the eight displayed operator actions on the (1, 1)
/// basis states |n1, n2> (flavors[0] at n1 < n2 at flavors[1], flats
/// elsewhere), comparing each printed right-hand side against the exact
/// matrix action. Mismatches are enumerated, not fatal: the printed case
/// split ignores the cyclic boundary.
struct ActionTableReport {
    int L = 0;
    std::string flavors;
    std::vector<EquationAudit> equations;
    int total_matches = 0;
    int total_mismatches = 0;
};

ActionTableReport action_table(int L, const std::string& flavors = "ud");

}  // namespace fmz
