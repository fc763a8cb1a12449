#pragma once

// Tableaux shared by the test suites. Rows are listed bottom row first.

#include "kcharge/tableau.hpp"

namespace fixtures {

// Standard 4-tableau of shape (6,2,2,1), weight (1^9).
inline kcharge::KTableau standard_k4() {
    return kcharge::KTableau(4, {{1, 2, 3, 5, 7, 9}, {4, 6}, {5, 7}, {8}});
}

// Semi-standard 4-tableau of shape (9,5,3,2,1,1), weight (2,2,2,2,2,2,1).
inline kcharge::KTableau semistandard_k4() {
    return kcharge::KTableau(4, {{1, 1, 2, 3, 4, 4, 5, 5, 6}, {2, 3, 5, 5, 6}, {3, 4, 7}, {5, 6}, {6}, {7}});
}

// 3-tableau of shape (5,2,1), weight (2,2,2).
inline kcharge::KTableau weight_222_k3() { return kcharge::KTableau(3, {{1, 1, 2, 2, 3}, {2, 3}, {3}}); }

}  // namespace fixtures
