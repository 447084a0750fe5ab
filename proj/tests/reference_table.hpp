#pragma once

#include <string>
#include <vector>

// Hand-checked existence grid for j = 1..10, d = 1..16 (rows start at d = j).
// Cells: "+" exists, "-" does not exist, "(-)" conjectured no, "?" open.
inline const std::vector<std::vector<std::string>>& reference_grid() {
    static const std::vector<std::vector<std::string>> grid = {
        /* j=1  */ {"+", "-", "+", "-", "+", "-", "+", "-", "+", "-", "+", "-", "+", "-", "+", "-"},
        /* j=2  */ {"+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+"},
        /* j=3  */ {"+", "-", "+", "(-)", "+", "(-)", "+", "(-)", "+", "(-)", "+", "(-)", "+", "(-)"},
        /* j=4  */ {"+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+", "+"},
        /* j=5  */ {"+", "-", "+", "(-)", "+", "(-)", "+", "(-)", "+", "(-)", "+", "(-)"},
        /* j=6  */ {"+", "+", "+", "+", "+", "+", "?", "+", "+", "+", "+"},
        /* j=7  */ {"+", "-", "+", "(-)", "+", "(-)", "+", "(-)", "+", "(-)"},
        /* j=8  */ {"+", "+", "+", "+", "+", "+", "+", "+", "?"},
        /* j=9  */ {"+", "-", "+", "(-)", "+", "(-)", "+", "(-)"},
        /* j=10 */ {"+", "+", "+", "+", "+", "+", "+"},
    };
    return grid;
}
