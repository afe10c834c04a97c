#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detrees/polynomial.hpp"
#include "detrees/shape.hpp"
#include "detrees/term_order.hpp"

namespace detrees {

/// One-sided ladder L (boxes (i,j) with j > max(r,i), entry y[i,j]) or its
/// two-sided extension L' with a top row of x[2,*] entries (row index 0) and a
/// left column of x[1,*] entries (column index 0). Columns are displayed in
/// decreasing j, left column first; there is no corner box.
struct Ladder {
    Shape shape;
    bool extended = false;
    std::vector<std::pair<int, int>> boxes;  // (row, col) with the 0 conventions above
};

Ladder ladder(const Shape& sh, bool extended);

bool ladder_has_box(const Ladder& L, int row, int col);
std::optional<VariableId> ladder_entry(const Ladder& L, int row, int col);

/// All 2x2 minors fully contained in the ladder, oriented as (upper-left *
/// lower-right) - (upper-right * lower-left) in the displayed layout.
std::vector<Polynomial> ladder_minors(const Ladder& L);

/// Diagonal order: lex on the row-major reading of the ladder display. The
/// leading term of every ladder minor is its displayed diagonal product.
TermOrder ladder_diagonal_order(const Ladder& L);

std::string render_ladder(const Ladder& L);

}  // namespace detrees
