#include "detrees/ladder.hpp"

#include <algorithm>
#include <sstream>

#include "detrees/errors.hpp"

namespace detrees {

Ladder ladder(const Shape& sh, bool extended) {
    Ladder L{sh, extended, {}};
    if (extended) {
        for (int j = sh.r + 1; j <= sh.n; ++j) L.boxes.push_back({0, j});  // top row, n-r boxes
        for (int i = 1; i <= sh.r + sh.s; ++i) L.boxes.push_back({i, 0});  // left column, r+s boxes
    }
    for (int i = 1; i <= sh.r + sh.s; ++i)
        for (int j = std::max(sh.r, i) + 1; j <= sh.n; ++j) L.boxes.push_back({i, j});
    return L;
}

bool ladder_has_box(const Ladder& L, int row, int col) {
    return std::find(L.boxes.begin(), L.boxes.end(), std::make_pair(row, col)) != L.boxes.end();
}

std::optional<VariableId> ladder_entry(const Ladder& L, int row, int col) {
    if (!ladder_has_box(L, row, col)) return std::nullopt;
    if (row == 0) return VariableId::x(2, col);
    if (col == 0) return VariableId::x(1, row);
    return VariableId::y(row, col);
}

namespace {

// Display position of a column: the left x-column sits before the y-columns,
// which run in decreasing j.
int column_display_pos(const Shape& sh, int col) { return col == 0 ? 0 : sh.n - col + 1; }

}  // namespace

std::vector<Polynomial> ladder_minors(const Ladder& L) {
    // Collect the distinct row and column indices that carry boxes.
    std::vector<int> rows, cols;
    for (const auto& [r, c] : L.boxes) {
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end(), [&](int a, int b) {
        return column_display_pos(L.shape, a) < column_display_pos(L.shape, b);
    });

    std::vector<Polynomial> minors;
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = a + 1; b < rows.size(); ++b)
            for (size_t p = 0; p < cols.size(); ++p)
                for (size_t q = p + 1; q < cols.size(); ++q) {
                    auto nw = ladder_entry(L, rows[a], cols[p]);
                    auto ne = ladder_entry(L, rows[a], cols[q]);
                    auto sw = ladder_entry(L, rows[b], cols[p]);
                    auto se = ladder_entry(L, rows[b], cols[q]);
                    if (!nw || !ne || !sw || !se) continue;
                    Polynomial det =
                        Polynomial::term(Monomial::variable(*nw) * Monomial::variable(*se), 1) -
                        Polynomial::term(Monomial::variable(*ne) * Monomial::variable(*sw), 1);
                    minors.push_back(std::move(det));
                }
    return minors;
}

TermOrder ladder_diagonal_order(const Ladder& L) {
    // Row-major reading order of the display: top x-row (if extended), then
    // each y-row preceded by its left x-entry (if extended).
    std::vector<VariableId> seq;
    const Shape& sh = L.shape;
    if (L.extended)
        for (int j = sh.n; j >= sh.r + 1; --j) seq.push_back(VariableId::x(2, j));
    for (int i = 1; i <= sh.r + sh.s; ++i) {
        if (L.extended) seq.push_back(VariableId::x(1, i));
        for (int j = sh.n; j > std::max(sh.r, i); --j) seq.push_back(VariableId::y(i, j));
    }
    return TermOrder::lex(std::move(seq));
}

std::string render_ladder(const Ladder& L) {
    const Shape& sh = L.shape;
    std::ostringstream out;
    auto cell = [&](int row, int col) -> std::string {
        auto v = ladder_entry(L, row, col);
        return v ? v->name() : "";
    };
    size_t width = 4 + 2 * std::to_string(sh.n).size() + 3;
    auto pad = [&](const std::string& s) {
        return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
    };
    // Header row: column markers (or the top x-entries when extended).
    out << pad("");
    if (L.extended) out << pad("");
    for (int j = sh.n; j >= sh.r + 1; --j)
        out << pad(L.extended ? "" : "x[2," + std::to_string(j) + "]");
    out << "\n";
    if (L.extended) {
        out << pad("") << pad(".");
        for (int j = sh.n; j >= sh.r + 1; --j) out << pad(cell(0, j));
        out << "\n";
    }
    for (int i = 1; i <= sh.r + sh.s; ++i) {
        out << pad(L.extended ? "" : "x[1," + std::to_string(i) + "]");
        if (L.extended) out << pad(cell(i, 0));
        for (int j = sh.n; j >= sh.r + 1; --j) {
            std::string c = cell(i, j);
            out << pad(c.empty() ? "" : c);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace detrees
