#include "detrees/linalg.hpp"

#include <algorithm>

namespace detrees {

namespace {

// out = a[a_from..] - c * b[b_from..]; inputs descending canonically.
std::vector<Term> row_axpy(const std::vector<Term>& a, size_t a_from, const Rational& c,
                           const std::vector<Term>& b, size_t b_from) {
    std::vector<Term> out;
    out.reserve((a.size() - a_from) + (b.size() - b_from));
    size_t i = a_from, j = b_from;
    while (i < a.size() && j < b.size()) {
        int cmp = Monomial::cmp(a[i].mono, b[j].mono);
        if (cmp > 0)
            out.push_back(a[i++]);
        else if (cmp < 0) {
            out.push_back({b[j].mono, -(c * b[j].coeff)});
            ++j;
        } else {
            Rational v = a[i].coeff - c * b[j].coeff;
            if (v != 0) out.push_back({a[i].mono, std::move(v)});
            ++i, ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        out.push_back({b[j].mono, -(c * b[j].coeff)});
        ++j;
    }
    return out;
}

}  // namespace

std::vector<Term> RowEchelon::reduce_row(std::vector<Term> row) const {
    std::vector<Term> done;
    size_t from = 0;
    while (from < row.size()) {
        auto it = pivot_index_.find(row[from].mono);
        if (it == pivot_index_.end()) {
            done.push_back(row[from]);
            ++from;
            continue;
        }
        const std::vector<Term>& pivot = pivots_[it->second];
        // Pivot is monic and its head equals the current head: the head cancels.
        row = row_axpy(row, from + 1, row[from].coeff, pivot, 1);
        from = 0;
    }
    return done;
}

bool RowEchelon::add_row(const Polynomial& row) { return add_row(row.terms()); }

bool RowEchelon::add_row(std::vector<Term> row) {
    row = reduce_row(std::move(row));
    if (row.empty()) return false;
    Rational lc = row.front().coeff;
    for (auto& t : row) t.coeff /= lc;
    pivot_index_.emplace(row.front().mono, pivots_.size());
    pivots_.push_back(std::move(row));
    return true;
}

bool RowEchelon::in_span(const Polynomial& row) const { return reduce_row(row.terms()).empty(); }

}  // namespace detrees
