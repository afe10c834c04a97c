#pragma once

#include <unordered_map>
#include <vector>

#include "detrees/polynomial.hpp"

namespace detrees {

/// Incremental exact row echelon over Q, rows keyed by monomials in the
/// canonical order. Used for graded-piece dimension counts.
class RowEchelon {
public:
    /// Reduces the row against current pivots and installs it if nonzero.
    /// Returns true when the row was independent.
    bool add_row(const Polynomial& row);
    bool add_row(std::vector<Term> row);

    /// True when the row reduces to zero against the current pivots.
    bool in_span(const Polynomial& row) const;

    size_t rank() const { return pivots_.size(); }

private:
    struct MonoHash {
        size_t operator()(const Monomial& m) const { return m.hash(); }
    };

    // Pivot rows are monic on their leading (canonically largest) monomial and
    // sorted descending; pivot_index_ maps leading monomial to row index.
    std::vector<std::vector<Term>> pivots_;
    std::unordered_map<Monomial, size_t, MonoHash> pivot_index_;

    std::vector<Term> reduce_row(std::vector<Term> row) const;
};

}  // namespace detrees
