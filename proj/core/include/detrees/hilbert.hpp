#pragma once

#include <gmpxx.h>

#include <vector>

#include "detrees/monomial_ideal.hpp"

namespace detrees {

/// Numerator of HS(R/J) written over (1-z)^nvars; constant term first.
struct SeriesNumerator {
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpz_class at(size_t i) const { return i < coeffs.size() ? coeffs[i] : mpz_class(0); }
};

/// Pivot recursion: num(0) = 1, num((1)) = 0, pairwise-coprime generators give
/// prod(1 - z^deg), otherwise split on the most frequent variable among
/// non-pure-power generators: num(J) = num(J + (v)) + z * num(J : v).
SeriesNumerator hilbert_numerator(const MonomialIdeal& J);

/// Divides out the exact power of (1-z); returns (h-vector, Krull dimension).
std::pair<std::vector<long long>, int> normalize_series(const SeriesNumerator& num, int nvars);

/// Invariants of a graded quotient, reg and a-invariant read off the h-vector
/// under the Cohen-Macaulay convention (reg = degree of the h-polynomial).
struct HilbertRecord {
    std::vector<long long> h;
    int dim = 0;
    long long mult = 0;
    int reg = 0;
    int a_inv = 0;
    static constexpr bool cm_convention = true;
};

HilbertRecord invariants_from_h(const std::vector<long long>& h, int dim);

/// Full pipeline: numerator, normalization, invariants.
HilbertRecord hilbert_record(const MonomialIdeal& J);

/// Coefficient of z^d in num / (1-z)^nvars, i.e. the Hilbert function value.
mpz_class series_coefficient(const SeriesNumerator& num, int nvars, int d);

/// Exact count of degree-d monomials not divisible by any generator, by
/// enumeration. Throws BudgetError when the monomial count exceeds the budget.
long long hilbert_function_oracle(const MonomialIdeal& J, int d, long long budget = 5000000);

}  // namespace detrees
