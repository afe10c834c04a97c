#pragma once

#include <unordered_map>

#include "detrees/polynomial.hpp"

namespace detrees {

/// Nonnegative integer weights on variables; weight of a monomial is the
/// exponent-weighted sum, weight(1) = 0. Unlisted variables weigh 0.
/// Used only to take initial forms, never refined into a total order.
class Weighting {
public:
    Weighting() = default;
    void set(VariableId v, long w);
    long weight(VariableId v) const;
    long weight(const Monomial& m) const;

    /// Sum of the terms of maximal weight. Throws EmptyPolynomialError on 0.
    Polynomial initial_form(const Polynomial& f) const;

private:
    std::unordered_map<uint32_t, long> weights_;
};

}  // namespace detrees
