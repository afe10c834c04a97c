#pragma once

#include <optional>
#include <vector>

#include "detrees/monomial_ideal.hpp"
#include "detrees/polynomial.hpp"
#include "detrees/ring.hpp"
#include "detrees/term_order.hpp"

namespace detrees {

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;  // monic; sorted by leading monomial if reduced
    TermOrder order;
    bool reduced = false;
};

/// Normal form of f modulo G under the order: no term of the result is
/// divisible by any leading monomial of G, and f - result lies in (G).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);

struct BuchbergerOptions {
    bool auto_reduce = true;
    long long pair_budget = -1;  // < 0: unlimited; otherwise throws BudgetError
};

/// Buchberger with Gebauer-Moller pair elimination and normal (smallest lcm
/// degree first) selection. Returns the reduced basis when auto_reduce is set.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, const BuchbergerOptions& opts = {});

struct SPairCheck {
    bool pass = true;
    size_t i = 0, j = 0;        // witness pair on failure
    Polynomial remainder;       // its nonzero normal form
    long long pairs_reduced = 0;
};

/// Tests whether gens already form a Groebner basis: every S-pair (modulo the
/// coprime-leading-monomial criterion) reduces to zero against gens.
SPairCheck is_groebner_check(const std::vector<Polynomial>& gens, const TermOrder& order,
                             long long pair_budget = -1);

/// Minimal generators of the leading-monomial ideal of a basis.
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// Generators of the k-fold product ideal (deduplicated k-fold products).
/// k = 0 yields the unit ideal.
Ideal ideal_power(const Ideal& ideal, int k);

struct IdealEqualResult {
    bool equal = false;
    std::optional<Polynomial> witness;  // first generator of one side not in the other
    bool witness_in_left = false;       // witness came from A (not a member of B)
};

/// Equality via reduced Groebner bases under the given order.
IdealEqualResult ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& order);

/// Intersection with the subring omitting `drop`, via a block order with the
/// dropped block greatest. The returned generators are a Groebner basis of
/// the elimination ideal under deg-then-lex on the kept variables.
Ideal eliminate(const Ideal& ideal, const std::vector<VariableId>& drop,
                const BuchbergerOptions& opts = {});

/// Kernel of the algebra map sending each y-variable to its image polynomial.
/// Images containing t: eliminates t only (Rees presentation, x's kept).
/// Otherwise: eliminates every non-y variable of the images (fiber kernel).
Ideal kernel_of_algebra_map(const std::vector<std::pair<VariableId, Polynomial>>& images,
                            const BuchbergerOptions& opts = {});

}  // namespace detrees
