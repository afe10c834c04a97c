#pragma once

#include <string>
#include <vector>

#include "detrees/monomial_ideal.hpp"
#include "detrees/polynomial.hpp"
#include "detrees/ring.hpp"
#include "detrees/term_order.hpp"

namespace detrees {

/// The triple (n, r, s) of a sparse 2 x n matrix in normal form: row 1 holds
/// x[1,1..r+s], row 2 holds x[2,r+1..n], columns r+1..r+s carry two variables.
/// Valid when n >= 3, r >= 1 and 0 <= n-r-s <= r < n.
struct Shape {
    int n = 0, r = 0, s = 0;

    bool degenerate() const { return s == 0; }  // every minor a monomial
    std::string str() const;
};

/// Validates the triple; throws ValidationError naming the violated constraint.
Shape shape_validate(int n, int r, int s);
bool shape_is_valid(int n, int r, int s);

/// All valid shapes with 3 <= n <= nmax, ordered lexicographically. s = 0
/// shapes (no two-variable column) are included only on request.
std::vector<Shape> enumerate_shapes(int nmax, bool include_degenerate = false);

/// Reads a plain-text shape triple "n r s" (blank lines and '#' comments allowed).
Shape parse_shape_file(const std::string& path);

// Structural presence of matrix entries and presentation variables.
bool x_present(const Shape& sh, int u, int i);
bool y_present(const Shape& sh, int i, int j);

// Variable universes: R = K[x], R[t], S = K[x, y], S[t], T = K[y].
RingPtr ring_R(const Shape& sh);
RingPtr ring_Rt(const Shape& sh);
RingPtr ring_S(const Shape& sh);
RingPtr ring_St(const Shape& sh);
RingPtr ring_T(const Shape& sh);

enum class MinorClass { Zero, Monomial, Binomial };

struct ClassifiedMinor {
    int i = 0, j = 0;
    MinorClass cls = MinorClass::Zero;
    Polynomial poly;
};

/// The 2x2 minor on columns i < j with structural zeros substituted.
ClassifiedMinor minor(const Shape& sh, int i, int j);
/// All nonzero minors, ordered by (i, j).
std::vector<ClassifiedMinor> nonzero_minors(const Shape& sh);
/// (zero, monomial, binomial) counts over all column pairs.
struct MinorCounts {
    int zero = 0, monomial = 0, binomial = 0;
};
MinorCounts minor_counts(const Shape& sh);

/// Diagonal term order on K[x]: lex with x[1,1] > ... > x[1,r+s] > x[2,r+1] >
/// ... > x[2,n]. Leading term of every nonzero minor is its diagonal product.
TermOrder diagonal_order(const Shape& sh);

/// Closed-form minimal generators of the initial ideal of the minors:
/// { x[1,i]*x[2,j] : 1 <= i <= r+s, max(r,i) < j <= n }.
MonomialIdeal ferrers_ideal(const Shape& sh);

/// The partition (n-r repeated r times, n-r-1, ..., n-r-s), length r+s.
/// The final entry is 0 exactly when n = r+s.
std::vector<int> ferrers_partition(const Shape& sh);

std::string render_matrix(const Shape& sh);
std::string render_ferrers(const Shape& sh);

}  // namespace detrees
