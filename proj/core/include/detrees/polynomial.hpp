#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "detrees/monomial.hpp"
#include "detrees/term_order.hpp"

namespace detrees {

using Rational = mpq_class;

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Exact sparse polynomial over Q. Terms are kept strictly descending in the
/// canonical monomial order; zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    static Polynomial term(Monomial m, Rational c);
    static Polynomial variable(VariableId v);
    /// From arbitrary terms; merges equal monomials, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_monomial() const { return terms_.size() == 1; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Maximal term under the given order. Throws EmptyPolynomialError on 0.
    Term leading_term(const TermOrder& order) const;

    /// Image under the ring map sending each assigned variable to its image
    /// polynomial; unassigned variables map to themselves.
    Polynomial substitute(const std::unordered_map<uint32_t, Polynomial>& assignment) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
};

/// Parses the human-readable text format, e.g. "x[1,2]*x[2,3] - x[1,3]*x[2,2]"
/// or "3/2*y[1,3]^2 + 1". Printer and parser round-trip exactly.
Polynomial parse_polynomial(std::string_view text);

}  // namespace detrees
