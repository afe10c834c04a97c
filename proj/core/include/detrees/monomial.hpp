#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "detrees/variable.hpp"

namespace detrees {

/// Sparse monomial: exponent map over VariableId, stored as pairs sorted by
/// ascending variable code. No zero exponents; the empty map is 1.
class Monomial {
public:
    using Entry = std::pair<uint32_t, int32_t>;  // (variable code, exponent > 0)

    Monomial() = default;
    static const Monomial& one();
    static Monomial variable(VariableId v, int exp = 1);
    /// From (variable, exponent) pairs in any order; merges duplicates, drops zeros.
    static Monomial from_exponents(std::vector<std::pair<VariableId, int>> entries);

    bool is_one() const { return entries_.empty(); }
    int degree() const { return degree_; }
    int exponent(VariableId v) const;
    size_t support_size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    uint64_t mask() const { return mask_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Quotient this / d; precondition: d divides this.
    Monomial divided_by(const Monomial& d) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;
    Monomial pow(int k) const;

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Canonical comparison: total degree first, then lexicographic on the
    /// canonical variable enumeration (smaller code more significant).
    /// Returns <0, 0, >0 as a is smaller/equal/greater than b.
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

    size_t hash() const;
    std::string str() const;

private:
    std::vector<Entry> entries_;
    int degree_ = 0;
    uint64_t mask_ = 0;

    void finish();  // recompute degree and mask; entries_ must be sorted and positive
};

}  // namespace detrees
