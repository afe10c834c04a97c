#pragma once

#include <memory>
#include <string>
#include <vector>

#include "detrees/monomial.hpp"
#include "detrees/ring.hpp"
#include "detrees/variable.hpp"

namespace detrees {

enum class Ordering { Less, Equal, Greater };

/// Term order on monomials. Variants: Lex over an explicit variable sequence,
/// DegThen (total degree over the covered variables, then inner), Block
/// (ordered variable groups compared by restriction), and TExtended (t-degree
/// first, then inner on the rest).
///
/// All variants are total, multiplicative well-orders on monomials over the
/// covered variables; compare() throws InputError on a variable outside them.
class TermOrder {
public:
    static TermOrder lex(std::vector<VariableId> sequence);
    static TermOrder deg_then(TermOrder inner);
    static TermOrder block(std::vector<TermOrder> blocks);
    static TermOrder t_extended(TermOrder inner);

    Ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::Less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::Greater; }

    bool covers(VariableId v) const;
    std::string describe() const;

    struct Impl;

private:
    explicit TermOrder(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace detrees
