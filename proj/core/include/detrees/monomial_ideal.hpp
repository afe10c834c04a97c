#pragma once

#include <vector>

#include "detrees/monomial.hpp"
#include "detrees/ring.hpp"

namespace detrees {

/// Monomial ideal stored by its unique minimal generating set, sorted
/// canonically. The empty set is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);
    static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    /// Membership for a monomial: some generator divides it.
    bool contains(const Monomial& m) const;

    MonomialIdeal sum(const MonomialIdeal& o) const;
    MonomialIdeal power(int k) const;
    MonomialIdeal colon(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// Drops generators divisible by another and sorts canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace detrees
