#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "detrees/monomial.hpp"
#include "detrees/variable.hpp"

namespace detrees {

/// Variable universe of a polynomial ring, in canonical enumeration order.
class Ring {
public:
    static std::shared_ptr<const Ring> make(std::vector<VariableId> vars);

    const std::vector<VariableId>& vars() const { return vars_; }
    size_t size() const { return vars_.size(); }
    bool contains(VariableId v) const { return codes_.count(v.code()) != 0; }
    bool contains_all(const Monomial& m) const;

private:
    explicit Ring(std::vector<VariableId> vars);
    std::vector<VariableId> vars_;
    std::unordered_set<uint32_t> codes_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace detrees
