#include "detrees/ring.hpp"

#include <algorithm>

#include "detrees/errors.hpp"

namespace detrees {

Ring::Ring(std::vector<VariableId> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (VariableId v : vars_) codes_.insert(v.code());
}

std::shared_ptr<const Ring> Ring::make(std::vector<VariableId> vars) {
    return std::shared_ptr<const Ring>(new Ring(std::move(vars)));
}

bool Ring::contains_all(const Monomial& m) const {
    for (const auto& [code, exp] : m.entries())
        if (codes_.count(code) == 0) return false;
    return true;
}

}  // namespace detrees
