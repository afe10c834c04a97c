#include "detrees/weighting.hpp"

#include "detrees/errors.hpp"

namespace detrees {

void Weighting::set(VariableId v, long w) {
    if (w < 0) throw InputError("weighting: negative weight");
    weights_[v.code()] = w;
}

long Weighting::weight(VariableId v) const {
    auto it = weights_.find(v.code());
    return it == weights_.end() ? 0 : it->second;
}

long Weighting::weight(const Monomial& m) const {
    long w = 0;
    for (const auto& [code, exp] : m.entries()) {
        auto it = weights_.find(code);
        if (it != weights_.end()) w += static_cast<long>(exp) * it->second;
    }
    return w;
}

Polynomial Weighting::initial_form(const Polynomial& f) const {
    if (f.is_zero()) throw EmptyPolynomialError("initial form of the zero polynomial");
    long max_w = weight(f.terms().front().mono);
    for (const auto& t : f.terms()) max_w = std::max(max_w, weight(t.mono));
    std::vector<Term> kept;
    for (const auto& t : f.terms())
        if (weight(t.mono) == max_w) kept.push_back(t);
    return Polynomial::from_terms(std::move(kept));
}

}  // namespace detrees
