#include "detrees/relations.hpp"

#include <set>

namespace detrees {

namespace {

Polynomial x_times_y(const Shape& sh, int u, int xi, int yi, int yj, int sign) {
    if (!x_present(sh, u, xi) || !y_present(sh, yi, yj)) return Polynomial::zero();
    Monomial m = Monomial::variable(VariableId::x(u, xi)) * Monomial::variable(VariableId::y(yi, yj));
    return Polynomial::term(std::move(m), sign);
}

Polynomial y_times_y(const Shape& sh, int a, int b, int c, int d, int sign) {
    if (!y_present(sh, a, b) || !y_present(sh, c, d)) return Polynomial::zero();
    Monomial m = Monomial::variable(VariableId::y(a, b)) * Monomial::variable(VariableId::y(c, d));
    return Polynomial::term(std::move(m), sign);
}

// Sign-normalized canonical key, for dedup up to sign.
std::string sign_normalized_key(const Polynomial& p) {
    if (p.terms().front().coeff < 0) return (-p).str();
    return p.str();
}

}  // namespace

std::string Relation::name() const {
    if (kind == Kind::Linear)
        return "l(" + std::to_string(u) + ";" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) +
               "," + std::to_string(idx[2]) + ")";
    return "p(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) +
           "," + std::to_string(idx[3]) + ")";
}

std::vector<Relation> linear_relations(const Shape& sh) {
    std::vector<Relation> out;
    std::set<std::string> seen;
    for (int u = 1; u <= 2; ++u)
        for (int i = 1; i <= sh.n; ++i)
            for (int j = i + 1; j <= sh.n; ++j)
                for (int k = j + 1; k <= sh.n; ++k) {
                    Polynomial rel = x_times_y(sh, u, i, j, k, 1) + x_times_y(sh, u, j, i, k, -1) +
                                     x_times_y(sh, u, k, i, j, 1);
                    if (rel.is_zero()) continue;
                    if (!seen.insert(sign_normalized_key(rel)).second) continue;
                    out.push_back(Relation{Relation::Kind::Linear, u, {i, j, k, 0}, std::move(rel)});
                }
    return out;
}

std::vector<Relation> plucker_relations(const Shape& sh) {
    std::vector<Relation> out;
    std::set<std::string> seen;
    for (int i = 1; i <= sh.n; ++i)
        for (int j = i + 1; j <= sh.n; ++j)
            for (int k = j + 1; k <= sh.n; ++k)
                for (int l = k + 1; l <= sh.n; ++l) {
                    Polynomial rel = y_times_y(sh, i, j, k, l, 1) + y_times_y(sh, i, k, j, l, -1) +
                                     y_times_y(sh, i, l, j, k, 1);
                    if (rel.is_zero()) continue;
                    if (!seen.insert(sign_normalized_key(rel)).second) continue;
                    out.push_back(Relation{Relation::Kind::Plucker, 0, {i, j, k, l}, std::move(rel)});
                }
    return out;
}

ShapeWeights weights(const Shape& sh) {
    ShapeWeights w;
    for (int i = 1; i <= sh.r + sh.s; ++i) {
        w.omega.set(VariableId::x(1, i), 1);
        w.pi.set(VariableId::x(1, i), 1);
    }
    for (int j = sh.r + 1; j <= sh.n; ++j) {
        w.omega.set(VariableId::x(2, j), j);
        w.pi.set(VariableId::x(2, j), j);
    }
    w.omega.set(VariableId::t(), 1);
    for (int i = 1; i < sh.n; ++i)
        for (int j = i + 1; j <= sh.n; ++j)
            if (y_present(sh, i, j)) w.pi.set(VariableId::y(i, j), j + 2);
    return w;
}

}  // namespace detrees
