#include "detrees/monomial_ideal.hpp"

#include <algorithm>

#include "detrees/errors.hpp"

namespace detrees {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    // Ascending degree order: earlier entries can only divide later ones.
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& m : minimal) {
            if (m.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    return minimal;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(minimalize(std::move(gens))) {
    for (const auto& g : gens_)
        if (!ring_->contains_all(g)) throw InputError("monomial ideal: generator outside the ambient ring");
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& o) const {
    std::vector<Monomial> all = gens_;
    all.insert(all.end(), o.gens_.begin(), o.gens_.end());
    return MonomialIdeal(ring_, std::move(all));
}

MonomialIdeal MonomialIdeal::power(int k) const {
    if (k < 0) throw InputError("monomial ideal power: negative exponent");
    if (k == 0) return MonomialIdeal(ring_, {Monomial::one()});
    if (gens_.empty()) return MonomialIdeal(ring_, {});
    // All k-fold products of generators, via multisets.
    std::vector<Monomial> products;
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    for (;;) {
        Monomial p = Monomial::one();
        for (size_t i : idx) p = p * gens_[i];
        products.push_back(std::move(p));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == gens_.size() - 1) --pos;
        if (pos < 0) break;
        size_t next = idx[pos] + 1;
        for (int q = pos; q < k; ++q) idx[q] = next;
    }
    return MonomialIdeal(ring_, std::move(products));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.divided_by(Monomial::gcd(g, m)));
    return MonomialIdeal(ring_, std::move(out));
}

}  // namespace detrees
