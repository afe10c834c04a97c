#include "detrees/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detrees/errors.hpp"

namespace detrees {

namespace {

std::vector<Term> sorted_terms(const Polynomial& p, const TermOrder& ord) {
    std::vector<Term> ts = p.terms();
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return ts;
}

Polynomial to_polynomial(std::vector<Term> ts) { return Polynomial::from_terms(std::move(ts)); }

// result = a[a_from..] - c * m * b[b_from..], all descending under ord.
std::vector<Term> merge_sub(const std::vector<Term>& a, size_t a_from, const Rational& c,
                            const Monomial& m, const std::vector<Term>& b, size_t b_from,
                            const TermOrder& ord) {
    std::vector<Term> out;
    out.reserve((a.size() - a_from) + (b.size() - b_from));
    size_t i = a_from, j = b_from;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        Ordering o = ord.compare(a[i].mono, bm);
        if (o == Ordering::Greater) {
            out.push_back(a[i++]);
        } else if (o == Ordering::Less) {
            out.push_back({std::move(bm), -(c * b[j].coeff)});
            ++j;
        } else {
            Rational diff = a[i].coeff - c * b[j].coeff;
            if (diff != 0) out.push_back({a[i].mono, std::move(diff)});
            ++i, ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        out.push_back({b[j].mono * m, -(c * b[j].coeff)});
        ++j;
    }
    return out;
}

struct Reducer {
    std::vector<Term> terms;  // descending; monic (leading coefficient 1)
    Monomial lm;
    uint64_t mask = 0;
};

Reducer make_reducer(const Polynomial& g, const TermOrder& ord) {
    Reducer r;
    r.terms = sorted_terms(g, ord);
    if (r.terms.empty()) throw InputError("reduce: zero polynomial among reducers");
    Rational lc = r.terms.front().coeff;
    for (auto& t : r.terms) t.coeff /= lc;
    r.lm = r.terms.front().mono;
    r.mask = r.lm.mask();
    return r;
}

std::vector<Term> reduce_sorted(std::vector<Term> work, const std::vector<Reducer>& G,
                                const TermOrder& ord) {
    std::vector<Term> rem;
    size_t start = 0;
    while (start < work.size()) {
        const Term& head = work[start];
        const Reducer* div = nullptr;
        uint64_t hmask = head.mono.mask();
        for (const auto& g : G) {
            if ((g.mask & ~hmask) != 0) continue;
            if (g.lm.divides(head.mono)) {
                div = &g;
                break;
            }
        }
        if (div == nullptr) {
            rem.push_back(head);
            ++start;
        } else {
            Monomial q = head.mono.divided_by(div->lm);
            work = merge_sub(work, start + 1, head.coeff, q, div->terms, 1, ord);
            start = 0;
        }
    }
    return rem;
}

struct SPair {
    int deg;
    Monomial lcm;
    size_t i, j;
};

struct SPairLess {
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = Monomial::cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Buchberger working state with Gebauer-Moller pair management.
struct Engine {
    const TermOrder& ord;
    std::vector<Reducer> basis;
    std::set<SPair, SPairLess> pairs;

    explicit Engine(const TermOrder& o) : ord(o) {}

    void add(Reducer elem) {
        size_t t = basis.size();
        const Monomial& lmt = elem.lm;

        // Prune old pairs (chain criterion against the new leading monomial).
        for (auto it = pairs.begin(); it != pairs.end();) {
            const SPair& p = *it;
            if (lmt.divides(p.lcm) && Monomial::lcm(basis[p.i].lm, lmt) != p.lcm &&
                Monomial::lcm(basis[p.j].lm, lmt) != p.lcm)
                it = pairs.erase(it);
            else
                ++it;
        }

        // Candidate pairs with the new element.
        std::vector<SPair> cand;
        cand.reserve(t);
        for (size_t i = 0; i < t; ++i) {
            Monomial l = Monomial::lcm(basis[i].lm, lmt);
            cand.push_back({l.degree(), std::move(l), i, t});
        }
        // Criterion M: drop candidates whose lcm is a proper multiple of another's.
        std::vector<bool> dead(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a) {
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b) continue;
                if (cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(cand[a].lcm)) {
                    dead[a] = true;
                    break;
                }
            }
        }
        // Criterion F: for each equal-lcm class keep one pair, or none if some
        // member has coprime leading monomials (product criterion).
        std::map<Monomial, std::vector<size_t>> classes;
        for (size_t a = 0; a < cand.size(); ++a)
            if (!dead[a]) classes[cand[a].lcm].push_back(a);
        for (auto& [l, members] : classes) {
            bool coprime_member = false;
            for (size_t a : members)
                if (basis[cand[a].i].lm.coprime(lmt)) coprime_member = true;
            for (size_t k = 0; k < members.size(); ++k)
                if (coprime_member || k > 0) dead[members[k]] = true;
        }
        for (size_t a = 0; a < cand.size(); ++a)
            if (!dead[a]) pairs.insert(cand[a]);

        basis.push_back(std::move(elem));
    }
};

Polynomial spoly(const Reducer& f, const Reducer& g, const Monomial& lcm, const TermOrder& ord) {
    std::vector<Term> left;
    Monomial mf = lcm.divided_by(f.lm);
    for (const auto& t : f.terms) left.push_back({t.mono * mf, t.coeff});
    Monomial mg = lcm.divided_by(g.lm);
    std::vector<Term> res = merge_sub(left, 1, Rational(1), mg, g.terms, 1, ord);
    return to_polynomial(std::move(res));
}

std::vector<Polynomial> interreduce(std::vector<Reducer> basis, const TermOrder& ord) {
    // Minimalize leading monomials.
    std::vector<size_t> order_idx(basis.size());
    for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
        Ordering o = ord.compare(basis[a].lm, basis[b].lm);
        if (o != Ordering::Equal) return o == Ordering::Less;
        return a < b;
    });
    std::vector<Reducer> kept;
    for (size_t idx : order_idx) {
        bool divisible = false;
        for (const auto& k : kept)
            if (k.lm.divides(basis[idx].lm)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(std::move(basis[idx]));
    }
    // Tail-reduce each element against the rest; leading monomials are a
    // minimal set, so one pass fully reduces every tail.
    std::vector<Polynomial> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Reducer> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        std::vector<Term> tail(kept[i].terms.begin() + 1, kept[i].terms.end());
        std::vector<Term> red = reduce_sorted(std::move(tail), others, ord);
        red.insert(red.begin(), kept[i].terms.front());
        out.push_back(to_polynomial(std::move(red)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return out;
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order) {
    if (G.empty()) throw InputError("reduce: empty reducer list");
    std::vector<Reducer> reducers;
    reducers.reserve(G.size());
    for (const auto& g : G) reducers.push_back(make_reducer(g, order));
    return to_polynomial(reduce_sorted(sorted_terms(f, order), reducers, order));
}

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, const BuchbergerOptions& opts) {
    Engine eng(order);
    for (const auto& g : ideal.gens) {
        if (g.is_zero()) throw InputError("buchberger: zero generator");
        eng.add(make_reducer(g, order));
    }
    long long reduced_count = 0;
    while (!eng.pairs.empty()) {
        SPair p = *eng.pairs.begin();
        eng.pairs.erase(eng.pairs.begin());
        if (opts.pair_budget >= 0 && ++reduced_count > opts.pair_budget)
            throw BudgetError("buchberger: S-pair budget exceeded");
        Polynomial s = spoly(eng.basis[p.i], eng.basis[p.j], p.lcm, order);
        if (s.is_zero()) continue;
        std::vector<Term> rem = reduce_sorted(sorted_terms(s, order), eng.basis, order);
        if (!rem.empty()) eng.add(make_reducer(to_polynomial(std::move(rem)), order));
    }
    GroebnerBasis gb{ideal.ring, {}, order, opts.auto_reduce};
    if (opts.auto_reduce) {
        gb.elements = interreduce(std::move(eng.basis), order);
    } else {
        for (const auto& e : eng.basis) gb.elements.push_back(to_polynomial(e.terms));
    }
    return gb;
}

SPairCheck is_groebner_check(const std::vector<Polynomial>& gens, const TermOrder& order,
                             long long pair_budget) {
    SPairCheck result;
    std::vector<Reducer> basis;
    basis.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.is_zero()) throw InputError("is_groebner: zero generator");
        basis.push_back(make_reducer(g, order));
    }
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].lm.coprime(basis[j].lm)) continue;  // product criterion
            if (pair_budget >= 0 && result.pairs_reduced >= pair_budget)
                throw BudgetError("is_groebner: S-pair budget exceeded");
            Monomial l = Monomial::lcm(basis[i].lm, basis[j].lm);
            Polynomial s = spoly(basis[i], basis[j], l, order);
            ++result.pairs_reduced;
            if (s.is_zero()) continue;
            std::vector<Term> rem = reduce_sorted(sorted_terms(s, order), basis, order);
            if (!rem.empty()) {
                result.pass = false;
                result.i = i;
                result.j = j;
                result.remainder = to_polynomial(std::move(rem));
                return result;
            }
        }
    }
    return result;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    lms.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lms.push_back(g.leading_term(gb.order).mono);
    return MonomialIdeal(gb.ring, std::move(lms));
}

Ideal ideal_power(const Ideal& ideal, int k) {
    if (k < 0) throw InputError("ideal power: negative exponent");
    if (k == 0) return Ideal{ideal.ring, {Polynomial::constant(1)}};
    if (ideal.gens.empty()) return ideal;
    std::vector<Polynomial> products;
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    for (;;) {
        Polynomial p = Polynomial::constant(1);
        for (size_t i : idx) p = p * ideal.gens[i];
        if (!p.is_zero()) products.push_back(std::move(p));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == ideal.gens.size() - 1) --pos;
        if (pos < 0) break;
        size_t next = idx[pos] + 1;
        for (int q = pos; q < k; ++q) idx[q] = next;
    }
    // Deduplicate syntactically equal products.
    std::sort(products.begin(), products.end(), [](const Polynomial& a, const Polynomial& b) {
        const auto& ta = a.terms();
        const auto& tb = b.terms();
        if (ta.size() != tb.size()) return ta.size() < tb.size();
        for (size_t i = 0; i < ta.size(); ++i) {
            int c = Monomial::cmp(ta[i].mono, tb[i].mono);
            if (c != 0) return c > 0;
            if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
        }
        return false;
    });
    products.erase(std::unique(products.begin(), products.end()), products.end());
    return Ideal{ideal.ring, std::move(products)};
}

namespace {

bool gb_member(const Polynomial& g, const GroebnerBasis& gb) {
    if (gb.elements.empty()) return g.is_zero();
    return reduce(g, gb.elements, gb.order).is_zero();
}

}  // namespace

IdealEqualResult ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& order) {
    GroebnerBasis ga = buchberger(a, order);
    GroebnerBasis gb = buchberger(b, order);
    IdealEqualResult res;
    res.equal = ga.elements == gb.elements;
    if (!res.equal) {
        for (const auto& g : a.gens) {
            if (!gb_member(g, gb)) {
                res.witness = g;
                res.witness_in_left = true;
                return res;
            }
        }
        for (const auto& g : b.gens) {
            if (!gb_member(g, ga)) {
                res.witness = g;
                res.witness_in_left = false;
                return res;
            }
        }
    }
    return res;
}

Ideal eliminate(const Ideal& ideal, const std::vector<VariableId>& drop, const BuchbergerOptions& opts) {
    for (VariableId v : drop)
        if (!ideal.ring->contains(v)) throw InputError("eliminate: " + v.name() + " not in the ambient ring");
    std::set<uint32_t> dropped;
    for (VariableId v : drop) dropped.insert(v.code());
    std::vector<VariableId> keep;
    for (VariableId v : ideal.ring->vars())
        if (dropped.count(v.code()) == 0) keep.push_back(v);

    TermOrder order = dropped.empty()
                          ? TermOrder::deg_then(TermOrder::lex(keep))
                          : TermOrder::block({TermOrder::lex(std::vector<VariableId>(drop.begin(), drop.end())),
                                              TermOrder::deg_then(TermOrder::lex(keep))});
    GroebnerBasis gb = buchberger(ideal, order, opts);
    RingPtr keep_ring = Ring::make(keep);
    std::vector<Polynomial> kept_gens;
    for (const auto& g : gb.elements) {
        bool free_of_dropped = true;
        for (const auto& t : g.terms()) {
            for (const auto& [code, exp] : t.mono.entries())
                if (dropped.count(code)) {
                    free_of_dropped = false;
                    break;
                }
            if (!free_of_dropped) break;
        }
        if (free_of_dropped) kept_gens.push_back(g);
    }
    return Ideal{keep_ring, std::move(kept_gens)};
}

Ideal kernel_of_algebra_map(const std::vector<std::pair<VariableId, Polynomial>>& images,
                            const BuchbergerOptions& opts) {
    std::vector<VariableId> all_vars;
    std::set<uint32_t> image_var_codes;
    bool has_t = false;
    for (const auto& [y, img] : images) {
        if (img.is_zero()) throw InputError("kernel: zero image for " + y.name());
        all_vars.push_back(y);
        for (const auto& t : img.terms())
            for (const auto& [code, exp] : t.mono.entries()) {
                image_var_codes.insert(code);
                VariableId v = VariableId::from_code(code);
                all_vars.push_back(v);
                if (v.kind() == VarKind::T) has_t = true;
            }
    }
    RingPtr big = Ring::make(all_vars);
    std::vector<Polynomial> gens;
    gens.reserve(images.size());
    for (const auto& [y, img] : images) gens.push_back(Polynomial::variable(y) - img);

    std::vector<VariableId> drop;
    if (has_t) {
        drop.push_back(VariableId::t());
    } else {
        for (uint32_t code : image_var_codes) {
            VariableId v = VariableId::from_code(code);
            if (v.kind() != VarKind::Y) drop.push_back(v);
        }
        std::sort(drop.begin(), drop.end());
    }
    return eliminate(Ideal{big, std::move(gens)}, drop, opts);
}

}  // namespace detrees
