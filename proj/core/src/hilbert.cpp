#include "detrees/hilbert.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "detrees/errors.hpp"

namespace detrees {

namespace {

using Poly = std::vector<mpz_class>;  // coefficients of a polynomial in z

Poly poly_one() { return {mpz_class(1)}; }

void poly_add(Poly& a, const Poly& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// (1 - z^d)
Poly one_minus_zd(int d) {
    Poly p(static_cast<size_t>(d) + 1, mpz_class(0));
    p[0] = 1;
    p[static_cast<size_t>(d)] = -1;
    return p;
}

struct GenSetHash {
    size_t operator()(const std::vector<Monomial>& gens) const {
        size_t h = 14695981039346656037ull;
        for (const auto& g : gens) h = (h ^ g.hash()) * 1099511628211ull;
        return h;
    }
};

struct Recursion {
    std::unordered_map<std::vector<Monomial>, Poly, GenSetHash> memo;

    Poly run(std::vector<Monomial> gens) {
        if (gens.empty()) return poly_one();
        if (gens.size() == 1 && gens[0].is_one()) return Poly{mpz_class(0)};

        auto hit = memo.find(gens);
        if (hit != memo.end()) return hit->second;

        Poly result;
        if (pairwise_coprime(gens)) {
            result = poly_one();
            for (const auto& g : gens) result = poly_mul(result, one_minus_zd(g.degree()));
        } else {
            VariableId pivot = pick_pivot(gens);
            // J + (pivot)
            std::vector<Monomial> plus{Monomial::variable(pivot)};
            for (const auto& g : gens)
                if (g.exponent(pivot) == 0) plus.push_back(g);
            // J : pivot
            Monomial pm = Monomial::variable(pivot);
            std::vector<Monomial> colon;
            colon.reserve(gens.size());
            for (const auto& g : gens) colon.push_back(g.divided_by(Monomial::gcd(g, pm)));
            result = run(minimalize(std::move(plus)));
            Poly colon_num = run(minimalize(std::move(colon)));
            poly_add(result, colon_num, 1);
        }
        memo.emplace(std::move(gens), result);
        return result;
    }

    static bool pairwise_coprime(const std::vector<Monomial>& gens) {
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = i + 1; j < gens.size(); ++j)
                if (!gens[i].coprime(gens[j])) return false;
        return true;
    }

    static VariableId pick_pivot(const std::vector<Monomial>& gens) {
        // Most frequent variable among generators that are not pure powers.
        std::map<uint32_t, int> freq;
        for (const auto& g : gens) {
            if (g.support_size() <= 1) continue;
            for (const auto& [code, exp] : g.entries()) ++freq[code];
        }
        uint32_t best = 0;
        int best_count = -1;
        for (const auto& [code, count] : freq) {
            if (count > best_count) {
                best = code;
                best_count = count;
            }
        }
        return VariableId::from_code(best);
    }
};

}  // namespace

SeriesNumerator hilbert_numerator(const MonomialIdeal& J) {
    Recursion rec;
    Poly p = rec.run(J.gens());
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return SeriesNumerator{std::move(p)};
}

std::pair<std::vector<long long>, int> normalize_series(const SeriesNumerator& num, int nvars) {
    if (num.coeffs.empty() || (num.coeffs.size() == 1 && num.coeffs[0] == 0))
        throw InputError("normalize: numerator of the unit ideal has no h-vector");
    Poly p = num.coeffs;
    int divisions = 0;
    for (;;) {
        mpz_class at_one(0);
        for (const auto& c : p) at_one += c;
        if (at_one != 0) break;
        // p / (1 - z): q_i = sum_{k <= i} p_k  (valid since p(1) = 0).
        Poly q(p.size() - 1, mpz_class(0));
        mpz_class acc(0);
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            acc += p[i];
            q[i] = acc;
        }
        p = std::move(q);
        ++divisions;
        if (p.empty()) throw InputError("normalize: numerator is zero");
    }
    std::vector<long long> h;
    h.reserve(p.size());
    for (const auto& c : p) {
        if (!c.fits_slong_p()) throw InputError("normalize: h-vector entry overflows");
        h.push_back(c.get_si());
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return {std::move(h), nvars - divisions};
}

HilbertRecord invariants_from_h(const std::vector<long long>& h, int dim) {
    if (h.empty() || h[0] != 1) throw InputError("invariants: h-vector must start with 1");
    HilbertRecord rec;
    rec.h = h;
    while (rec.h.size() > 1 && rec.h.back() == 0) rec.h.pop_back();
    rec.dim = dim;
    rec.mult = 0;
    for (long long v : rec.h) rec.mult += v;
    rec.reg = static_cast<int>(rec.h.size()) - 1;
    rec.a_inv = rec.reg - dim;
    return rec;
}

HilbertRecord hilbert_record(const MonomialIdeal& J) {
    auto [h, dim] = normalize_series(hilbert_numerator(J), static_cast<int>(J.ring()->size()));
    return invariants_from_h(h, dim);
}

mpz_class series_coefficient(const SeriesNumerator& num, int nvars, int d) {
    // Coefficient of z^e in 1/(1-z)^n is C(n-1+e, n-1).
    mpz_class total(0);
    for (int i = 0; i <= std::min(d, num.degree()); ++i) {
        if (num.coeffs[static_cast<size_t>(i)] == 0) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(nvars - 1 + d - i),
                     static_cast<unsigned long>(nvars - 1));
        total += num.coeffs[static_cast<size_t>(i)] * binom;
    }
    return total;
}

namespace {

long long count_free(const std::vector<VariableId>& vars, size_t from, int degree_left,
                     Monomial& current, const MonomialIdeal& J) {
    if (degree_left == 0) return J.contains(current) ? 0 : 1;
    if (from == vars.size()) return 0;
    long long total = 0;
    for (int e = 0; e <= degree_left; ++e) {
        Monomial next = current * Monomial::variable(vars[from], e);
        total += count_free(vars, from + 1, degree_left - e, next, J);
    }
    return total;
}

}  // namespace

long long hilbert_function_oracle(const MonomialIdeal& J, int d, long long budget) {
    int nvars = static_cast<int>(J.ring()->size());
    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(nvars + d - 1),
                 static_cast<unsigned long>(d));
    if (count > mpz_class(std::to_string(budget)))
        throw BudgetError("hilbert oracle: " + count.get_str() + " monomials exceed the budget");
    Monomial one = Monomial::one();
    return count_free(J.ring()->vars(), 0, d, one, J);
}

}  // namespace detrees
