#include "detrees/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "detrees/errors.hpp"

namespace detrees {

namespace {

// Descending canonical order for term storage.
inline bool term_before(const Term& a, const Term& b) { return Monomial::cmp(a.mono, b.mono) > 0; }

std::string coeff_str(const Rational& c) { return c.get_str(); }

}  // namespace

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(VariableId v) { return term(Monomial::variable(v), 1); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    Polynomial p;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            Rational sum = terms_[i].coeff + o.terms_[j].coeff;
            if (sum != 0) r.terms_.push_back({terms_[i].mono, std::move(sum)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplication by a fixed monomial preserves the canonical order.
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial acc;
    for (const auto& t : o.terms_) acc = acc + times_term(t.mono, t.coeff);
    return acc;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw InputError("polynomial: negative power");
    Polynomial r = constant(1);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
    return true;
}

Term Polynomial::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw EmptyPolynomialError("leading term of the zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
}

Polynomial Polynomial::substitute(const std::unordered_map<uint32_t, Polynomial>& assignment) const {
    Polynomial acc;
    for (const auto& t : terms_) {
        Polynomial prod = constant(t.coeff);
        Monomial untouched = Monomial::one();
        for (const auto& [code, exp] : t.mono.entries()) {
            auto it = assignment.find(code);
            if (it == assignment.end())
                untouched = untouched * Monomial::variable(VariableId::from_code(code), exp);
            else
                prod = prod * it->second.pow(exp);
        }
        acc = acc + prod.times_term(untouched, 1);
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (t.mono.is_one()) {
            out += coeff_str(c);
        } else if (c == 1) {
            out += t.mono.str();
        } else {
            out += coeff_str(c) + "*" + t.mono.str();
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser for the text format.

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InputError("polynomial parse: expected a number at position " + std::to_string(pos));
        return std::string(s.substr(start, pos - start));
    }

    VariableId variable() {
        skip_ws();
        char c = s[pos];
        if (c == 't') {
            ++pos;
            return VariableId::t();
        }
        ++pos;  // consume 'x' or 'y'
        if (!accept('[')) throw InputError("polynomial parse: expected '['");
        int a = std::stoi(integer());
        if (!accept(',')) throw InputError("polynomial parse: expected ','");
        int b = std::stoi(integer());
        if (!accept(']')) throw InputError("polynomial parse: expected ']'");
        return c == 'x' ? VariableId::x(a, b) : VariableId::y(a, b);
    }

    // factor := integer ['/' integer] | var ['^' integer]
    void factor(Rational& coeff, std::vector<std::pair<VariableId, int>>& vars) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = integer();
            if (accept('/')) {
                std::string den = integer();
                coeff *= Rational(num + "/" + den);
                coeff.canonicalize();
            } else {
                coeff *= Rational(num);
            }
        } else if (c == 'x' || c == 'y' || c == 't') {
            VariableId v = variable();
            int e = 1;
            if (accept('^')) e = std::stoi(integer());
            vars.push_back({v, e});
        } else {
            throw InputError(std::string("polynomial parse: unexpected character '") + c + "'");
        }
    }

    Term term() {
        Rational coeff = 1;
        std::vector<std::pair<VariableId, int>> vars;
        factor(coeff, vars);
        while (accept('*')) factor(coeff, vars);
        return {Monomial::from_exponents(std::move(vars)), std::move(coeff)};
    }

    Polynomial poly() {
        std::vector<Term> terms;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        for (;;) {
            Term t = term();
            if (neg) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                break;
        }
        if (!eof()) throw InputError("polynomial parse: trailing input at position " + std::to_string(pos));
        return Polynomial::from_terms(std::move(terms));
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    Parser p{text};
    if (p.eof()) throw InputError("polynomial parse: empty input");
    if (text == "0") return Polynomial::zero();
    return p.poly();
}

}  // namespace detrees
