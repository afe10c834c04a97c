#include "detrees/monomial.hpp"

#include <algorithm>

#include "detrees/errors.hpp"

namespace detrees {

namespace {

// Cheap bit signature for divisibility pre-checks.
inline uint64_t code_bit(uint32_t code) {
    uint64_t h = code;
    h ^= h >> 16;
    h *= 0x45d9f3b;
    h ^= h >> 16;
    return 1ull << (h & 63);
}

}  // namespace

const Monomial& Monomial::one() {
    static const Monomial unit;
    return unit;
}

void Monomial::finish() {
    degree_ = 0;
    mask_ = 0;
    for (const auto& [code, exp] : entries_) {
        degree_ += exp;
        mask_ |= code_bit(code);
    }
}

Monomial Monomial::variable(VariableId v, int exp) {
    if (exp < 0) throw InputError("monomial: negative exponent");
    Monomial m;
    if (exp > 0) m.entries_.push_back({v.code(), exp});
    m.finish();
    return m;
}

Monomial Monomial::from_exponents(std::vector<std::pair<VariableId, int>> entries) {
    std::vector<Entry> raw;
    raw.reserve(entries.size());
    for (const auto& [v, e] : entries) {
        if (e < 0) throw InputError("monomial: negative exponent");
        if (e > 0) raw.push_back({v.code(), e});
    }
    std::sort(raw.begin(), raw.end());
    Monomial m;
    for (const auto& [code, exp] : raw) {
        if (!m.entries_.empty() && m.entries_.back().first == code)
            m.entries_.back().second += exp;
        else
            m.entries_.push_back({code, exp});
    }
    m.finish();
    return m;
}

int Monomial::exponent(VariableId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v.code(), 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    if (it != entries_.end() && it->first == v.code()) return it->second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.entries_.reserve(entries_.size() + o.entries_.size());
    size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first < o.entries_[j].first)
            m.entries_.push_back(entries_[i++]);
        else if (entries_[i].first > o.entries_[j].first)
            m.entries_.push_back(o.entries_[j++]);
        else {
            m.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
            ++i, ++j;
        }
    }
    while (i < entries_.size()) m.entries_.push_back(entries_[i++]);
    while (j < o.entries_.size()) m.entries_.push_back(o.entries_[j++]);
    m.finish();
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    if ((mask_ & ~o.mask_) != 0) return false;
    size_t i = 0, j = 0;
    while (i < entries_.size()) {
        while (j < o.entries_.size() && o.entries_[j].first < entries_[i].first) ++j;
        if (j >= o.entries_.size() || o.entries_[j].first != entries_[i].first ||
            o.entries_[j].second < entries_[i].second)
            return false;
        ++i, ++j;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial m;
    size_t i = 0, j = 0;
    while (i < entries_.size()) {
        if (j < d.entries_.size() && d.entries_[j].first == entries_[i].first) {
            int e = entries_[i].second - d.entries_[j].second;
            if (e < 0) throw InputError("monomial quotient: not divisible");
            if (e > 0) m.entries_.push_back({entries_[i].first, e});
            ++i, ++j;
        } else if (j < d.entries_.size() && d.entries_[j].first < entries_[i].first) {
            throw InputError("monomial quotient: not divisible");
        } else {
            m.entries_.push_back(entries_[i++]);
        }
    }
    if (j != d.entries_.size()) throw InputError("monomial quotient: not divisible");
    m.finish();
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        if (a.entries_[i].first < b.entries_[j].first)
            m.entries_.push_back(a.entries_[i++]);
        else if (a.entries_[i].first > b.entries_[j].first)
            m.entries_.push_back(b.entries_[j++]);
        else {
            m.entries_.push_back({a.entries_[i].first, std::max(a.entries_[i].second, b.entries_[j].second)});
            ++i, ++j;
        }
    }
    while (i < a.entries_.size()) m.entries_.push_back(a.entries_[i++]);
    while (j < b.entries_.size()) m.entries_.push_back(b.entries_[j++]);
    m.finish();
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        if (a.entries_[i].first < b.entries_[j].first)
            ++i;
        else if (a.entries_[i].first > b.entries_[j].first)
            ++j;
        else {
            m.entries_.push_back({a.entries_[i].first, std::min(a.entries_[i].second, b.entries_[j].second)});
            ++i, ++j;
        }
    }
    m.finish();
    return m;
}

bool Monomial::coprime(const Monomial& o) const {
    if ((mask_ & o.mask_) == 0) return true;
    size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first < o.entries_[j].first)
            ++i;
        else if (entries_[i].first > o.entries_[j].first)
            ++j;
        else
            return false;
    }
    return true;
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw InputError("monomial: negative power");
    Monomial m;
    if (k > 0) {
        m.entries_ = entries_;
        for (auto& e : m.entries_) e.second *= k;
    }
    m.finish();
    return m;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    // Graded canonical lex: higher exponent on the earliest differing variable wins.
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        if (a.entries_[i].first < b.entries_[j].first) return 1;
        if (a.entries_[i].first > b.entries_[j].first) return -1;
        if (a.entries_[i].second != b.entries_[j].second)
            return a.entries_[i].second > b.entries_[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.entries_.size()) return 1;
    if (j < b.entries_.size()) return -1;
    return 0;
}

size_t Monomial::hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& [code, exp] : entries_) {
        h = (h ^ code) * 1099511628211ull;
        h = (h ^ static_cast<size_t>(exp)) * 1099511628211ull;
    }
    return h;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string out;
    for (const auto& [code, exp] : entries_) {
        if (!out.empty()) out += "*";
        out += VariableId::from_code(code).name();
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace detrees
