#include "detrees/term_order.hpp"

#include <unordered_map>
#include <unordered_set>

#include "detrees/errors.hpp"

namespace detrees {

struct TermOrder::Impl {
    enum class Kind { Lex, DegThen, Block, TExtended } kind;

    // Lex
    std::vector<VariableId> sequence;
    std::unordered_map<uint32_t, int> significance;  // smaller = more significant

    // DegThen / TExtended
    std::shared_ptr<const Impl> inner;

    // Block
    std::vector<std::shared_ptr<const Impl>> blocks;

    // All variables this node (transitively) covers.
    std::unordered_set<uint32_t> coverage;

    bool covers_code(uint32_t code) const { return coverage.count(code) != 0; }

    // Compares a and b restricted to this node's coverage; variables outside
    // the coverage are ignored (the top-level compare validates coverage).
    Ordering cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Lex: {
                // Most significant variable with differing exponent decides.
                int best_sig = -1;
                int best_delta = 0;
                const auto& ea = a.entries();
                const auto& eb = b.entries();
                size_t i = 0, j = 0;
                auto consider = [&](uint32_t code, int delta) {
                    if (delta == 0) return;
                    auto it = significance.find(code);
                    if (it == significance.end()) return;
                    if (best_sig < 0 || it->second < best_sig) {
                        best_sig = it->second;
                        best_delta = delta;
                    }
                };
                while (i < ea.size() && j < eb.size()) {
                    if (ea[i].first < eb[j].first) {
                        consider(ea[i].first, ea[i].second);
                        ++i;
                    } else if (ea[i].first > eb[j].first) {
                        consider(eb[j].first, -eb[j].second);
                        ++j;
                    } else {
                        consider(ea[i].first, ea[i].second - eb[j].second);
                        ++i, ++j;
                    }
                }
                while (i < ea.size()) { consider(ea[i].first, ea[i].second); ++i; }
                while (j < eb.size()) { consider(eb[j].first, -eb[j].second); ++j; }
                if (best_sig < 0) return Ordering::Equal;
                return best_delta > 0 ? Ordering::Greater : Ordering::Less;
            }
            case Kind::DegThen: {
                long da = restricted_degree(a), db = restricted_degree(b);
                if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
                return inner->cmp(a, b);
            }
            case Kind::Block: {
                for (const auto& blk : blocks) {
                    Ordering o = blk->cmp(a, b);
                    if (o != Ordering::Equal) return o;
                }
                return Ordering::Equal;
            }
            case Kind::TExtended: {
                int ta = a.exponent(VariableId::t());
                int tb = b.exponent(VariableId::t());
                if (ta != tb) return ta < tb ? Ordering::Less : Ordering::Greater;
                return inner->cmp(a, b);
            }
        }
        return Ordering::Equal;
    }

    long restricted_degree(const Monomial& m) const {
        long d = 0;
        for (const auto& [code, exp] : m.entries())
            if (covers_code(code)) d += exp;
        return d;
    }
};

TermOrder TermOrder::lex(std::vector<VariableId> sequence) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Lex;
    impl->sequence = std::move(sequence);
    for (size_t k = 0; k < impl->sequence.size(); ++k) {
        uint32_t code = impl->sequence[k].code();
        if (!impl->significance.emplace(code, static_cast<int>(k)).second)
            throw InputError("lex order: repeated variable " + impl->sequence[k].name());
        impl->coverage.insert(code);
    }
    return TermOrder(impl);
}

TermOrder TermOrder::deg_then(TermOrder inner) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::DegThen;
    impl->inner = inner.impl_;
    impl->coverage = inner.impl_->coverage;
    return TermOrder(impl);
}

TermOrder TermOrder::block(std::vector<TermOrder> blocks) {
    if (blocks.empty()) throw InputError("block order: no blocks");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Block;
    for (auto& b : blocks) {
        for (uint32_t code : b.impl_->coverage) {
            if (!impl->coverage.insert(code).second)
                throw InputError("block order: overlapping blocks");
        }
        impl->blocks.push_back(b.impl_);
    }
    return TermOrder(impl);
}

TermOrder TermOrder::t_extended(TermOrder inner) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::TExtended;
    impl->inner = inner.impl_;
    impl->coverage = inner.impl_->coverage;
    impl->coverage.insert(VariableId::t().code());
    return TermOrder(impl);
}

Ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& [code, exp] : a.entries())
        if (!impl_->covers_code(code))
            throw InputError("term order: unknown variable " + VariableId::from_code(code).name());
    for (const auto& [code, exp] : b.entries())
        if (!impl_->covers_code(code))
            throw InputError("term order: unknown variable " + VariableId::from_code(code).name());
    return impl_->cmp(a, b);
}

bool TermOrder::covers(VariableId v) const { return impl_->covers_code(v.code()); }

std::string TermOrder::describe() const {
    switch (impl_->kind) {
        case Impl::Kind::Lex: {
            std::string s = "lex(";
            for (size_t i = 0; i < impl_->sequence.size(); ++i) {
                if (i) s += ">";
                s += impl_->sequence[i].name();
            }
            return s + ")";
        }
        case Impl::Kind::DegThen:
            return "deg-then-" + TermOrder(impl_->inner).describe();
        case Impl::Kind::Block: {
            std::string s = "block[";
            for (size_t i = 0; i < impl_->blocks.size(); ++i) {
                if (i) s += "; ";
                s += TermOrder(impl_->blocks[i]).describe();
            }
            return s + "]";
        }
        case Impl::Kind::TExtended:
            return "tdeg-then-" + TermOrder(impl_->inner).describe();
    }
    return "?";
}

}  // namespace detrees
