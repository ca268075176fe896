#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "argeo/argeo.hpp"

// Brute-force reference implementations. They share no code with the engines beyond the data types.
namespace argeo::oracle {

// Naive forward chaining over literal sets.
inline LiteralSet closure(const Program& p, RuleSet extra) {
    LiteralSet out = p.facts;
    std::vector<const Rule*> rules;
    for (const auto& r : p.strict_rules) rules.push_back(&r);
    for (std::size_t i = 0; i < p.defeasible_rules.size(); ++i)
        if (extra.contains(i)) rules.push_back(&p.defeasible_rules[i]);
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule* r : rules) {
            if (out.count(r->head)) continue;
            if (std::all_of(r->body.begin(), r->body.end(), [&](const Literal& b) { return out.count(b) > 0; })) {
                out.insert(r->head);
                changed = true;
            }
        }
    }
    return out;
}

inline bool contradictory(const LiteralSet& s) {
    for (const auto& l : s)
        if (s.count(l.complement())) return true;
    return false;
}

// Every (rules, conclusion) pair by subset enumeration of the defeasible rules.
inline std::set<std::pair<std::uint64_t, Literal>> arguments(const Program& p) {
    std::set<std::pair<std::uint64_t, Literal>> out;
    const std::size_t n = p.defeasible_rules.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        RuleSet s = RuleSet::from_bits(bits);
        LiteralSet derived = closure(p, s);
        if (contradictory(derived)) continue;
        for (const auto& l : derived) {
            bool minimal = true;
            for (std::size_t i = 0; i < n && minimal; ++i)
                if (s.contains(i)) {
                    RuleSet smaller = s;
                    smaller.erase(i);
                    if (closure(p, smaller).count(l)) minimal = false;
                }
            if (minimal) out.emplace(bits, l);
        }
    }
    return out;
}

// Dung semantics by checking definitions over every subset; frameworks up to ~12 arguments.
class NaiveSemantics {
public:
    explicit NaiveSemantics(const Framework& f) : n_(f.size()), att_(n_ * n_, 0) {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) att_[a * n_ + b] = f.defeats(a, b);
    }

    bool attacks(std::size_t a, std::size_t b) const { return att_[a * n_ + b]; }

    bool conflict_free(std::uint32_t s) const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (in(s, a) && in(s, b) && attacks(a, b)) return false;
        return true;
    }

    bool acceptable(std::size_t a, std::uint32_t s) const {
        for (std::size_t b = 0; b < n_; ++b) {
            if (!attacks(b, a)) continue;
            bool countered = false;
            for (std::size_t c = 0; c < n_; ++c) countered = countered || (in(s, c) && attacks(c, b));
            if (!countered) return false;
        }
        return true;
    }

    bool admissible(std::uint32_t s) const {
        if (!conflict_free(s)) return false;
        for (std::size_t a = 0; a < n_; ++a)
            if (in(s, a) && !acceptable(a, s)) return false;
        return true;
    }

    bool complete(std::uint32_t s) const {
        if (!admissible(s)) return false;
        for (std::size_t a = 0; a < n_; ++a)
            if (!in(s, a) && acceptable(a, s)) return false;
        return true;
    }

    bool stable(std::uint32_t s) const {
        if (!conflict_free(s)) return false;
        for (std::size_t b = 0; b < n_; ++b) {
            if (in(s, b)) continue;
            bool hit = false;
            for (std::size_t a = 0; a < n_; ++a) hit = hit || (in(s, a) && attacks(a, b));
            if (!hit) return false;
        }
        return true;
    }

    std::vector<Extension> enumerate(Semantics sem) const {
        std::vector<std::uint32_t> found;
        const std::uint32_t all = std::uint32_t{1} << n_;
        for (std::uint32_t s = 0; s < all; ++s) {
            bool ok = false;
            switch (sem) {
                case Semantics::Grounded:
                case Semantics::Complete: ok = complete(s); break;
                case Semantics::Preferred: ok = admissible(s); break;
                case Semantics::Stable: ok = stable(s); break;
            }
            if (ok) found.push_back(s);
        }
        if (sem == Semantics::Grounded) {
            // The least complete extension: contained in every other one.
            for (auto s : found) {
                bool least = std::all_of(found.begin(), found.end(), [&](std::uint32_t t) { return (s & t) == s; });
                if (least) return {members(s)};
            }
        }
        if (sem == Semantics::Preferred) {
            std::vector<std::uint32_t> maximal;
            for (auto s : found) {
                bool dominated = std::any_of(found.begin(), found.end(),
                                             [&](std::uint32_t t) { return t != s && (s & t) == s; });
                if (!dominated) maximal.push_back(s);
            }
            found = std::move(maximal);
        }
        std::vector<Extension> out;
        for (auto s : found) out.push_back(members(s));
        std::sort(out.begin(), out.end());
        return out;
    }

    // Least fixpoint of the characteristic function, iterated from the empty set.
    Extension grounded() const {
        std::uint32_t s = 0;
        for (;;) {
            std::uint32_t next = 0;
            for (std::size_t a = 0; a < n_; ++a)
                if (acceptable(a, s)) next |= std::uint32_t{1} << a;
            if (next == s) return members(s);
            s = next;
        }
    }

    static Extension members(std::uint32_t s) {
        Extension e;
        for (std::size_t a = 0; a < 32; ++a)
            if (in(s, a)) e.push_back(a);
        return e;
    }

private:
    std::size_t n_;
    std::vector<char> att_;

    static bool in(std::uint32_t s, std::size_t a) { return (s >> a) & 1u; }
};

}  // namespace argeo::oracle
