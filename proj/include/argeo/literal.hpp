#pragma once

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace argeo {

struct Literal {
    std::string atom;
    bool negated = false;

    Literal() = default;
    Literal(std::string a, bool neg = false) : atom(std::move(a)), negated(neg) {}

    // Accepts "p" or "~p".
    static Literal parse(std::string_view text) {
        if (!text.empty() && text.front() == '~') return Literal(std::string(text.substr(1)), true);
        return Literal(std::string(text), false);
    }

    Literal complement() const { return Literal(atom, !negated); }

    std::string str() const { return negated ? "~" + atom : atom; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << l.str(); }

using LiteralSet = std::set<Literal>;

inline std::string to_string(const LiteralSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : s) {
        if (!first) out += ",";
        out += l.str();
        first = false;
    }
    return out + "}";
}

}  // namespace argeo
