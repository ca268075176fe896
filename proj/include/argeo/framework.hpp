#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "argeo/error.hpp"

namespace argeo {

// Abstract argumentation framework: arguments are indices with display labels.
class Framework {
public:
    Framework() = default;

    std::size_t add_argument(std::string label) {
        if (index_.count(label)) throw Error("duplicate argument '" + label + "'");
        index_.emplace(label, labels_.size());
        labels_.push_back(std::move(label));
        defeaters_.emplace_back();
        targets_.emplace_back();
        return labels_.size() - 1;
    }

    void add_defeat(std::size_t attacker, std::size_t target) {
        auto& in = defeaters_.at(target);
        auto it = std::lower_bound(in.begin(), in.end(), attacker);
        if (it != in.end() && *it == attacker) return;
        in.insert(it, attacker);
        auto& out = targets_.at(attacker);
        out.insert(std::lower_bound(out.begin(), out.end(), target), target);
        ++defeat_count_;
    }

    std::size_t size() const { return labels_.size(); }
    std::size_t defeat_count() const { return defeat_count_; }
    const std::string& label(std::size_t a) const { return labels_.at(a); }

    std::optional<std::size_t> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Sorted lists.
    const std::vector<std::size_t>& defeaters_of(std::size_t a) const { return defeaters_.at(a); }
    const std::vector<std::size_t>& defeated_by(std::size_t a) const { return targets_.at(a); }

    bool defeats(std::size_t a, std::size_t b) const {
        const auto& in = defeaters_.at(b);
        return std::binary_search(in.begin(), in.end(), a);
    }

    bool strictly_defeats(std::size_t a, std::size_t b) const { return defeats(a, b) && !defeats(b, a); }

private:
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::vector<std::size_t>> defeaters_;
    std::vector<std::vector<std::size_t>> targets_;
    std::size_t defeat_count_ = 0;
};

// Sorted argument indices.
using Extension = std::vector<std::size_t>;

enum class Semantics { Grounded, Complete, Preferred, Stable };
enum class Mode { Sceptical, Credulous };

inline std::string_view to_string(Semantics s) {
    switch (s) {
        case Semantics::Grounded: return "grounded";
        case Semantics::Complete: return "complete";
        case Semantics::Preferred: return "preferred";
        case Semantics::Stable: return "stable";
    }
    return "grounded";
}

inline constexpr std::size_t default_extension_bound = 24;

namespace detail {

inline std::vector<char> membership(const Framework& f, const Extension& s) {
    std::vector<char> in(f.size(), 0);
    for (auto a : s) in.at(a) = 1;
    return in;
}

inline bool conflict_free(const Framework& f, const std::vector<char>& in) {
    for (std::size_t a = 0; a < f.size(); ++a)
        if (in[a])
            for (auto b : f.defeated_by(a))
                if (in[b]) return false;
    return true;
}

inline bool defended(const Framework& f, const std::vector<char>& in, std::size_t a) {
    for (auto b : f.defeaters_of(a)) {
        bool countered = false;
        for (auto c : f.defeaters_of(b))
            if (in[c]) {
                countered = true;
                break;
            }
        if (!countered) return false;
    }
    return true;
}

inline bool admissible(const Framework& f, const std::vector<char>& in) {
    if (!conflict_free(f, in)) return false;
    for (std::size_t a = 0; a < f.size(); ++a)
        if (in[a] && !defended(f, in, a)) return false;
    return true;
}

inline bool complete(const Framework& f, const std::vector<char>& in) {
    if (!admissible(f, in)) return false;
    for (std::size_t a = 0; a < f.size(); ++a)
        if (!in[a] && defended(f, in, a)) return false;
    return true;
}

inline bool stable(const Framework& f, const std::vector<char>& in) {
    if (!conflict_free(f, in)) return false;
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (in[a]) continue;
        bool hit = false;
        for (auto b : f.defeaters_of(a))
            if (in[b]) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline Extension members(const std::vector<char>& in) {
    Extension e;
    for (std::size_t a = 0; a < in.size(); ++a)
        if (in[a]) e.push_back(a);
    return e;
}

}  // namespace detail

inline bool is_conflict_free(const Framework& f, const Extension& s) {
    return detail::conflict_free(f, detail::membership(f, s));
}

inline bool defends(const Framework& f, const Extension& s, std::size_t a) {
    return detail::defended(f, detail::membership(f, s), a);
}

inline bool is_admissible(const Framework& f, const Extension& s) {
    return detail::admissible(f, detail::membership(f, s));
}

inline bool is_complete(const Framework& f, const Extension& s) {
    return detail::complete(f, detail::membership(f, s));
}

inline bool is_stable(const Framework& f, const Extension& s) { return detail::stable(f, detail::membership(f, s)); }

enum class Label { In, Out, Undecided };

// Grounded labelling: least fixpoint of the characteristic function.
inline std::vector<Label> grounded_labelling(const Framework& f) {
    std::vector<Label> label(f.size(), Label::Undecided);
    std::vector<std::size_t> live(f.size());
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < f.size(); ++a) {
        live[a] = f.defeaters_of(a).size();
        if (live[a] == 0) queue.push_back(a);
    }
    while (!queue.empty()) {
        std::size_t a = queue.back();
        queue.pop_back();
        if (label[a] != Label::Undecided) continue;
        label[a] = Label::In;
        for (auto b : f.defeated_by(a)) {
            if (label[b] != Label::Undecided) continue;
            label[b] = Label::Out;
            for (auto c : f.defeated_by(b))
                if (label[c] == Label::Undecided && --live[c] == 0) queue.push_back(c);
        }
    }
    return label;
}

inline Extension grounded(const Framework& f) {
    auto label = grounded_labelling(f);
    Extension e;
    for (std::size_t a = 0; a < f.size(); ++a)
        if (label[a] == Label::In) e.push_back(a);
    return e;
}

// Exact enumeration. Every complete extension contains the grounded one and avoids what it
// defeats, so the search only branches over the undecided arguments; `bound` caps their number.
inline std::vector<Extension> extensions(const Framework& f, Semantics sem,
                                         std::size_t bound = default_extension_bound) {
    if (sem == Semantics::Grounded) return {grounded(f)};
    auto label = grounded_labelling(f);
    std::vector<std::size_t> open;
    std::vector<char> in(f.size(), 0);
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (label[a] == Label::In) in[a] = 1;
        if (label[a] == Label::Undecided && !f.defeats(a, a)) open.push_back(a);
    }
    if (open.size() > bound)
        throw EngineError("framework too large: " + std::to_string(open.size()) +
                          " undecided arguments exceed the bound of " + std::to_string(bound));

    std::vector<Extension> found;
    auto clashes = [&](std::size_t a) {
        for (auto b : f.defeaters_of(a))
            if (in[b]) return true;
        for (auto b : f.defeated_by(a))
            if (in[b]) return true;
        return false;
    };
    auto search = [&](auto&& self, std::size_t i) -> void {
        if (i == open.size()) {
            bool ok = sem == Semantics::Stable ? detail::stable(f, in) : detail::complete(f, in);
            if (ok) found.push_back(detail::members(in));
            return;
        }
        std::size_t a = open[i];
        if (!clashes(a)) {
            in[a] = 1;
            self(self, i + 1);
            in[a] = 0;
        }
        self(self, i + 1);
    };
    search(search, 0);

    if (sem == Semantics::Preferred) {
        std::vector<Extension> maximal;
        for (const auto& e : found) {
            bool dominated = std::any_of(found.begin(), found.end(), [&](const Extension& o) {
                return o.size() > e.size() && std::includes(o.begin(), o.end(), e.begin(), e.end());
            });
            if (!dominated) maximal.push_back(e);
        }
        found = std::move(maximal);
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Sceptical membership requires at least one extension to exist.
inline bool justified(const Framework& f, std::size_t a, Semantics sem, Mode mode,
                      std::size_t bound = default_extension_bound) {
    auto exts = extensions(f, sem, bound);
    auto contains = [&](const Extension& e) { return std::binary_search(e.begin(), e.end(), a); };
    if (mode == Mode::Credulous) return std::any_of(exts.begin(), exts.end(), contains);
    return !exts.empty() && std::all_of(exts.begin(), exts.end(), contains);
}

inline std::string to_text(const Framework& f) {
    std::string out;
    for (std::size_t a = 0; a < f.size(); ++a) out += "arg " + f.label(a) + "\n";
    for (std::size_t a = 0; a < f.size(); ++a)
        for (auto b : f.defeated_by(a)) out += "att " + f.label(a) + " " + f.label(b) + "\n";
    return out;
}

inline Framework parse_framework(std::string_view text) {
    Framework f;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
        std::istringstream ls(line);
        std::string kw, a, b, extra;
        if (!(ls >> kw)) continue;
        auto lookup = [&](const std::string& id) {
            auto i = f.find(id);
            if (!i) throw ParseError(lineno, 1, "unknown argument '" + id + "'");
            return *i;
        };
        if (kw == "arg" && (ls >> a) && !(ls >> extra)) {
            if (f.find(a)) throw ParseError(lineno, 1, "duplicate argument '" + a + "'");
            f.add_argument(a);
        } else if (kw == "att" && (ls >> a >> b) && !(ls >> extra)) {
            f.add_defeat(lookup(a), lookup(b));
        } else {
            throw ParseError(lineno, 1, "expected 'arg <id>' or 'att <id> <id>'");
        }
    }
    return f;
}

inline std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string to_dot(const Framework& f, const std::vector<std::string>& captions = {}) {
    std::string out = "digraph framework {\n";
    for (std::size_t a = 0; a < f.size(); ++a) {
        std::string text = f.label(a);
        if (a < captions.size() && !captions[a].empty()) text += "\\n" + dot_escape(captions[a]);
        out += "  n" + std::to_string(a) + " [label=\"" + text + "\"];\n";
    }
    for (std::size_t a = 0; a < f.size(); ++a)
        for (auto b : f.defeated_by(a)) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    return out + "}\n";
}

}  // namespace argeo
