#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "argeo/framework.hpp"

namespace argeo {

enum class Player { Proponent, Opponent };

struct Move {
    Player player;
    std::size_t argument;
};

// Moves alternate starting with the proponent.
using Game = std::vector<Move>;

inline std::vector<std::size_t> legal_moves(const Framework& f, const Game& game) {
    std::vector<std::size_t> moves;
    if (game.empty()) {
        for (std::size_t a = 0; a < f.size(); ++a) moves.push_back(a);
        return moves;
    }
    std::size_t last = game.back().argument;
    bool proponent_next = game.size() % 2 == 0;
    for (auto a : f.defeaters_of(last)) {
        if (!proponent_next) {
            moves.push_back(a);
            continue;
        }
        if (!f.strictly_defeats(a, last)) continue;
        bool repeated = false;
        for (std::size_t i = 0; i < game.size(); i += 2)
            if (game[i].argument == a) repeated = true;
        if (!repeated) moves.push_back(a);
    }
    return moves;
}

// Winning strategy: a proponent node lists every opponent reply; each reply has one answer.
struct StrategyNode {
    Player player;
    std::size_t argument;
    std::vector<StrategyNode> children;
};

struct GameOutcome {
    bool justified = false;
    std::optional<StrategyNode> strategy;
};

namespace detail {

class GroundedGameSolver {
public:
    explicit GroundedGameSolver(const Framework& f) : f_(f), words_((f.size() + 63) / 64) {}

    GameOutcome solve(std::size_t a) {
        History h(words_, 0);
        set(h, a);
        GameOutcome out;
        out.justified = wins(a, h);
        if (out.justified) out.strategy = strategy(a, h);
        return out;
    }

private:
    using History = std::vector<std::uint64_t>;

    const Framework& f_;
    std::size_t words_;
    std::map<std::pair<std::size_t, History>, bool> memo_;

    static bool has(const History& h, std::size_t a) { return (h[a / 64] >> (a % 64)) & 1U; }
    static void set(History& h, std::size_t a) { h[a / 64] |= std::uint64_t{1} << (a % 64); }

    // The proponent has just played x; history h includes x.
    bool wins(std::size_t x, const History& h) {
        auto key = std::make_pair(x, h);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = true;
        for (auto y : f_.defeaters_of(x))
            if (!answer(y, h)) {
                result = false;
                break;
            }
        memo_[key] = result;
        return result;
    }

    std::optional<std::size_t> answer(std::size_t y, const History& h) {
        for (auto z : f_.defeaters_of(y)) {
            if (has(h, z) || !f_.strictly_defeats(z, y)) continue;
            History next = h;
            set(next, z);
            if (wins(z, next)) return z;
        }
        return std::nullopt;
    }

    StrategyNode strategy(std::size_t x, const History& h) {
        StrategyNode node{Player::Proponent, x, {}};
        for (auto y : f_.defeaters_of(x)) {
            StrategyNode reply{Player::Opponent, y, {}};
            std::size_t z = *answer(y, h);
            History next = h;
            set(next, z);
            reply.children.push_back(strategy(z, next));
            node.children.push_back(std::move(reply));
        }
        return node;
    }
};

inline void strategy_text(const Framework& f, const StrategyNode& n, std::size_t depth, std::string& out) {
    out += std::string(2 * depth, ' ') + (n.player == Player::Proponent ? "P: " : "O: ") + f.label(n.argument) + "\n";
    for (const auto& c : n.children) strategy_text(f, c, depth + 1, out);
}

inline void strategy_dot(const Framework& f, const StrategyNode& n, std::size_t& counter, std::string& out) {
    std::size_t me = counter++;
    out += "  g" + std::to_string(me) + " [label=\"" + (n.player == Player::Proponent ? "P: " : "O: ") +
           dot_escape(f.label(n.argument)) + "\"" + (n.player == Player::Proponent ? "" : ", shape=box") + "];\n";
    for (const auto& c : n.children) {
        std::size_t child = counter;
        strategy_dot(f, c, counter, out);
        out += "  g" + std::to_string(me) + " -> g" + std::to_string(child) + ";\n";
    }
}

}  // namespace detail

// Exhaustive search of the grounded game; memoized on (last proponent move, proponent history).
inline GameOutcome provably_justified(const Framework& f, std::size_t argument) {
    return detail::GroundedGameSolver(f).solve(argument);
}

inline std::string strategy_to_text(const Framework& f, const StrategyNode& root) {
    std::string out;
    detail::strategy_text(f, root, 0, out);
    return out;
}

inline std::string strategy_to_dot(const Framework& f, const StrategyNode& root) {
    std::string out = "digraph strategy {\n";
    std::size_t counter = 0;
    detail::strategy_dot(f, root, counter, out);
    return out + "}\n";
}

}  // namespace argeo
