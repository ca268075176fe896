#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argeo/delp.hpp"
#include "argeo/framework.hpp"
#include "argeo/game.hpp"

namespace argeo {

// Framework node i is DeLP argument i; a defeats b iff a is a proper or blocking defeater of b.
inline Framework delp_framework(const DelpEngine& e, DelpAttack kind = DelpAttack::Rebut) {
    Framework f;
    for (std::size_t i = 0; i < e.size(); ++i) f.add_argument("D" + std::to_string(i + 1));
    for (std::size_t t = 0; t < e.size(); ++t)
        for (std::size_t a = 0; a < e.size(); ++a)
            if (e.defeat(a, t, kind)) f.add_defeat(a, t);
    return f;
}

inline std::vector<std::string> delp_captions(const DelpEngine& e) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e.describe(i));
    return out;
}

struct GrWarrant {
    bool warranted = false;
    std::optional<std::size_t> argument;
    std::optional<StrategyNode> strategy;
};

// Some argument for goal wins the grounded game on the induced framework.
inline GrWarrant warrant_gr(const DelpEngine& e, const Literal& goal, DelpAttack kind = DelpAttack::Rebut) {
    Framework f = delp_framework(e, kind);
    GrWarrant r;
    for (auto a : e.arguments_for(goal)) {
        auto outcome = provably_justified(f, a);
        if (outcome.justified) {
            r.warranted = true;
            r.argument = a;
            r.strategy = std::move(outcome.strategy);
            break;
        }
    }
    return r;
}

}  // namespace argeo
