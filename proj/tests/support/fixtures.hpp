#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "argeo/argeo.hpp"

namespace argeo::testing {

inline std::string fixture_path(const std::string& name) { return std::string(ARGEO_FIXTURE_DIR) + "/" + name + ".dlp"; }

inline Program fixture(const std::string& name) { return load_program(fixture_path(name)); }

inline std::vector<std::string> fixture_names() {
    return {"aspic_running",          "blocking_order1", "blocking_order2", "closure_counterexample",
            "crossover",              "empty",           "interfering_concordance", "last_link",
            "married_john",           "nonadmissible_warrant", "subargument_grounded", "surf",
            "tandem"};
}

// The DeLP argument with exactly these rule ids and this conclusion.
inline std::size_t delp_arg(const DelpEngine& e, const std::vector<std::string>& ids, const std::string& conclusion) {
    auto a = e.find(e.program().rule_set(ids), Literal::parse(conclusion));
    if (!a) throw std::logic_error("no DeLP argument for " + conclusion);
    return *a;
}

// The unique ASPIC+ argument concluding this literal.
inline ArgumentId aspic_arg(const AspicTheory& t, const std::string& conclusion) {
    auto ids = t.arguments_for(Literal::parse(conclusion));
    if (ids.size() != 1) throw std::logic_error("expected one ASPIC+ argument for " + conclusion);
    return ids.front();
}

inline bool contains(const Extension& e, std::size_t a) { return std::find(e.begin(), e.end(), a) != e.end(); }

}  // namespace argeo::testing
