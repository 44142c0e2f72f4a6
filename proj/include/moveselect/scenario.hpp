#pragma once

#include <string>

#include "moveselect/sim.hpp"

namespace moveselect {

// Parses and semantically validates a version-1 scenario document.
// Diagnostics address the offending field ("/agents/0/weights"); JSON
// parse failures report the line instead. Unknown fields are rejected,
// so a typo cannot silently fall back to a default.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario(const std::string& path);

// Selector helpers shared by the tool and the python module. An empty
// name means the first agent; an empty state means the active type's
// init state. Unknown selectors throw validation_error.
const AgentSpec& scenario_agent(const Scenario& scenario, const std::string& name = "");
std::string scenario_state(const Scenario& scenario, const std::string& state = "");

// Scores the authored move space at (agent, state) from the agent's
// initial parameters: self vector, other prior, and the active type's
// prior mass as p.
ScoredMoveSpace initial_score(const Scenario& scenario, const std::string& agent = "",
                              const std::string& state = "");
std::vector<DecisionFactors> initial_factors(const Scenario& scenario,
                                             const std::string& agent = "",
                                             const std::string& state = "");

} // namespace moveselect
