#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moveselect/conv_type.hpp"
#include "moveselect/decision.hpp"
#include "moveselect/information_state.hpp"

namespace moveselect {

struct Policy {
    enum class Kind { argmax, sample };
    Kind kind = Kind::argmax;
    std::uint64_t seed = 0; // used by sample only

    bool operator==(const Policy&) const = default;
};

// Everything needed to assemble one agent's initial information state,
// plus how it picks from a scored space.
struct AgentSpec {
    std::string name;
    TraitVector self;
    TraitVector other_prior;
    Weights weights;
    double update_rate = 0.5;
    std::set<std::string> goals;
    Policy policy;

    bool operator==(const AgentSpec&) const = default;
};

// A scripted two-agent setup. Move spaces are authored per (agent,
// conv_state); a reachable pair with no authored space ends the run
// with reason empty-move-space rather than raising, since off-type
// drift is a modeled outcome.
struct Scenario {
    std::vector<ConversationalType> conv_types;
    std::vector<double> priors; // aligned with conv_types
    std::size_t active_index = 0;
    std::vector<AgentSpec> agents; // exactly two
    std::string opening_agent;
    MoveRecord opening_move;
    std::map<std::pair<std::string, std::string>, std::vector<MoveCandidate>> move_spaces;
    int max_turns = 1;

    bool operator==(const Scenario&) const = default;
};

void validate(const Scenario& scenario);

ConvTypeBelief scenario_belief(const Scenario& scenario);

// Null when no space is authored for the pair.
const std::vector<MoveCandidate>* find_move_space(const Scenario& scenario,
                                                  const std::string& agent,
                                                  const std::string& state);

// One selected move. conv_prob and other_character are the actor's view
// right after integrating the incoming move (its own move changes
// neither); conv_state is where the actor's own move landed.
struct TraceEvent {
    int turn = 0;
    std::string agent;
    ScoredMoveSpace space;
    std::size_t selected = 0;
    std::string conv_state;
    double conv_prob = 0.0;
    TraitVector other_character;

    bool operator==(const TraceEvent&) const = default;
};

enum class Termination { final_state, turn_limit, empty_move_space };

struct Trace {
    std::vector<TraceEvent> events;
    Termination termination = Termination::turn_limit;
    std::vector<InformationState> final_states; // scenario agent order

    bool operator==(const Trace&) const = default;
};

// Runs the scenario to termination: each turn the listener integrates
// the incoming move, scores its space at the current conv_state, picks
// per its policy, and answers. Deterministic given the scenario (sample
// policies mix their seed with the turn index).
Trace run(const Scenario& scenario);

// Same loop with the per-turn selections forced instead of drawn from
// the policy; used to check trace self-consistency. Throws when a forced
// index is out of range or the list is shorter than the run.
Trace replay(const Scenario& scenario, std::span<const std::size_t> selections);

} // namespace moveselect
