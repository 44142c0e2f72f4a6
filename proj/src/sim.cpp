#include "moveselect/sim.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "moveselect/errors.hpp"

namespace moveselect {

void validate(const Scenario& scenario) {
    if (scenario.conv_types.empty()) {
        throw validation_error("scenario needs at least one conversational type");
    }
    for (const ConversationalType& t : scenario.conv_types) validate(t);
    if (scenario.priors.size() != scenario.conv_types.size()) {
        throw validation_error("scenario has " + std::to_string(scenario.priors.size()) +
                               " priors for " + std::to_string(scenario.conv_types.size()) +
                               " conversational types");
    }
    validate(scenario_belief(scenario));
    if (scenario.agents.size() != 2) {
        throw validation_error("scenario needs exactly two agents, got " +
                               std::to_string(scenario.agents.size()));
    }
    if (scenario.agents[0].name == scenario.agents[1].name) {
        throw validation_error("agents must have distinct names, both are '" +
                               scenario.agents[0].name + "'");
    }
    for (const AgentSpec& agent : scenario.agents) {
        if (agent.name.empty()) throw validation_error("agent needs a nonempty name");
        validate(agent.self);
        validate(agent.other_prior);
        validate(agent.weights);
        if (!std::isfinite(agent.update_rate) || agent.update_rate < 0.0 ||
            agent.update_rate > 1.0) {
            throw validation_error("update_rate of agent '" + agent.name +
                                   "' must lie in [0, 1]");
        }
    }
    if (scenario.opening_agent != scenario.agents[0].name &&
        scenario.opening_agent != scenario.agents[1].name) {
        throw validation_error("opening agent '" + scenario.opening_agent +
                               "' is not one of the scenario's agents");
    }
    if (scenario.opening_move.label.empty()) {
        throw validation_error("opening move needs a nonempty label");
    }
    validate(scenario.opening_move.observed);
    const ConversationalType& active = scenario.conv_types[scenario.active_index];
    for (const auto& [key, moves] : scenario.move_spaces) {
        const auto& [agent, state] = key;
        if (agent != scenario.agents[0].name && agent != scenario.agents[1].name) {
            throw validation_error("move space references unknown agent '" + agent + "'");
        }
        if (!active.has_state(state)) {
            throw validation_error("move space references state '" + state +
                                   "' absent from the active type '" + active.name + "'");
        }
        if (moves.empty()) {
            throw validation_error("move space for (" + agent + ", " + state +
                                   ") is empty; omit the entry instead");
        }
        for (const MoveCandidate& move : moves) validate(move);
    }
    if (scenario.max_turns < 1) {
        throw validation_error("max_turns must be at least 1, got " +
                               std::to_string(scenario.max_turns));
    }
}

ConvTypeBelief scenario_belief(const Scenario& scenario) {
    ConvTypeBelief belief;
    belief.candidates.reserve(scenario.conv_types.size());
    for (std::size_t i = 0; i < scenario.conv_types.size(); ++i) {
        belief.candidates.push_back({scenario.conv_types[i],
                                     i < scenario.priors.size() ? scenario.priors[i] : 0.0});
    }
    belief.active_index = scenario.active_index;
    return belief;
}

const std::vector<MoveCandidate>* find_move_space(const Scenario& scenario,
                                                  const std::string& agent,
                                                  const std::string& state) {
    const auto it = scenario.move_spaces.find({agent, state});
    return it == scenario.move_spaces.end() ? nullptr : &it->second;
}

namespace {

// Distinct engine seed per (policy seed, turn); golden-ratio increment
// keeps consecutive turns far apart in seed space.
std::uint64_t turn_seed(std::uint64_t base, int turn) {
    return base ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(turn) + 1));
}

Trace run_loop(const Scenario& scenario,
               const std::optional<std::span<const std::size_t>>& forced) {
    validate(scenario);

    InformationState states[2];
    for (int i = 0; i < 2; ++i) {
        const AgentSpec& spec = scenario.agents[i];
        const AgentSpec& other = scenario.agents[1 - i];
        states[i] = init_information_state(spec.name, other.name, spec.self, spec.other_prior,
                                           spec.goals, scenario_belief(scenario), spec.weights,
                                           spec.update_rate);
    }

    const int opener = scenario.opening_agent == scenario.agents[0].name ? 0 : 1;
    states[opener] = record_own_move(states[opener], scenario.opening_move);

    Trace trace;
    MoveRecord incoming = scenario.opening_move;
    int actor = 1 - opener;
    for (int turn = 0;; ++turn, actor = 1 - actor) {
        if (turn >= scenario.max_turns) {
            trace.termination = Termination::turn_limit;
            break;
        }
        states[actor] = integrate_move(states[actor], incoming);
        if (is_final(states[actor].priv.belief.active(), states[actor].conv_state)) {
            trace.termination = Termination::final_state;
            break;
        }
        const AgentSpec& spec = scenario.agents[actor];
        const std::vector<MoveCandidate>* moves =
            find_move_space(scenario, spec.name, states[actor].conv_state);
        if (moves == nullptr) {
            trace.termination = Termination::empty_move_space;
            break;
        }
        const PrivateState& priv = states[actor].priv;
        const ScoredMoveSpace space = score_space(*moves, priv.self_character,
                                                  priv.other_character,
                                                  priv.belief.active_probability(),
                                                  priv.weights);
        std::size_t selected = 0;
        if (forced) {
            if (static_cast<std::size_t>(turn) >= forced->size()) {
                throw validation_error("replay ran out of forced selections at turn " +
                                       std::to_string(turn));
            }
            selected = (*forced)[turn];
            if (selected >= space.size()) {
                std::ostringstream msg;
                msg << "forced selection " << selected << " out of range for "
                    << space.size() << " moves at turn " << turn;
                throw validation_error(msg.str());
            }
        } else if (spec.policy.kind == Policy::Kind::argmax) {
            selected = select_argmax(space);
        } else {
            selected = select_sample(space, turn_seed(spec.policy.seed, turn));
        }

        const MoveCandidate& pick = space.entries[selected].candidate;
        const MoveRecord own{pick.label, pick.text, pick.vector};
        const double conv_prob = priv.belief.active_probability();
        const TraitVector other_character = priv.other_character;
        states[actor] = record_own_move(states[actor], own);

        trace.events.push_back({turn, spec.name, space, selected, states[actor].conv_state,
                                conv_prob, other_character});
        if (is_final(states[actor].priv.belief.active(), states[actor].conv_state)) {
            trace.termination = Termination::final_state;
            break;
        }
        incoming = own;
    }

    trace.final_states = {states[0], states[1]};
    return trace;
}

} // namespace

Trace run(const Scenario& scenario) { return run_loop(scenario, std::nullopt); }

Trace replay(const Scenario& scenario, std::span<const std::size_t> selections) {
    return run_loop(scenario, selections);
}

} // namespace moveselect
