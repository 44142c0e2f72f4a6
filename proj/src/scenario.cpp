#include "moveselect/scenario.hpp"

#include <initializer_list>
#include <string>
#include <utility>

#include "json_codec.hpp"
#include "moveselect/errors.hpp"
#include "moveselect/serialize.hpp"

namespace moveselect {

using nlohmann::json;

namespace {

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    const std::size_t stop = std::min(byte, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw schema_error(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) {
        throw schema_error(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

template <typename T>
T get_as(const json& j, const std::string& path) {
    try {
        return j.get<T>();
    } catch (const schema_error& e) {
        throw schema_error(path, e.what());
    } catch (const json::exception& e) {
        throw schema_error(path, e.what());
    }
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& path) {
    for (const auto& item : j.items()) {
        bool found = false;
        for (const char* key : known) {
            if (item.key() == key) {
                found = true;
                break;
            }
        }
        if (!found) throw schema_error(path + "/" + item.key(), "unknown field");
    }
}

Policy parse_policy(const json& j, const std::string& path) {
    Policy policy;
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "argmax") return policy;
        if (name == "sample") {
            throw schema_error(path, "sample policy needs a seed: {\"sample\": {\"seed\": N}}");
        }
        throw schema_error(path, "unknown policy '" + name + "'");
    }
    if (j.is_object() && j.contains("sample")) {
        reject_unknown(j, {"sample"}, path);
        const json& sample = j.at("sample");
        reject_unknown(sample, {"seed"}, path + "/sample");
        policy.kind = Policy::Kind::sample;
        policy.seed = get_as<std::uint64_t>(require(sample, "seed", path + "/sample"),
                                            path + "/sample/seed");
        return policy;
    }
    throw schema_error(path, "policy must be \"argmax\" or {\"sample\": {\"seed\": N}}");
}

MoveRecord parse_move_record(const json& j, const std::string& path) {
    reject_unknown(j, {"label", "text", "observed"}, path);
    MoveRecord record;
    record.label = get_as<std::string>(require(j, "label", path), path + "/label");
    if (j.contains("text")) record.text = get_as<std::string>(j.at("text"), path + "/text");
    record.observed =
        get_as<TraitVector>(require(j, "observed", path), path + "/observed");
    return record;
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error("line " + std::to_string(line_of_byte(text, e.byte)), e.what());
    }
    if (!doc.is_object()) throw schema_error("", "scenario document must be an object");
    reject_unknown(doc,
                   {"version", "conv_types", "active_type", "agents", "opening", "move_spaces",
                    "max_turns", "normalize_weights"},
                   "");
    const int version = get_as<int>(require(doc, "version", ""), "/version");
    if (version != 1) {
        throw schema_error("/version", "unsupported version " + std::to_string(version));
    }
    const bool normalize_weights =
        doc.contains("normalize_weights") &&
        get_as<bool>(doc.at("normalize_weights"), "/normalize_weights");

    Scenario scenario;

    const json& types = require(doc, "conv_types", "");
    if (!types.is_array() || types.empty()) {
        throw schema_error("/conv_types", "expected a nonempty array");
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
        const std::string path = "/conv_types/" + std::to_string(i);
        const json& entry = types[i];
        reject_unknown(entry,
                       {"name", "states", "init", "finals", "transitions", "qnud", "conformity",
                        "prior"},
                       path);
        require(entry, "name", path);
        require(entry, "states", path);
        require(entry, "init", path);
        require(entry, "finals", path);
        scenario.conv_types.push_back(get_as<ConversationalType>(entry, path));
        scenario.priors.push_back(
            get_as<double>(require(entry, "prior", path), path + "/prior"));
    }

    const std::string active =
        get_as<std::string>(require(doc, "active_type", ""), "/active_type");
    bool active_found = false;
    for (std::size_t i = 0; i < scenario.conv_types.size(); ++i) {
        if (scenario.conv_types[i].name == active) {
            scenario.active_index = i;
            active_found = true;
            break;
        }
    }
    if (!active_found) {
        throw schema_error("/active_type", "no conversational type named '" + active + "'");
    }

    const json& agents = require(doc, "agents", "");
    if (!agents.is_array() || agents.size() != 2) {
        throw schema_error("/agents", "expected exactly two agents");
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const std::string path = "/agents/" + std::to_string(i);
        const json& entry = agents[i];
        reject_unknown(entry,
                       {"name", "self", "other_prior", "weights", "update_rate", "goals",
                        "policy"},
                       path);
        AgentSpec spec;
        spec.name = get_as<std::string>(require(entry, "name", path), path + "/name");
        spec.self = get_as<TraitVector>(require(entry, "self", path), path + "/self");
        spec.other_prior =
            get_as<TraitVector>(require(entry, "other_prior", path), path + "/other_prior");
        spec.weights = get_as<Weights>(require(entry, "weights", path), path + "/weights");
        if (normalize_weights) {
            try {
                spec.weights = normalized(spec.weights);
            } catch (const validation_error& e) {
                throw schema_error(path + "/weights", e.what());
            }
        }
        if (entry.contains("update_rate")) {
            spec.update_rate = get_as<double>(entry.at("update_rate"), path + "/update_rate");
        }
        if (entry.contains("goals")) {
            spec.goals = get_as<std::set<std::string>>(entry.at("goals"), path + "/goals");
        }
        if (entry.contains("policy")) {
            spec.policy = parse_policy(entry.at("policy"), path + "/policy");
        }
        scenario.agents.push_back(std::move(spec));
    }

    const json& opening = require(doc, "opening", "");
    reject_unknown(opening, {"agent", "move"}, "/opening");
    scenario.opening_agent =
        get_as<std::string>(require(opening, "agent", "/opening"), "/opening/agent");
    scenario.opening_move =
        parse_move_record(require(opening, "move", "/opening"), "/opening/move");

    const ConversationalType& active_type = scenario.conv_types[scenario.active_index];
    const json& spaces = require(doc, "move_spaces", "");
    if (!spaces.is_array()) throw schema_error("/move_spaces", "expected an array");
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const std::string path = "/move_spaces/" + std::to_string(i);
        const json& entry = spaces[i];
        reject_unknown(entry, {"agent", "state", "moves"}, path);
        const auto agent =
            get_as<std::string>(require(entry, "agent", path), path + "/agent");
        const auto state =
            get_as<std::string>(require(entry, "state", path), path + "/state");
        if (!active_type.has_state(state)) {
            throw schema_error(path + "/state", "state '" + state +
                                                   "' is not part of the active type '" +
                                                   active_type.name + "'");
        }
        if (scenario.move_spaces.count({agent, state}) != 0) {
            throw schema_error(path, "duplicate move space for (" + agent + ", " + state + ")");
        }
        const json& moves = require(entry, "moves", path);
        if (!moves.is_array() || moves.empty()) {
            throw schema_error(path + "/moves", "expected a nonempty array");
        }
        std::vector<MoveCandidate> parsed;
        for (std::size_t m = 0; m < moves.size(); ++m) {
            const std::string move_path = path + "/moves/" + std::to_string(m);
            json move = moves[m];
            reject_unknown(move, {"label", "text", "vector", "conformity"}, move_path);
            const auto label =
                get_as<std::string>(require(move, "label", move_path), move_path + "/label");
            require(move, "vector", move_path);
            if (!move.contains("conformity")) {
                // absent conformity falls back to the active type's verdict
                move["conformity"] = conformity(active_type, label, state);
            }
            parsed.push_back(get_as<MoveCandidate>(move, move_path));
        }
        scenario.move_spaces.emplace(std::make_pair(agent, state), std::move(parsed));
    }

    scenario.max_turns = get_as<int>(require(doc, "max_turns", ""), "/max_turns");

    validate(scenario);
    return scenario;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

const AgentSpec& scenario_agent(const Scenario& scenario, const std::string& name) {
    if (name.empty()) return scenario.agents.at(0);
    for (const AgentSpec& agent : scenario.agents) {
        if (agent.name == name) return agent;
    }
    throw validation_error("no agent named '" + name + "' in the scenario");
}

std::string scenario_state(const Scenario& scenario, const std::string& state) {
    const ConversationalType& active = scenario.conv_types[scenario.active_index];
    if (state.empty()) return active.init_state;
    if (!active.has_state(state)) {
        throw validation_error("state '" + state + "' is not part of the active type '" +
                               active.name + "'");
    }
    return state;
}

namespace {

const std::vector<MoveCandidate>& space_at(const Scenario& scenario, const std::string& agent,
                                           const std::string& state) {
    const std::vector<MoveCandidate>* moves = find_move_space(scenario, agent, state);
    if (moves == nullptr) {
        throw validation_error("no move space authored for (" + agent + ", " + state + ")");
    }
    return *moves;
}

} // namespace

ScoredMoveSpace initial_score(const Scenario& scenario, const std::string& agent,
                              const std::string& state) {
    const AgentSpec& spec = scenario_agent(scenario, agent);
    const std::string at = scenario_state(scenario, state);
    return score_space(space_at(scenario, spec.name, at), spec.self, spec.other_prior,
                       scenario.priors[scenario.active_index], spec.weights);
}

std::vector<DecisionFactors> initial_factors(const Scenario& scenario, const std::string& agent,
                                             const std::string& state) {
    const AgentSpec& spec = scenario_agent(scenario, agent);
    const std::string at = scenario_state(scenario, state);
    std::vector<DecisionFactors> rows;
    for (const MoveCandidate& move : space_at(scenario, spec.name, at)) {
        rows.push_back(decision_factors(move, spec.self, spec.other_prior,
                                        scenario.priors[scenario.active_index]));
    }
    return rows;
}

} // namespace moveselect
