#include "moveselect/conv_type.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "moveselect/errors.hpp"

namespace moveselect {

namespace {

void require_state(const ConversationalType& ct, const std::string& state) {
    if (!ct.has_state(state)) {
        throw validation_error("unknown state '" + state + "' in conversational type '" +
                               ct.name + "'");
    }
}

} // namespace

bool ConversationalType::has_state(const std::string& state) const {
    return std::find(states.begin(), states.end(), state) != states.end();
}

void validate(const ConversationalType& ct) {
    if (ct.name.empty()) throw validation_error("conversational type has empty name");
    if (ct.states.empty()) {
        throw validation_error("conversational type '" + ct.name + "' has no states");
    }
    std::set<std::string> seen(ct.states.begin(), ct.states.end());
    if (seen.size() != ct.states.size()) {
        throw validation_error("conversational type '" + ct.name + "' lists a duplicate state");
    }
    if (!ct.has_state(ct.init_state)) {
        throw validation_error("init state '" + ct.init_state + "' not among states of '" +
                               ct.name + "'");
    }
    if (ct.final_states.empty()) {
        throw validation_error("conversational type '" + ct.name + "' has no final states");
    }
    for (const auto& s : ct.final_states) {
        if (!ct.has_state(s)) {
            throw validation_error("final state '" + s + "' not among states of '" + ct.name + "'");
        }
    }
    std::set<std::pair<std::string, std::string>> keys;
    for (const auto& t : ct.transitions) {
        if (!ct.has_state(t.from)) {
            throw validation_error("transition from unknown state '" + t.from + "' in '" +
                                   ct.name + "'");
        }
        if (!ct.has_state(t.to)) {
            throw validation_error("transition to unknown state '" + t.to + "' in '" + ct.name +
                                   "'");
        }
        if (!keys.insert({t.from, t.move}).second) {
            throw validation_error("duplicate transition (" + t.from + ", " + t.move + ") in '" +
                                   ct.name + "': machine must be deterministic");
        }
    }
    for (const auto& [label, d] : ct.conformity_overrides) {
        if (!std::isfinite(d) || d < -1.0 || d > 1.0) {
            std::ostringstream msg;
            msg << "conformity override for '" << label << "' out of range [-1, 1]: " << d;
            throw validation_error(msg.str());
        }
    }
}

double conformity(const ConversationalType& ct, const std::string& move_label,
                  const std::string& current_state) {
    require_state(ct, current_state);
    if (auto it = ct.conformity_overrides.find(move_label); it != ct.conformity_overrides.end()) {
        return it->second;
    }
    for (const auto& t : ct.transitions) {
        if (t.from == current_state && t.move == move_label) return 1.0;
    }
    return -1.0;
}

AdvanceResult advance(const ConversationalType& ct, const std::string& current_state,
                      const std::string& move_label) {
    require_state(ct, current_state);
    for (const auto& t : ct.transitions) {
        if (t.from == current_state && t.move == move_label) return {t.to, false};
    }
    return {current_state, true};
}

bool is_final(const ConversationalType& ct, const std::string& state) {
    require_state(ct, state);
    return std::find(ct.final_states.begin(), ct.final_states.end(), state) !=
           ct.final_states.end();
}

void validate(const ConvTypeBelief& belief) {
    if (belief.candidates.empty()) {
        throw validation_error("conversational type belief has no candidates");
    }
    double sum = 0.0;
    for (const auto& c : belief.candidates) {
        validate(c.type);
        if (!std::isfinite(c.probability) || c.probability < 0.0 || c.probability > 1.0) {
            std::ostringstream msg;
            msg << "candidate probability for '" << c.type.name << "' out of range [0, 1]: "
                << c.probability;
            throw validation_error(msg.str());
        }
        sum += c.probability;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "candidate probabilities sum to " << sum << ", expected 1 within 1e-9";
        throw validation_error(msg.str());
    }
    if (belief.active_index >= belief.candidates.size()) {
        throw validation_error("active candidate index out of range");
    }
}

ConvTypeBelief bayes_update(const ConvTypeBelief& belief, const std::string& move_label,
                            std::span<const std::string> current_states) {
    if (current_states.size() != belief.candidates.size()) {
        std::ostringstream msg;
        msg << "bayes_update needs one current state per candidate: got "
            << current_states.size() << " states for " << belief.candidates.size()
            << " candidates";
        throw validation_error(msg.str());
    }
    ConvTypeBelief out = belief;
    double total = 0.0;
    for (std::size_t i = 0; i < out.candidates.size(); ++i) {
        auto& cand = out.candidates[i];
        const double d = cand.type.has_state(current_states[i])
                             ? conformity(cand.type, move_label, current_states[i])
                             : -1.0;
        const double likelihood = std::clamp((d + 1.0) / 2.0, 0.01, 1.0);
        cand.probability *= likelihood;
        total += cand.probability;
    }
    // total > 0: priors sum to 1 and every likelihood is at least 0.01.
    for (auto& cand : out.candidates) cand.probability /= total;
    return out;
}

} // namespace moveselect
