#include "moveselect/information_state.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "moveselect/errors.hpp"

namespace moveselect {

namespace {

std::shared_ptr<const PrivateState> snapshot(const PrivateState& p) {
    auto copy = std::make_shared<PrivateState>(p);
    copy->tmp.reset();
    return copy;
}

void validate_record(const MoveRecord& record) {
    if (record.label.empty()) {
        throw validation_error("move record needs a nonempty label");
    }
    validate(record.observed);
}

void validate_private(const PrivateState& p) {
    validate(p.self_character);
    validate(p.other_character);
    validate(p.belief);
    validate(p.weights);
    if (!std::isfinite(p.update_rate) || p.update_rate < 0.0 || p.update_rate > 1.0) {
        throw validation_error("update_rate must lie in [0, 1], got " +
                               std::to_string(p.update_rate));
    }
    if (p.tmp) {
        if (p.tmp->tmp) {
            throw validation_error("tmp snapshot must not nest another snapshot");
        }
        validate(p.tmp->self_character);
        validate(p.tmp->other_character);
        validate(p.tmp->belief);
        validate(p.tmp->weights);
    }
}

} // namespace

bool operator==(const PrivateState& a, const PrivateState& b) {
    if (a.self_character != b.self_character || a.other_character != b.other_character ||
        a.goals != b.goals || !(a.belief == b.belief) || a.weights != b.weights ||
        a.update_rate != b.update_rate) {
        return false;
    }
    if (static_cast<bool>(a.tmp) != static_cast<bool>(b.tmp)) return false;
    return !a.tmp || *a.tmp == *b.tmp;
}

void validate(const InformationState& state) {
    if (state.owner.empty() || state.partner.empty()) {
        throw validation_error("information state needs owner and partner names");
    }
    if (state.owner == state.partner) {
        throw validation_error("owner and partner must differ, both are '" + state.owner + "'");
    }
    validate_private(state.priv);
    const Gameboard& dgb = state.dgb;
    if (dgb.utterance_time < 0 ||
        static_cast<std::size_t>(dgb.utterance_time) != dgb.moves.size()) {
        throw validation_error("utterance_time " + std::to_string(dgb.utterance_time) +
                               " does not match " + std::to_string(dgb.moves.size()) +
                               " integrated moves");
    }
    if (!(dgb.speaker.empty() && dgb.addressee.empty()) && dgb.speaker == dgb.addressee) {
        throw validation_error("gameboard speaker and addressee must differ");
    }
    for (const MoveRecord& p : dgb.pending) {
        if (std::find(dgb.moves.begin(), dgb.moves.end(), p) != dgb.moves.end()) {
            throw validation_error("move '" + p.label + "' is both pending and integrated");
        }
    }
    if (!state.priv.belief.active().has_state(state.conv_state)) {
        throw validation_error("conv_state '" + state.conv_state +
                               "' is not a state of the active conversational type");
    }
}

InformationState init_information_state(const std::string& owner, const std::string& partner,
                                        const TraitVector& self, const TraitVector& other_prior,
                                        std::set<std::string> goals, ConvTypeBelief belief,
                                        const Weights& weights, double update_rate) {
    InformationState state;
    state.owner = owner;
    state.partner = partner;
    state.priv.self_character = self;
    state.priv.other_character = other_prior;
    state.priv.goals = std::move(goals);
    state.priv.belief = std::move(belief);
    state.priv.weights = weights;
    state.priv.update_rate = update_rate;
    state.conv_state = state.priv.belief.active().init_state;
    validate(state);
    return state;
}

InformationState integrate_move(const InformationState& state, const MoveRecord& incoming) {
    validate(state);
    validate_record(incoming);

    InformationState next = state;
    next.priv.tmp = snapshot(state.priv);
    next.dgb.moves.insert(next.dgb.moves.begin(), incoming);
    next.dgb.utterance_time += 1;
    next.dgb.speaker = state.partner;
    next.dgb.addressee = state.owner;
    next.priv.other_character =
        ema_update(state.priv.other_character, incoming.observed, state.priv.update_rate);
    const std::vector<std::string> per_candidate(state.priv.belief.candidates.size(),
                                                 state.conv_state);
    next.priv.belief = bayes_update(state.priv.belief, incoming.label, per_candidate);
    next.conv_state =
        advance(next.priv.belief.active(), state.conv_state, incoming.label).state;
    return next;
}

InformationState record_own_move(const InformationState& state, const MoveRecord& own) {
    validate(state);
    validate_record(own);

    InformationState next = state;
    next.dgb.moves.insert(next.dgb.moves.begin(), own);
    next.dgb.utterance_time += 1;
    next.dgb.speaker = state.owner;
    next.dgb.addressee = state.partner;
    next.conv_state =
        advance(state.priv.belief.active(), state.conv_state, own.label).state;
    return next;
}

InformationState rollback_to_tmp(const InformationState& state) {
    if (!state.priv.tmp) {
        throw validation_error("rollback requested but no tmp snapshot is present");
    }
    InformationState next = state;
    next.priv = *state.priv.tmp;
    return next;
}

} // namespace moveselect
