#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace moveselect {

struct Transition {
    std::string from;
    std::string move;
    std::string to;

    bool operator==(const Transition&) const = default;
};

// A conversational type reduced to its computable core: a deterministic
// labeled transition system over move labels with distinguished initial
// and final states, the ordered question labels of the domain, and a
// per-move conformity table. Values are immutable after load.
struct ConversationalType {
    std::string name;
    std::vector<std::string> states;
    std::string init_state;
    std::vector<std::string> final_states;
    std::vector<Transition> transitions;
    std::vector<std::string> qnud;
    std::map<std::string, double> conformity_overrides; // move label -> d in [-1, 1]

    bool has_state(const std::string& state) const;

    bool operator==(const ConversationalType&) const = default;
};

void validate(const ConversationalType& ct);

// Degree in [-1, 1] to which a move fits the type at the given state.
// An authored override wins; otherwise +1 if a transition for the label
// exists here, -1 if not. Throws validation_error on an unknown state.
double conformity(const ConversationalType& ct, const std::string& move_label,
                  const std::string& current_state);

struct AdvanceResult {
    std::string state;
    bool off_type = false; // no transition matched; the machine stayed put

    bool operator==(const AdvanceResult&) const = default;
};

// Follows the matching transition; an off-type move leaves the state
// unchanged and is flagged rather than rejected, since choosing such a
// move is a modeled outcome.
AdvanceResult advance(const ConversationalType& ct, const std::string& current_state,
                      const std::string& move_label);

bool is_final(const ConversationalType& ct, const std::string& state);

// Probabilistic conjecture over candidate conversational types. The
// active candidate's mass is the Conv-prob p used in scoring.
struct ConvTypeBelief {
    struct Candidate {
        ConversationalType type;
        double probability = 0.0;

        bool operator==(const Candidate&) const = default;
    };

    std::vector<Candidate> candidates;
    std::size_t active_index = 0;

    const ConversationalType& active() const { return candidates[active_index].type; }
    double active_probability() const { return candidates[active_index].probability; }

    bool operator==(const ConvTypeBelief&) const = default;
};

void validate(const ConvTypeBelief& belief);

// One Bayes step: each candidate's mass is multiplied by the likelihood
// clamp((conformity+1)/2, 0.01, 1.0) of the move at that candidate's
// current state, then renormalized. The clamp keeps off-type moves from
// producing absorbing zeros. A state a candidate type does not contain
// counts as fully non-conforming for that candidate. current_states must
// supply one state per candidate; active_index is unchanged.
ConvTypeBelief bayes_update(const ConvTypeBelief& belief, const std::string& move_label,
                            std::span<const std::string> current_states);

} // namespace moveselect
