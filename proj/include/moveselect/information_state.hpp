#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "moveselect/conv_type.hpp"
#include "moveselect/decision.hpp"
#include "moveselect/trait_vector.hpp"

namespace moveselect {

// A dialogue move as it lands on the gameboard: its label, surface text,
// and the trait vector an external predictor attached to it.
struct MoveRecord {
    std::string label;
    std::string text;
    TraitVector observed;

    bool operator==(const MoveRecord&) const = default;
};

// The public part of the state: who spoke last to whom, what has been
// established, and which moves have landed. `moves` is ordered most
// recent first; `utterance_time` always equals its length.
struct Gameboard {
    std::string speaker;
    std::string addressee;
    int utterance_time = 0;
    std::set<std::string> facts;
    std::vector<MoveRecord> pending;
    std::vector<MoveRecord> moves;
    std::vector<std::string> qud;

    bool operator==(const Gameboard&) const = default;
};

// The private part: character estimates, goals, the conversational-type
// belief, the SelfMonitor weights, and a depth-1 backup (tmp) of the
// previous private state.
struct PrivateState {
    TraitVector self_character;
    TraitVector other_character;
    std::set<std::string> goals;
    std::shared_ptr<const PrivateState> tmp; // snapshot; its own tmp is always empty
    ConvTypeBelief belief;
    Weights weights;
    double update_rate = 0.5;
};

bool operator==(const PrivateState& a, const PrivateState& b);
inline bool operator!=(const PrivateState& a, const PrivateState& b) { return !(a == b); }

// One participant's total state. `owner` holds this state; `partner` is
// the interlocutor. conv_state tracks the position within the active
// conversational type.
struct InformationState {
    std::string owner;
    std::string partner;
    PrivateState priv;
    Gameboard dgb;
    std::string conv_state;

    bool operator==(const InformationState&) const = default;
};

void validate(const InformationState& state);

// Assembles a fresh state: empty gameboard, utterance_time 0, conv_state
// at the active type's init state, no tmp snapshot.
InformationState init_information_state(const std::string& owner, const std::string& partner,
                                        const TraitVector& self, const TraitVector& other_prior,
                                        std::set<std::string> goals, ConvTypeBelief belief,
                                        const Weights& weights, double update_rate);

// Integrates a move made by the partner. Fixed order:
//   1. tmp := snapshot of the current private state
//   2. move lands on dgb.moves, utterance_time advances
//   3. other_character := ema_update(other_character, observed, rate)
//   4. belief := bayes_update at the current conv_state
//   5. conv_state := advance(active type, conv_state, label)
// Snapshot-first makes tmp mean exactly "the previous private state".
// Unknown move labels follow the off-type path; a structurally invalid
// record is rejected.
InformationState integrate_move(const InformationState& state, const MoveRecord& incoming);

// Books the owner's own move: it lands on dgb.moves and conv_state
// advances, but character estimates, belief, and tmp stay put. The
// self character is intrinsic, and revising one's own private state
// after an off-type move of one's own is out of scope.
InformationState record_own_move(const InformationState& state, const MoveRecord& own);

// Restores the private part from tmp (which is then absent); the
// gameboard and conv_state are untouched. Throws validation_error when
// no snapshot is available.
InformationState rollback_to_tmp(const InformationState& state);

} // namespace moveselect
