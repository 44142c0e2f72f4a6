#pragma once

// Shared constants for the four-move bakery space and the three weight
// regimes exercised throughout the suite.

#include <string>
#include <vector>

#include "moveselect/conv_type.hpp"
#include "moveselect/decision.hpp"
#include "moveselect/trait_vector.hpp"

namespace fixtures {

inline moveselect::TraitVector vec(double o, double c, double e, double a, double n) {
    return {o, c, e, a, n};
}

inline const moveselect::TraitVector kSelfRegime1 = vec(0.0, 0.3, 0.0, 0.0, 0.5);
inline const moveselect::TraitVector kSelfRegime2 = vec(0.5, 0.7, 0.3, 0.8, -0.5);
inline const moveselect::TraitVector kSelfRegime3 = vec(0.2, -0.3, 0.0, -0.5, 0.8);
inline const moveselect::TraitVector kOtherChar = vec(0.0, 0.0, -0.1, -0.4, 0.2);
inline constexpr double kConvProb = 0.98;

inline moveselect::Weights weights(double a, double b, double g) { return {a, b, g}; }

inline const moveselect::Weights kWeightsRegime1 = weights(0.1, 0.1, 0.8);
inline const moveselect::Weights kWeightsRegime2 = weights(0.3, 0.1, 0.6);
inline const moveselect::Weights kWeightsRegime3 = weights(0.8, 0.1, 0.1);

// The baker's four candidate responses with their predicted trait
// vectors and conformity degrees.
inline std::vector<moveselect::MoveCandidate> bakery_moves() {
    return {
        {"give-price", "That makes 1.90, please.", vec(0.0, 0.0, -0.1, -0.4, 0.2), 0.8},
        {"refuse", "We are out of croissants.", vec(0.3, -0.5, 0.0, -0.7, 0.8), -1.0},
        {"smalltalk", "Lovely weather today, no?", vec(0.2, 0.0, 0.3, 0.7, -0.2), 0.3},
        {"upsell", "May I suggest our brioche as well?", vec(0.5, 0.6, 0.4, 0.7, -0.4), 0.7},
    };
}

// Recomputed scores for regime 1; the second entry is the recomputation
// where the printed source value does not follow from its own inputs.
inline const std::vector<double> kRhoRegime1 = {0.7646, -0.6694, 0.1201, 0.4727};
inline const std::vector<double> kRhoRegime3 = {0.8007, 0.7652, -0.5229, -0.5032};

inline moveselect::ConversationalType bakery_type() {
    moveselect::ConversationalType ct;
    ct.name = "bakery";
    ct.states = {"order", "awaiting-payment", "paid", "done"};
    ct.init_state = "order";
    ct.final_states = {"done"};
    ct.transitions = {
        {"order", "request-croissants", "order"},
        {"order", "give-price", "awaiting-payment"},
        {"awaiting-payment", "pay", "paid"},
        {"paid", "thank", "done"},
    };
    ct.qnud = {"what-is-ordered", "what-is-owed", "is-paid"};
    ct.conformity_overrides = {{"give-price", 0.8}, {"smalltalk", 0.3}, {"upsell", 0.7}};
    return ct;
}

inline moveselect::ConversationalType single_state_type(const std::string& name) {
    moveselect::ConversationalType ct;
    ct.name = name;
    ct.states = {"idle"};
    ct.init_state = "idle";
    ct.final_states = {"idle"};
    return ct;
}

inline moveselect::ConvTypeBelief bakery_belief() {
    moveselect::ConvTypeBelief belief;
    belief.candidates.push_back({bakery_type(), kConvProb});
    belief.candidates.push_back({single_state_type("chitchat"), 1.0 - kConvProb});
    belief.active_index = 0;
    return belief;
}

} // namespace fixtures
