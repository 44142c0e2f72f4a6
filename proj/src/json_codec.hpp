#pragma once

// ADL hooks for nlohmann::json over the core types. Internal to the
// library sources; the public surface hands out strings.

#include <json.hpp>

#include "moveselect/conv_type.hpp"
#include "moveselect/decision.hpp"
#include "moveselect/estimate.hpp"
#include "moveselect/information_state.hpp"
#include "moveselect/sim.hpp"

namespace moveselect {

void to_json(nlohmann::json& j, const TraitVector& v);
void from_json(const nlohmann::json& j, TraitVector& v);

void to_json(nlohmann::json& j, const Transition& t);
void from_json(const nlohmann::json& j, Transition& t);

void to_json(nlohmann::json& j, const ConversationalType& ct);
void from_json(const nlohmann::json& j, ConversationalType& ct);

void to_json(nlohmann::json& j, const ConvTypeBelief& belief);
void from_json(const nlohmann::json& j, ConvTypeBelief& belief);

void to_json(nlohmann::json& j, const Weights& w);
void from_json(const nlohmann::json& j, Weights& w);

void to_json(nlohmann::json& j, const MoveCandidate& m);
void from_json(const nlohmann::json& j, MoveCandidate& m);

void to_json(nlohmann::json& j, const DecisionFactors& f);
void from_json(const nlohmann::json& j, DecisionFactors& f);

void to_json(nlohmann::json& j, const ScoredMove& s);
void from_json(const nlohmann::json& j, ScoredMove& s);

void to_json(nlohmann::json& j, const MoveRecord& r);
void from_json(const nlohmann::json& j, MoveRecord& r);

void to_json(nlohmann::json& j, const Gameboard& g);
void from_json(const nlohmann::json& j, Gameboard& g);

void to_json(nlohmann::json& j, const PrivateState& p);
void from_json(const nlohmann::json& j, PrivateState& p);

void to_json(nlohmann::json& j, const InformationState& s);
void from_json(const nlohmann::json& j, InformationState& s);

void to_json(nlohmann::json& j, const Observation& o);
void from_json(const nlohmann::json& j, Observation& o);

void to_json(nlohmann::json& j, const FitResult& r);
void from_json(const nlohmann::json& j, FitResult& r);

void to_json(nlohmann::json& j, const TraceEvent& e);
void from_json(const nlohmann::json& j, TraceEvent& e);

} // namespace moveselect
