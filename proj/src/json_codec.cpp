#include "json_codec.hpp"

#include <array>
#include <memory>

#include "moveselect/errors.hpp"

namespace moveselect {

using nlohmann::json;

void to_json(json& j, const TraitVector& v) { j = v.components(); }

void from_json(const json& j, TraitVector& v) {
    if (!j.is_array() || j.size() != kTraitCount) {
        throw schema_error("", "trait vector must be an array of 5 numbers");
    }
    std::array<double, kTraitCount> c{};
    for (std::size_t i = 0; i < kTraitCount; ++i) c[i] = j[i].get<double>();
    v = TraitVector::from_components(c);
}

void to_json(json& j, const Transition& t) {
    j = json{{"from", t.from}, {"move", t.move}, {"to", t.to}};
}

void from_json(const json& j, Transition& t) {
    j.at("from").get_to(t.from);
    j.at("move").get_to(t.move);
    j.at("to").get_to(t.to);
}

void to_json(json& j, const ConversationalType& ct) {
    j = json{{"name", ct.name},           {"states", ct.states},
             {"init", ct.init_state},     {"finals", ct.final_states},
             {"transitions", ct.transitions}, {"qnud", ct.qnud},
             {"conformity", ct.conformity_overrides}};
}

void from_json(const json& j, ConversationalType& ct) {
    j.at("name").get_to(ct.name);
    j.at("states").get_to(ct.states);
    j.at("init").get_to(ct.init_state);
    j.at("finals").get_to(ct.final_states);
    ct.transitions = j.value("transitions", std::vector<Transition>{});
    ct.qnud = j.value("qnud", std::vector<std::string>{});
    ct.conformity_overrides = j.value("conformity", std::map<std::string, double>{});
}

void to_json(json& j, const ConvTypeBelief& belief) {
    json candidates = json::array();
    for (const ConvTypeBelief::Candidate& c : belief.candidates) {
        candidates.push_back(json{{"type", c.type}, {"probability", c.probability}});
    }
    j = json{{"candidates", std::move(candidates)}, {"active_index", belief.active_index}};
}

void from_json(const json& j, ConvTypeBelief& belief) {
    belief.candidates.clear();
    for (const json& c : j.at("candidates")) {
        belief.candidates.push_back(
            {c.at("type").get<ConversationalType>(), c.at("probability").get<double>()});
    }
    j.at("active_index").get_to(belief.active_index);
}

void to_json(json& j, const Weights& w) { j = json::array({w.alpha, w.beta, w.gamma}); }

void from_json(const json& j, Weights& w) {
    if (!j.is_array() || j.size() != 3) {
        throw schema_error("", "weights must be an array [alpha, beta, gamma]");
    }
    w = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void to_json(json& j, const MoveCandidate& m) {
    j = json{{"label", m.label},
             {"text", m.text},
             {"vector", m.vector},
             {"conformity", m.conformity}};
}

void from_json(const json& j, MoveCandidate& m) {
    j.at("label").get_to(m.label);
    m.text = j.value("text", std::string{});
    j.at("vector").get_to(m.vector);
    j.at("conformity").get_to(m.conformity);
}

void to_json(json& j, const DecisionFactors& f) {
    j = json{{"s_self", f.s_self}, {"s_other", f.s_other}, {"conf_mass", f.conf_mass}};
}

void from_json(const json& j, DecisionFactors& f) {
    j.at("s_self").get_to(f.s_self);
    j.at("s_other").get_to(f.s_other);
    j.at("conf_mass").get_to(f.conf_mass);
}

void to_json(json& j, const ScoredMove& s) {
    j = json{{"candidate", s.candidate},
             {"factors", s.factors},
             {"rho", s.rho},
             {"probability", s.probability}};
}

void from_json(const json& j, ScoredMove& s) {
    j.at("candidate").get_to(s.candidate);
    j.at("factors").get_to(s.factors);
    j.at("rho").get_to(s.rho);
    j.at("probability").get_to(s.probability);
}

void to_json(json& j, const MoveRecord& r) {
    j = json{{"label", r.label}, {"text", r.text}, {"observed", r.observed}};
}

void from_json(const json& j, MoveRecord& r) {
    j.at("label").get_to(r.label);
    r.text = j.value("text", std::string{});
    j.at("observed").get_to(r.observed);
}

void to_json(json& j, const Gameboard& g) {
    j = json{{"speaker", g.speaker},
             {"addressee", g.addressee},
             {"utterance_time", g.utterance_time},
             {"facts", g.facts},
             {"pending", g.pending},
             {"moves", g.moves},
             {"qud", g.qud}};
}

void from_json(const json& j, Gameboard& g) {
    j.at("speaker").get_to(g.speaker);
    j.at("addressee").get_to(g.addressee);
    j.at("utterance_time").get_to(g.utterance_time);
    j.at("facts").get_to(g.facts);
    j.at("pending").get_to(g.pending);
    j.at("moves").get_to(g.moves);
    j.at("qud").get_to(g.qud);
}

void to_json(json& j, const PrivateState& p) {
    j = json{{"self_character", p.self_character},
             {"other_character", p.other_character},
             {"goals", p.goals},
             {"belief", p.belief},
             {"weights", p.weights},
             {"update_rate", p.update_rate}};
    j["tmp"] = p.tmp ? json(*p.tmp) : json(nullptr);
}

void from_json(const json& j, PrivateState& p) {
    j.at("self_character").get_to(p.self_character);
    j.at("other_character").get_to(p.other_character);
    j.at("goals").get_to(p.goals);
    j.at("belief").get_to(p.belief);
    j.at("weights").get_to(p.weights);
    j.at("update_rate").get_to(p.update_rate);
    const json& tmp = j.at("tmp");
    p.tmp = tmp.is_null() ? nullptr
                          : std::make_shared<const PrivateState>(tmp.get<PrivateState>());
}

void to_json(json& j, const InformationState& s) {
    j = json{{"owner", s.owner},
             {"partner", s.partner},
             {"private", s.priv},
             {"dgb", s.dgb},
             {"conv_state", s.conv_state}};
}

void from_json(const json& j, InformationState& s) {
    j.at("owner").get_to(s.owner);
    j.at("partner").get_to(s.partner);
    j.at("private").get_to(s.priv);
    j.at("dgb").get_to(s.dgb);
    j.at("conv_state").get_to(s.conv_state);
}

void to_json(json& j, const Observation& o) {
    json rows = json::array();
    for (const DecisionFactors& f : o.factors) {
        rows.push_back(json::array({f.s_self, f.s_other, f.conf_mass}));
    }
    j = json{{"factors", std::move(rows)}, {"chosen", o.chosen}};
}

void from_json(const json& j, Observation& o) {
    o.factors.clear();
    for (const json& row : j.at("factors")) {
        if (!row.is_array() || row.size() != 3) {
            throw schema_error("", "factor row must be an array [s_self, s_other, conf_mass]");
        }
        o.factors.push_back(
            {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    j.at("chosen").get_to(o.chosen);
}

void to_json(json& j, const FitResult& r) {
    j = json{{"weights", r.weights},
             {"log_likelihood", r.log_likelihood},
             {"iterations", r.iterations},
             {"converged", r.converged},
             {"identifiable", r.identifiable}};
}

void from_json(const json& j, FitResult& r) {
    j.at("weights").get_to(r.weights);
    j.at("log_likelihood").get_to(r.log_likelihood);
    j.at("iterations").get_to(r.iterations);
    j.at("converged").get_to(r.converged);
    j.at("identifiable").get_to(r.identifiable);
}

void to_json(json& j, const TraceEvent& e) {
    json entries = json::array();
    for (const ScoredMove& s : e.space.entries) entries.push_back(s);
    j = json{{"turn", e.turn},
             {"agent", e.agent},
             {"space", std::move(entries)},
             {"selected", e.selected},
             {"conv_state", e.conv_state},
             {"conv_prob", e.conv_prob},
             {"other_character", e.other_character}};
}

void from_json(const json& j, TraceEvent& e) {
    j.at("turn").get_to(e.turn);
    j.at("agent").get_to(e.agent);
    e.space.entries.clear();
    for (const json& s : j.at("space")) e.space.entries.push_back(s.get<ScoredMove>());
    j.at("selected").get_to(e.selected);
    j.at("conv_state").get_to(e.conv_state);
    j.at("conv_prob").get_to(e.conv_prob);
    j.at("other_character").get_to(e.other_character);
}

} // namespace moveselect
