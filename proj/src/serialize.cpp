#include "moveselect/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

#include "json_codec.hpp"
#include "moveselect/errors.hpp"

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

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error("line " + std::to_string(line_of_byte(text, e.byte)), e.what());
    }
}

json parse_record(const std::string& line, std::size_t line_no) {
    try {
        return json::parse(line);
    } catch (const json::parse_error& e) {
        throw schema_error("line " + std::to_string(line_no), e.what());
    }
}

template <typename T>
T convert_record(const json& j, std::size_t line_no) {
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw schema_error("line " + std::to_string(line_no), e.what());
    } catch (const schema_error& e) {
        throw schema_error("line " + std::to_string(line_no), e.what());
    }
}

// Calls fn(line, 1-based line number) for every nonempty line.
template <typename Fn>
void for_each_line(const std::string& text, Fn&& fn) {
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(line, line_no);
    }
}

std::string fixed4(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << x;
    return out.str();
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw io_error("read failed for '" + path + "'");
    return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw io_error("write failed for '" + path + "'");
}

std::string to_canonical_json(const InformationState& state) { return json(state).dump(); }

InformationState information_state_from_json(const std::string& text) {
    return convert_record<InformationState>(parse_document(text), 1);
}

std::string scored_space_machine(const ScoredMoveSpace& space) {
    std::string out;
    for (const ScoredMove& entry : space.entries) {
        out += json(entry).dump();
        out += '\n';
    }
    return out;
}

ScoredMoveSpace parse_scored_space(const std::string& text) {
    ScoredMoveSpace space;
    for_each_line(text, [&](const std::string& line, std::size_t line_no) {
        space.entries.push_back(convert_record<ScoredMove>(parse_record(line, line_no), line_no));
    });
    return space;
}

std::string scored_space_table(const ScoredMoveSpace& space) {
    std::size_t label_width = 5;
    for (const ScoredMove& entry : space.entries) {
        label_width = std::max(label_width, entry.candidate.label.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(label_width)) << "label" << std::right;
    for (const char* column : {"s_self", "s_other", "d*p", "rho", "probability"}) {
        out << "  " << std::setw(11) << column;
    }
    out << '\n';
    for (const ScoredMove& entry : space.entries) {
        out << std::left << std::setw(static_cast<int>(label_width)) << entry.candidate.label
            << std::right;
        for (double value : {entry.factors.s_self, entry.factors.s_other,
                             entry.factors.conf_mass, entry.rho, entry.probability}) {
            out << "  " << std::setw(11) << fixed4(value);
        }
        out << '\n';
    }
    return std::move(out).str();
}

std::string fit_result_machine(const FitResult& result) { return json(result).dump() + "\n"; }

FitResult parse_fit_result(const std::string& text) {
    FitResult result;
    bool seen = false;
    for_each_line(text, [&](const std::string& line, std::size_t line_no) {
        if (seen) throw schema_error("line " + std::to_string(line_no), "trailing content");
        result = convert_record<FitResult>(parse_record(line, line_no), line_no);
        seen = true;
    });
    if (!seen) throw schema_error("", "empty fit result document");
    return result;
}

std::string fit_result_table(const FitResult& result) {
    std::ostringstream out;
    out << "alpha           " << fixed4(result.weights.alpha) << '\n'
        << "beta            " << fixed4(result.weights.beta) << '\n'
        << "gamma           " << fixed4(result.weights.gamma) << '\n'
        << "log_likelihood  " << fixed4(result.log_likelihood) << '\n'
        << "iterations      " << result.iterations << '\n'
        << "converged       " << (result.converged ? "yes" : "no") << '\n'
        << "identifiable    " << (result.identifiable ? "yes" : "no") << '\n';
    return std::move(out).str();
}

std::string observations_machine(std::span<const Observation> observations) {
    std::string out = json{{"version", 1},
                           {"columns", {"s_self", "s_other", "conf_mass"}}}
                          .dump() +
                      "\n";
    for (const Observation& obs : observations) {
        out += json(obs).dump();
        out += '\n';
    }
    return out;
}

std::vector<Observation> parse_observations(const std::string& text) {
    std::vector<Observation> out;
    bool header_seen = false;
    for_each_line(text, [&](const std::string& line, std::size_t line_no) {
        const json j = parse_record(line, line_no);
        if (!header_seen) {
            if (!j.is_object() || !j.contains("version")) {
                throw schema_error("line " + std::to_string(line_no),
                                   "expected a header record with a version field");
            }
            if (j.at("version") != 1) {
                throw schema_error("line " + std::to_string(line_no),
                                   "unsupported observation file version " + j.at("version").dump());
            }
            header_seen = true;
            return;
        }
        Observation obs = convert_record<Observation>(j, line_no);
        try {
            validate(obs);
        } catch (const validation_error& e) {
            throw schema_error("line " + std::to_string(line_no), e.what());
        }
        out.push_back(std::move(obs));
    });
    if (!header_seen) throw schema_error("", "empty observation file");
    return out;
}

std::string termination_name(Termination t) {
    switch (t) {
        case Termination::final_state: return "final-state";
        case Termination::turn_limit: return "turn-limit";
        case Termination::empty_move_space: return "empty-move-space";
    }
    throw validation_error("unknown termination value");
}

Termination termination_from_name(const std::string& name) {
    if (name == "final-state") return Termination::final_state;
    if (name == "turn-limit") return Termination::turn_limit;
    if (name == "empty-move-space") return Termination::empty_move_space;
    throw schema_error("", "unknown termination reason '" + name + "'");
}

std::string trace_machine(const Trace& trace) {
    std::string out;
    for (const TraceEvent& event : trace.events) {
        out += json{{"event", event}}.dump();
        out += '\n';
    }
    out += json{{"termination", termination_name(trace.termination)}}.dump();
    out += '\n';
    for (const InformationState& state : trace.final_states) {
        out += json{{"final_state", state}}.dump();
        out += '\n';
    }
    return out;
}

Trace parse_trace(const std::string& text) {
    Trace trace;
    bool termination_seen = false;
    for_each_line(text, [&](const std::string& line, std::size_t line_no) {
        const json j = parse_record(line, line_no);
        if (!j.is_object() || j.size() != 1) {
            throw schema_error("line " + std::to_string(line_no),
                               "expected a single-key trace record");
        }
        if (j.contains("event")) {
            trace.events.push_back(convert_record<TraceEvent>(j.at("event"), line_no));
        } else if (j.contains("termination")) {
            trace.termination = termination_from_name(j.at("termination").get<std::string>());
            termination_seen = true;
        } else if (j.contains("final_state")) {
            trace.final_states.push_back(
                convert_record<InformationState>(j.at("final_state"), line_no));
        } else {
            throw schema_error("line " + std::to_string(line_no),
                               "unknown trace record key " + j.begin().key());
        }
    });
    if (!termination_seen) throw schema_error("", "trace has no termination record");
    return trace;
}

std::string trace_transcript(const Trace& trace) {
    std::size_t agent_width = 0;
    std::size_t label_width = 0;
    for (const TraceEvent& event : trace.events) {
        agent_width = std::max(agent_width, event.agent.size());
        label_width =
            std::max(label_width, event.space.entries[event.selected].candidate.label.size());
    }
    std::ostringstream out;
    for (const TraceEvent& event : trace.events) {
        const ScoredMove& pick = event.space.entries[event.selected];
        out << "turn " << std::left << std::setw(3) << event.turn << std::setw(
                   static_cast<int>(agent_width))
            << event.agent << "  " << std::setw(static_cast<int>(label_width))
            << pick.candidate.label << std::right << "  prob=" << fixed4(pick.probability)
            << "  -> " << event.conv_state;
        if (!pick.candidate.text.empty()) out << "  \"" << pick.candidate.text << '"';
        out << '\n';
    }
    out << "termination: " << termination_name(trace.termination) << '\n';
    return std::move(out).str();
}

} // namespace moveselect
