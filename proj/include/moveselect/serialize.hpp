#pragma once

#include <span>
#include <string>
#include <vector>

#include "moveselect/estimate.hpp"
#include "moveselect/information_state.hpp"
#include "moveselect/sim.hpp"

namespace moveselect {

// Whole-file helpers; both throw io_error.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Machine formats are line-delimited JSON carrying full-precision doubles
// (shortest lossless decimal repr); parse(print(x)) == x exactly. Human
// formats print 4 fractional digits and are not meant to be parsed.

std::string to_canonical_json(const InformationState& state);
InformationState information_state_from_json(const std::string& text);

std::string scored_space_machine(const ScoredMoveSpace& space);
ScoredMoveSpace parse_scored_space(const std::string& text);
std::string scored_space_table(const ScoredMoveSpace& space);

std::string fit_result_machine(const FitResult& result);
FitResult parse_fit_result(const std::string& text);
std::string fit_result_table(const FitResult& result);

// Observation files open with a header record naming the schema version
// and the factor columns; every following line is one observation.
std::string observations_machine(std::span<const Observation> observations);
// schema_error diagnostics carry 1-based line numbers.
std::vector<Observation> parse_observations(const std::string& text);

std::string termination_name(Termination t);
Termination termination_from_name(const std::string& name);

std::string trace_machine(const Trace& trace);
Trace parse_trace(const std::string& text);
std::string trace_transcript(const Trace& trace);

} // namespace moveselect
