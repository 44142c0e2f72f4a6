#include <array>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moveselect/errors.hpp"
#include "moveselect/estimate.hpp"
#include "moveselect/scenario.hpp"
#include "moveselect/serialize.hpp"
#include "moveselect/sim.hpp"
#include "moveselect/trait_vector.hpp"

namespace py = pybind11;

namespace {

using namespace moveselect;

using Components = std::array<double, kTraitCount>;

FitResult fit_text(const std::string& observations_text, const std::string& method,
                   double step) {
    const std::vector<Observation> observations = parse_observations(observations_text);
    if (method == "grid") return fit_grid(observations, step);
    if (method == "gradient") return fit_gradient(observations);
    throw validation_error("unknown fit method '" + method + "'");
}

py::dict fit_dict(const FitResult& r) {
    py::dict out;
    out["alpha"] = r.weights.alpha;
    out["beta"] = r.weights.beta;
    out["gamma"] = r.weights.gamma;
    out["log_likelihood"] = r.log_likelihood;
    out["iterations"] = r.iterations;
    out["converged"] = r.converged;
    out["identifiable"] = r.identifiable;
    return out;
}

} // namespace

PYBIND11_MODULE(moveselect, m) {
    m.doc() = "dialogue move selection: trait similarity scoring, softmax choice, "
              "scripted dialogue simulation, weight estimation";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<schema_error>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<fit_error>(m, "FitError", PyExc_ValueError);
    py::register_exception<io_error>(m, "IoError", PyExc_OSError);

    m.def(
        "cosine",
        [](const Components& a, const Components& b) {
            return cosine_similarity(TraitVector::from_components(a),
                                     TraitVector::from_components(b));
        },
        py::arg("a"), py::arg("b"),
        "Cosine similarity of two [o, c, e, a, n] vectors; 0 when either is all zero.");

    m.def(
        "ema",
        [](const Components& previous, const Components& observed, double rate) {
            return ema_update(TraitVector::from_components(previous),
                              TraitVector::from_components(observed), rate)
                .components();
        },
        py::arg("previous"), py::arg("observed"), py::arg("rate"),
        "Componentwise (1-rate)*previous + rate*observed, clamped to [-1, 1].");

    m.def(
        "softmax", [](const std::vector<double>& scores) { return softmax(scores); },
        py::arg("scores"), "Exp-normalized distribution over the scores.");

    m.def(
        "validate_scenario", [](const std::string& text) { parse_scenario(text); },
        py::arg("scenario_json"), "Raises SchemaError/ValidationError on a bad document.");

    m.def(
        "score",
        [](const std::string& text, const std::string& agent, const std::string& state) {
            return scored_space_machine(initial_score(parse_scenario(text), agent, state));
        },
        py::arg("scenario_json"), py::arg("agent") = "", py::arg("state") = "",
        "Scored move space for an agent at a state, as machine-format JSONL.");

    m.def(
        "run",
        [](const std::string& text) {
            return trace_machine(moveselect::run(parse_scenario(text)));
        },
        py::arg("scenario_json"), "Runs the scenario; returns the machine-format trace.");

    m.def(
        "transcript",
        [](const std::string& text) {
            return trace_transcript(moveselect::run(parse_scenario(text)));
        },
        py::arg("scenario_json"), "Runs the scenario; returns the human transcript.");

    m.def(
        "fit",
        [](const std::string& text, const std::string& method, double step) {
            return fit_dict(fit_text(text, method, step));
        },
        py::arg("observations_text"), py::arg("method") = "grid", py::arg("step") = 0.02,
        "Recovers (alpha, beta, gamma) from an observation file's text.");

    m.def(
        "synth",
        [](const std::string& text, const std::array<double, 3>& planted, std::size_t count,
           double jitter, std::uint64_t seed, const std::string& agent,
           const std::string& state) {
            const Scenario scenario = parse_scenario(text);
            const std::vector<DecisionFactors> rows = initial_factors(scenario, agent, state);
            return observations_machine(synthesize_observations(
                rows, Weights{planted[0], planted[1], planted[2]}, count, jitter, seed));
        },
        py::arg("scenario_json"), py::arg("planted"), py::arg("count") = 500,
        py::arg("jitter") = 0.3, py::arg("seed") = 1, py::arg("agent") = "",
        py::arg("state") = "",
        "Samples a synthetic observation file from a scenario's move space.");
}
