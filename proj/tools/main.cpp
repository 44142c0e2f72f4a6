#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moveselect/errors.hpp"
#include "moveselect/estimate.hpp"
#include "moveselect/scenario.hpp"
#include "moveselect/serialize.hpp"
#include "moveselect/sim.hpp"

using namespace moveselect;

int main(int argc, char** argv) {
    CLI::App app{"dialogue move selection: score move spaces, run dialogues, fit weights"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* cmd_validate = app.add_subcommand("validate", "check a scenario file");
    cmd_validate->add_option("path", validate_path, "scenario file")->required();
    cmd_validate->callback([&] {
        load_scenario(validate_path);
        std::cout << "OK\n";
    });

    struct {
        std::string path, format = "table", state, agent;
    } score;
    CLI::App* cmd_score =
        app.add_subcommand("score", "print the scored move space for an agent at a state");
    cmd_score->add_option("path", score.path, "scenario file")->required();
    cmd_score->add_option("--format", score.format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
    cmd_score->add_option("--state", score.state, "conv state (default: init state)");
    cmd_score->add_option("--agent", score.agent, "agent name (default: first agent)");
    cmd_score->callback([&] {
        const Scenario scenario = load_scenario(score.path);
        const ScoredMoveSpace space = initial_score(scenario, score.agent, score.state);
        std::cout << (score.format == "machine" ? scored_space_machine(space)
                                                : scored_space_table(space));
    });

    struct {
        std::string path, trace;
        std::uint64_t seed = 0;
    } simulate;
    CLI::App* cmd_simulate = app.add_subcommand("simulate", "run a scenario to termination");
    cmd_simulate->add_option("path", simulate.path, "scenario file")->required();
    CLI::Option* seed_opt = cmd_simulate->add_option(
        "--seed", simulate.seed, "override every sample policy's seed");
    cmd_simulate->add_option("--trace", simulate.trace, "write the machine trace here");
    cmd_simulate->callback([&] {
        Scenario scenario = load_scenario(simulate.path);
        if (seed_opt->count() > 0) {
            for (AgentSpec& agent : scenario.agents) {
                if (agent.policy.kind == Policy::Kind::sample) agent.policy.seed = simulate.seed;
            }
        }
        const Trace trace = run(scenario);
        if (!simulate.trace.empty()) write_file(simulate.trace, trace_machine(trace));
        std::cout << trace_transcript(trace);
    });

    struct {
        std::string path, method = "grid", format = "table";
        double step = 0.02;
        double dirichlet = 1.0;
    } fit;
    CLI::App* cmd_fit = app.add_subcommand("fit", "recover weights from an observation file");
    cmd_fit->add_option("path", fit.path, "observation file")->required();
    cmd_fit->add_option("--method", fit.method, "estimator")
        ->check(CLI::IsMember({"grid", "gradient"}));
    cmd_fit->add_option("--step", fit.step, "grid spacing (grid method)");
    cmd_fit->add_option("--format", fit.format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
    CLI::Option* dirichlet_opt = cmd_fit->add_option(
        "--dirichlet", fit.dirichlet, "symmetric Dirichlet prior strength (default: no prior)");
    cmd_fit->callback([&] {
        const std::vector<Observation> observations = parse_observations(read_file(fit.path));
        FitOptions options;
        if (dirichlet_opt->count() > 0) options.dirichlet_alpha = fit.dirichlet;
        const FitResult result = fit.method == "grid"
                                     ? fit_grid(observations, fit.step, options)
                                     : fit_gradient(observations, 1000, 1e-8, options);
        std::cout << (fit.format == "machine" ? fit_result_machine(result)
                                              : fit_result_table(result));
    });

    struct {
        std::string path, agent, state, out;
        std::vector<double> planted;
        std::size_t count = 500;
        double jitter = 0.3;
        std::uint64_t seed = 1;
    } synth;
    CLI::App* cmd_synth = app.add_subcommand(
        "synth", "sample a synthetic observation file from a scenario's move space");
    cmd_synth->add_option("path", synth.path, "scenario file")->required();
    cmd_synth->add_option("--planted", synth.planted, "planted weights alpha beta gamma")
        ->expected(3)
        ->required();
    cmd_synth->add_option("--count", synth.count, "observations to draw");
    cmd_synth->add_option("--jitter", synth.jitter, "uniform factor noise amplitude");
    cmd_synth->add_option("--seed", synth.seed, "rng seed");
    cmd_synth->add_option("--agent", synth.agent, "agent name (default: first agent)");
    cmd_synth->add_option("--state", synth.state, "conv state (default: init state)");
    cmd_synth->add_option("--out", synth.out, "output path (default: stdout)");
    cmd_synth->callback([&] {
        const Scenario scenario = load_scenario(synth.path);
        const std::vector<DecisionFactors> rows =
            initial_factors(scenario, synth.agent, synth.state);
        const Weights planted{synth.planted[0], synth.planted[1], synth.planted[2]};
        const std::vector<Observation> observations =
            synthesize_observations(rows, planted, synth.count, synth.jitter, synth.seed);
        const std::string text = observations_machine(observations);
        if (synth.out.empty()) {
            std::cout << text;
        } else {
            write_file(synth.out, text);
        }
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const fit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
