#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "moveselect/decision.hpp"

namespace moveselect {

// One observed choice: the factor rows of every candidate that was on the
// table, and the index of the move actually taken. A single-candidate
// observation is legal but carries no information about the weights.
struct Observation {
    std::vector<DecisionFactors> factors;
    std::size_t chosen = 0;

    bool operator==(const Observation&) const = default;
};

void validate(const Observation& obs);

struct FitResult {
    Weights weights;
    // Data log-likelihood at `weights` (prior excluded when one is active).
    double log_likelihood = 0.0;
    int iterations = 0;
    bool converged = false;
    // False when the optimum is matched within 1e-9 elsewhere on the grid,
    // outside the winning point's immediate neighborhood: the data cannot
    // separate materially different weight settings.
    bool identifiable = true;
};

struct FitOptions {
    // Strength of a symmetric Dirichlet log-prior added to the objective:
    // (alpha - 1) * sum_k log w_k. Off by default; the choice model alone.
    std::optional<double> dirichlet_alpha;
};

// Sum over observations of log softmax(rho(row, w))[chosen].
double log_likelihood(std::span<const Observation> observations, const Weights& w);

// Exhaustive evaluation on the simplex lattice with the given spacing.
// Ties go to the lexicographically smallest (alpha, beta); converged is
// always true; iterations counts grid points evaluated.
FitResult fit_grid(std::span<const Observation> observations, double step = 0.02,
                   const FitOptions& options = {});

// Projected-gradient ascent from the fit_grid(0.1) optimum. Fixed step
// halved on non-improvement; converged when the projected step shrinks
// below tolerance (gradient-mapping norm). The objective is concave, so
// the result's objective never falls below the initializer's.
FitResult fit_gradient(std::span<const Observation> observations, int max_iterations = 1000,
                       double tolerance = 1e-8, const FitOptions& options = {});

struct WeightShift {
    Weights first_half;
    Weights second_half;
    double l1_distance = 0.0;
    bool shifted = false;
};

// Refits the two halves of the observation list separately and flags an
// L1 drift above 0.3. Reported, not interpreted.
WeightShift detect_weight_shift(std::span<const Observation> observations, double step = 0.02);

// Draws synthetic choices from the softmax model under `planted` weights.
// Each observation takes the base rows plus uniform noise in [-jitter,
// jitter] (clamped back to [-1, 1]); the chosen index is then sampled.
// Bit-stable for a given seed across standard libraries.
std::vector<Observation> synthesize_observations(std::span<const DecisionFactors> base_rows,
                                                 const Weights& planted, std::size_t count,
                                                 double jitter, std::uint64_t seed);

} // namespace moveselect
