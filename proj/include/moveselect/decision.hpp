#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moveselect/trait_vector.hpp"

namespace moveselect {

// SelfMonitor weights trading off self character (alpha), estimated other
// character (beta), and conversational-type conformity (gamma). A point
// on the probability simplex: each in [0, 1], summing to 1 within 1e-9.
struct Weights {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    bool operator==(const Weights&) const = default;
};

void validate(const Weights& w);

// Rescales nonnegative weights to sum exactly to 1. Hand-typed decimals
// rarely hit the simplex on the nose; scenario files opt into this.
Weights normalized(const Weights& w);

// One candidate move: its predicted trait vector c_i and its conformity
// d_i with the active conversational type.
struct MoveCandidate {
    std::string label;
    std::string text;
    TraitVector vector;
    double conformity = 0.0; // d_i in [-1, 1]

    bool operator==(const MoveCandidate&) const = default;
};

void validate(const MoveCandidate& move);

// One row of the decision factor matrix: similarity of the move to each
// character estimate, and conformity mass d_i * p.
struct DecisionFactors {
    double s_self = 0.0;
    double s_other = 0.0;
    double conf_mass = 0.0;

    bool operator==(const DecisionFactors&) const = default;
};

DecisionFactors decision_factors(const MoveCandidate& move, const TraitVector& self_char,
                                 const TraitVector& other_char, double conv_prob);

// rho = alpha*s_self + beta*s_other + gamma*conf_mass. In [-1, 1] for
// valid inputs.
double score_move(const DecisionFactors& f, const Weights& w);

// Same linear form without the simplex constraint on the coefficients.
double weighted_sum(const DecisionFactors& f, double alpha, double beta, double gamma);

// Exp-normalized distribution over arbitrary finite scores, computed with
// max-subtraction. Strictly positive, sums to 1, preserves input order.
std::vector<double> softmax(std::span<const double> scores);

struct ScoredMove {
    MoveCandidate candidate;
    DecisionFactors factors;
    double rho = 0.0;
    double probability = 0.0;

    bool operator==(const ScoredMove&) const = default;
};

// Factors, rho, and choice probability per move, in input order.
struct ScoredMoveSpace {
    std::vector<ScoredMove> entries;

    std::size_t size() const { return entries.size(); }

    bool operator==(const ScoredMoveSpace&) const = default;
};

ScoredMoveSpace score_space(std::span<const MoveCandidate> moves, const TraitVector& self_char,
                            const TraitVector& other_char, double conv_prob, const Weights& w);

// Index of the highest choice probability; exact ties go to the lowest
// index.
std::size_t select_argmax(const ScoredMoveSpace& space);

// Index drawn from the choice distribution. Deterministic for a given
// (space, seed): a single mt19937_64 draw mapped to [0, 1) by
// (engine() >> 11) * 2^-53, then walked along the cumulative
// probabilities.
std::size_t select_sample(const ScoredMoveSpace& space, std::uint64_t seed);

} // namespace moveselect
