#include "moveselect/decision.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "moveselect/errors.hpp"

namespace moveselect {

void validate(const Weights& w) {
    for (double x : {w.alpha, w.beta, w.gamma}) {
        if (!std::isfinite(x)) throw validation_error("weight component is not finite");
        if (x < 0.0) {
            std::ostringstream msg;
            msg << "weight component negative: " << x;
            throw validation_error(msg.str());
        }
    }
    const double sum = w.alpha + w.beta + w.gamma;
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "weights must sum to 1 within 1e-9 (simplex constraint), got " << sum;
        throw validation_error(msg.str());
    }
}

Weights normalized(const Weights& w) {
    for (double x : {w.alpha, w.beta, w.gamma}) {
        if (!std::isfinite(x) || x < 0.0) {
            throw validation_error("cannot normalize weights with negative or non-finite components");
        }
    }
    const double sum = w.alpha + w.beta + w.gamma;
    if (sum <= 0.0) throw validation_error("cannot normalize all-zero weights");
    return {w.alpha / sum, w.beta / sum, w.gamma / sum};
}

void validate(const MoveCandidate& move) {
    if (move.label.empty()) throw validation_error("move candidate has empty label");
    validate(move.vector);
    if (!std::isfinite(move.conformity) || move.conformity < -1.0 || move.conformity > 1.0) {
        std::ostringstream msg;
        msg << "conformity of move '" << move.label << "' out of range [-1, 1]: "
            << move.conformity;
        throw validation_error(msg.str());
    }
}

DecisionFactors decision_factors(const MoveCandidate& move, const TraitVector& self_char,
                                 const TraitVector& other_char, double conv_prob) {
    if (!std::isfinite(conv_prob) || conv_prob < 0.0 || conv_prob > 1.0) {
        std::ostringstream msg;
        msg << "conversational-type probability out of range [0, 1]: " << conv_prob;
        throw validation_error(msg.str());
    }
    return {cosine_similarity(move.vector, self_char),
            cosine_similarity(move.vector, other_char),
            move.conformity * conv_prob};
}

double score_move(const DecisionFactors& f, const Weights& w) {
    validate(w);
    return weighted_sum(f, w.alpha, w.beta, w.gamma);
}

double weighted_sum(const DecisionFactors& f, double alpha, double beta, double gamma) {
    return alpha * f.s_self + beta * f.s_other + gamma * f.conf_mass;
}

std::vector<double> softmax(std::span<const double> scores) {
    if (scores.empty()) throw validation_error("softmax over an empty score list");
    double max = scores[0];
    for (double s : scores) {
        if (!std::isfinite(s)) throw validation_error("softmax over a non-finite score");
        max = std::max(max, s);
    }
    std::vector<double> out(scores.size());
    double total = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out[i] = std::exp(scores[i] - max);
        total += out[i];
    }
    for (double& p : out) p /= total;
    return out;
}

ScoredMoveSpace score_space(std::span<const MoveCandidate> moves, const TraitVector& self_char,
                            const TraitVector& other_char, double conv_prob, const Weights& w) {
    if (moves.empty()) throw validation_error("cannot score an empty move space");
    validate(self_char);
    validate(other_char);
    validate(w);

    ScoredMoveSpace space;
    space.entries.reserve(moves.size());
    std::vector<double> rhos;
    rhos.reserve(moves.size());
    for (const auto& move : moves) {
        validate(move);
        const DecisionFactors f = decision_factors(move, self_char, other_char, conv_prob);
        const double rho = weighted_sum(f, w.alpha, w.beta, w.gamma);
        rhos.push_back(rho);
        space.entries.push_back({move, f, rho, 0.0});
    }
    const std::vector<double> probs = softmax(rhos);
    for (std::size_t i = 0; i < probs.size(); ++i) space.entries[i].probability = probs[i];
    return space;
}

std::size_t select_argmax(const ScoredMoveSpace& space) {
    if (space.entries.empty()) throw validation_error("cannot select from an empty move space");
    std::size_t best = 0;
    for (std::size_t i = 1; i < space.entries.size(); ++i) {
        if (space.entries[i].probability > space.entries[best].probability) best = i;
    }
    return best;
}

std::size_t select_sample(const ScoredMoveSpace& space, std::uint64_t seed) {
    if (space.entries.empty()) throw validation_error("cannot select from an empty move space");
    std::mt19937_64 engine(seed);
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < space.entries.size(); ++i) {
        cumulative += space.entries[i].probability;
        if (u < cumulative) return i;
    }
    return space.entries.size() - 1;
}

} // namespace moveselect
