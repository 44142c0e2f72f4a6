#pragma once

#include <array>
#include <cstddef>

namespace moveselect {

inline constexpr std::size_t kTraitCount = 5;

// Big Five trait vector. Component order is a fixed contract: [openness,
// conscientiousness, extroversion, agreeableness, neuroticism], each a
// dimensionless real in [-1, 1]. Serializes as a 5-element array in that
// order.
struct TraitVector {
    double openness = 0.0;
    double conscientiousness = 0.0;
    double extroversion = 0.0;
    double agreeableness = 0.0;
    double neuroticism = 0.0;

    std::array<double, kTraitCount> components() const {
        return {openness, conscientiousness, extroversion, agreeableness, neuroticism};
    }

    static TraitVector from_components(const std::array<double, kTraitCount>& c) {
        return {c[0], c[1], c[2], c[3], c[4]};
    }

    double operator[](std::size_t i) const { return components()[i]; }

    bool operator==(const TraitVector&) const = default;
};

// Throws validation_error naming the first offending component (index and
// value); accepts iff all five components are finite and within [-1, 1].
void validate(const TraitVector& v);
bool is_valid(const TraitVector& v) noexcept;

// (a.b) / (|a||b|), clamped to [-1, 1]. Returns exactly 0 when either
// vector has zero norm: a blank personality carries no evidence of
// affinity either way.
double cosine_similarity(const TraitVector& a, const TraitVector& b);

// Componentwise (1-rate)*previous + rate*observed with rate in [0, 1],
// clamped back to [-1, 1] to absorb float drift. rate=0 keeps the
// previous estimate, rate=1 adopts the observation wholesale.
TraitVector ema_update(const TraitVector& previous, const TraitVector& observed, double rate);

} // namespace moveselect
