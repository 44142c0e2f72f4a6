#include "moveselect/trait_vector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "moveselect/errors.hpp"

namespace moveselect {

namespace {

const char* kTraitNames[kTraitCount] = {
    "openness", "conscientiousness", "extroversion", "agreeableness", "neuroticism"};

} // namespace

void validate(const TraitVector& v) {
    const auto c = v.components();
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        if (!std::isfinite(c[i])) {
            std::ostringstream msg;
            msg << "trait component " << i << " (" << kTraitNames[i] << ") is not finite";
            throw validation_error(msg.str());
        }
        if (c[i] < -1.0 || c[i] > 1.0) {
            std::ostringstream msg;
            msg << "trait component " << i << " (" << kTraitNames[i] << ") out of range [-1, 1]: "
                << c[i];
            throw validation_error(msg.str());
        }
    }
}

bool is_valid(const TraitVector& v) noexcept {
    for (double x : v.components()) {
        if (!std::isfinite(x) || x < -1.0 || x > 1.0) return false;
    }
    return true;
}

double cosine_similarity(const TraitVector& a, const TraitVector& b) {
    const auto ca = a.components();
    const auto cb = b.components();
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        dot += ca[i] * cb[i];
        na += ca[i] * ca[i];
        nb += cb[i] * cb[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    const double sim = dot / (std::sqrt(na) * std::sqrt(nb));
    return std::clamp(sim, -1.0, 1.0);
}

TraitVector ema_update(const TraitVector& previous, const TraitVector& observed, double rate) {
    if (!std::isfinite(rate) || rate < 0.0 || rate > 1.0) {
        std::ostringstream msg;
        msg << "update rate out of range [0, 1]: " << rate;
        throw validation_error(msg.str());
    }
    const auto p = previous.components();
    const auto o = observed.components();
    std::array<double, kTraitCount> out{};
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        out[i] = std::clamp((1.0 - rate) * p[i] + rate * o[i], -1.0, 1.0);
    }
    return TraitVector::from_components(out);
}

} // namespace moveselect
