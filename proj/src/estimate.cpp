#include "moveselect/estimate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "moveselect/errors.hpp"

namespace moveselect {

namespace {

void validate_factors(const DecisionFactors& f) {
    for (double x : {f.s_self, f.s_other, f.conf_mass}) {
        if (!std::isfinite(x) || x < -1.0 || x > 1.0) {
            std::ostringstream msg;
            msg << "decision factor out of range [-1, 1]: " << x;
            throw validation_error(msg.str());
        }
    }
}

// Throws unless at least one observation has >= 2 candidates.
void require_informative(std::span<const Observation> observations) {
    if (observations.empty()) {
        throw validation_error("weight estimation needs at least one observation");
    }
    bool informative = false;
    for (const Observation& obs : observations) {
        validate(obs);
        informative = informative || obs.factors.size() >= 2;
    }
    if (!informative) {
        throw fit_error(
            "no informative observations: every record offers a single candidate");
    }
}

double row_score(const DecisionFactors& f, const std::array<double, 3>& w) {
    return weighted_sum(f, w[0], w[1], w[2]);
}

// log softmax(rho)[chosen] via logsumexp; inputs are pre-validated.
double log_choice(const Observation& obs, const std::array<double, 3>& w) {
    double max_rho = -std::numeric_limits<double>::infinity();
    for (const DecisionFactors& f : obs.factors) {
        max_rho = std::max(max_rho, row_score(f, w));
    }
    double total = 0.0;
    for (const DecisionFactors& f : obs.factors) {
        total += std::exp(row_score(f, w) - max_rho);
    }
    return row_score(obs.factors[obs.chosen], w) - max_rho - std::log(total);
}

double data_log_likelihood(std::span<const Observation> observations,
                           const std::array<double, 3>& w) {
    double total = 0.0;
    for (const Observation& obs : observations) total += log_choice(obs, w);
    return total;
}

double log_prior(const std::array<double, 3>& w, const FitOptions& options) {
    if (!options.dirichlet_alpha) return 0.0;
    const double a = *options.dirichlet_alpha;
    double total = 0.0;
    for (double x : w) total += std::log(std::max(x, 1e-300));
    return (a - 1.0) * total;
}

double objective(std::span<const Observation> observations, const std::array<double, 3>& w,
                 const FitOptions& options) {
    return data_log_likelihood(observations, w) + log_prior(w, options);
}

// d/dw of the objective; the prior term is clamped away from the
// 1/0 blow-up at the simplex boundary.
std::array<double, 3> objective_gradient(std::span<const Observation> observations,
                                         const std::array<double, 3>& w,
                                         const FitOptions& options) {
    std::array<double, 3> g{0.0, 0.0, 0.0};
    std::vector<double> probs;
    for (const Observation& obs : observations) {
        double max_rho = -std::numeric_limits<double>::infinity();
        for (const DecisionFactors& f : obs.factors) {
            max_rho = std::max(max_rho, row_score(f, w));
        }
        probs.assign(obs.factors.size(), 0.0);
        double total = 0.0;
        for (std::size_t i = 0; i < obs.factors.size(); ++i) {
            probs[i] = std::exp(row_score(obs.factors[i], w) - max_rho);
            total += probs[i];
        }
        for (double& p : probs) p /= total;
        const DecisionFactors& chosen = obs.factors[obs.chosen];
        g[0] += chosen.s_self;
        g[1] += chosen.s_other;
        g[2] += chosen.conf_mass;
        for (std::size_t i = 0; i < obs.factors.size(); ++i) {
            g[0] -= probs[i] * obs.factors[i].s_self;
            g[1] -= probs[i] * obs.factors[i].s_other;
            g[2] -= probs[i] * obs.factors[i].conf_mass;
        }
    }
    if (options.dirichlet_alpha) {
        const double a = *options.dirichlet_alpha;
        for (int k = 0; k < 3; ++k) g[k] += (a - 1.0) / std::max(w[k], 1e-12);
    }
    return g;
}

// Euclidean projection onto {w >= 0, sum w = 1} by the sort-threshold rule.
std::array<double, 3> project_simplex(std::array<double, 3> v) {
    std::array<double, 3> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (int k = 0; k < 3; ++k) {
        cumulative += u[k];
        const double t = (cumulative - 1.0) / (k + 1);
        if (u[k] - t > 0.0) theta = t;
    }
    for (double& x : v) x = std::max(0.0, x - theta);
    const double sum = v[0] + v[1] + v[2];
    for (double& x : v) x /= sum;
    return v;
}

double l2_distance(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    double total = 0.0;
    for (int k = 0; k < 3; ++k) total += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(total);
}

// Engine output mapped to [0, 1) by the top 53 bits; identical on every
// conforming mt19937_64, unlike uniform_real_distribution.
double next_uniform(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

} // namespace

void validate(const Observation& obs) {
    if (obs.factors.empty()) {
        throw validation_error("observation has no candidate rows");
    }
    if (obs.chosen >= obs.factors.size()) {
        std::ostringstream msg;
        msg << "chosen index " << obs.chosen << " out of range for " << obs.factors.size()
            << " candidates";
        throw validation_error(msg.str());
    }
    for (const DecisionFactors& f : obs.factors) validate_factors(f);
}

double log_likelihood(std::span<const Observation> observations, const Weights& w) {
    if (observations.empty()) {
        throw validation_error("log_likelihood needs at least one observation");
    }
    validate(w);
    for (const Observation& obs : observations) validate(obs);
    return data_log_likelihood(observations, {w.alpha, w.beta, w.gamma});
}

FitResult fit_grid(std::span<const Observation> observations, double step,
                   const FitOptions& options) {
    if (!std::isfinite(step) || step <= 0.0 || step > 0.5) {
        throw validation_error("grid step must lie in (0, 0.5]");
    }
    require_informative(observations);

    const int imax = static_cast<int>(std::floor(1.0 / step + 1e-9));
    struct GridPoint {
        int i, j;
        double value;
    };
    std::vector<GridPoint> points;
    points.reserve(static_cast<std::size_t>(imax + 1) * (imax + 2) / 2);

    FitResult result;
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0, best_j = 0;
    for (int i = 0; i <= imax; ++i) {
        for (int j = 0; j + i <= imax; ++j) {
            const double alpha = i * step;
            const double beta = j * step;
            const std::array<double, 3> w{alpha, beta, std::max(0.0, 1.0 - alpha - beta)};
            const double value = objective(observations, w, options);
            points.push_back({i, j, value});
            if (value > best) {
                best = value;
                best_i = i;
                best_j = j;
                result.weights = {w[0], w[1], w[2]};
            }
        }
    }
    result.iterations = static_cast<int>(points.size());
    result.converged = true;
    result.identifiable = true;
    for (const GridPoint& p : points) {
        const bool adjacent = std::abs(p.i - best_i) <= 1 && std::abs(p.j - best_j) <= 1;
        if (!adjacent && p.value >= best - 1e-9) {
            result.identifiable = false;
            break;
        }
    }
    result.log_likelihood = data_log_likelihood(
        observations, {result.weights.alpha, result.weights.beta, result.weights.gamma});
    return result;
}

FitResult fit_gradient(std::span<const Observation> observations, int max_iterations,
                       double tolerance, const FitOptions& options) {
    if (max_iterations < 0) {
        throw validation_error("max_iterations must be nonnegative");
    }
    if (!std::isfinite(tolerance) || tolerance <= 0.0) {
        throw validation_error("tolerance must be a positive real");
    }
    const FitResult init = fit_grid(observations, 0.1, options);

    std::array<double, 3> w{init.weights.alpha, init.weights.beta, init.weights.gamma};
    double value = objective(observations, w, options);
    double eta = 0.1;
    bool converged = false;
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        const std::array<double, 3> g = objective_gradient(observations, w, options);
        const std::array<double, 3> cand =
            project_simplex({w[0] + eta * g[0], w[1] + eta * g[1], w[2] + eta * g[2]});
        if (l2_distance(cand, w) / eta < tolerance) {
            converged = true;
            ++iter;
            break;
        }
        const double cand_value = objective(observations, cand, options);
        if (cand_value > value) {
            w = cand;
            value = cand_value;
        } else {
            eta *= 0.5;
        }
    }

    FitResult result;
    result.weights = normalized({w[0], w[1], w[2]});
    result.iterations = iter;
    result.converged = converged;
    result.identifiable = init.identifiable;
    result.log_likelihood = data_log_likelihood(
        observations, {result.weights.alpha, result.weights.beta, result.weights.gamma});
    return result;
}

WeightShift detect_weight_shift(std::span<const Observation> observations, double step) {
    const std::size_t half = observations.size() / 2;
    if (half == 0) {
        throw fit_error("weight-shift detection needs at least two observations");
    }
    const FitResult first = fit_grid(observations.subspan(0, half), step);
    const FitResult second = fit_grid(observations.subspan(half), step);
    const double l1 = std::abs(first.weights.alpha - second.weights.alpha) +
                      std::abs(first.weights.beta - second.weights.beta) +
                      std::abs(first.weights.gamma - second.weights.gamma);
    return {first.weights, second.weights, l1, l1 > 0.3};
}

std::vector<Observation> synthesize_observations(std::span<const DecisionFactors> base_rows,
                                                 const Weights& planted, std::size_t count,
                                                 double jitter, std::uint64_t seed) {
    if (base_rows.empty()) {
        throw validation_error("synthesis needs at least one base factor row");
    }
    for (const DecisionFactors& f : base_rows) validate_factors(f);
    validate(planted);
    if (!std::isfinite(jitter) || jitter < 0.0) {
        throw validation_error("jitter must be a nonnegative real");
    }

    std::mt19937_64 engine(seed);
    const auto noise = [&] { return jitter * (2.0 * next_uniform(engine) - 1.0); };

    std::vector<Observation> out;
    out.reserve(count);
    std::vector<double> rhos;
    for (std::size_t n = 0; n < count; ++n) {
        Observation obs;
        obs.factors.reserve(base_rows.size());
        for (const DecisionFactors& base : base_rows) {
            DecisionFactors f;
            f.s_self = std::clamp(base.s_self + noise(), -1.0, 1.0);
            f.s_other = std::clamp(base.s_other + noise(), -1.0, 1.0);
            f.conf_mass = std::clamp(base.conf_mass + noise(), -1.0, 1.0);
            obs.factors.push_back(f);
        }
        rhos.clear();
        for (const DecisionFactors& f : obs.factors) {
            rhos.push_back(weighted_sum(f, planted.alpha, planted.beta, planted.gamma));
        }
        const std::vector<double> probs = softmax(rhos);
        const double u = next_uniform(engine);
        double cumulative = 0.0;
        obs.chosen = probs.size() - 1;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            cumulative += probs[i];
            if (u < cumulative) {
                obs.chosen = i;
                break;
            }
        }
        out.push_back(std::move(obs));
    }
    return out;
}

} // namespace moveselect
