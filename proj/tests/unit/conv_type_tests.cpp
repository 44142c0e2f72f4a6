#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "moveselect/conv_type.hpp"
#include "moveselect/errors.hpp"

using moveselect::AdvanceResult;
using moveselect::ConvTypeBelief;
using moveselect::ConversationalType;
using moveselect::advance;
using moveselect::bayes_update;
using moveselect::conformity;
using moveselect::is_final;
using moveselect::validation_error;

namespace {

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

// Two-candidate belief whose types both contain the shared state "order"
// and give the move "m" the supplied conformities via overrides.
ConvTypeBelief two_candidate_belief(double prior_active, double d_active, double d_other) {
    ConversationalType active = fixtures::bakery_type();
    active.conformity_overrides["m"] = d_active;

    ConversationalType other;
    other.name = "other";
    other.states = {"s"};
    other.init_state = "s";
    other.final_states = {"s"};
    other.conformity_overrides["m"] = d_other;

    ConvTypeBelief belief;
    belief.candidates.push_back({active, prior_active});
    belief.candidates.push_back({other, 1.0 - prior_active});
    belief.active_index = 0;
    return belief;
}

} // namespace

TEST_CASE("conversational type validation") {
    CHECK_NOTHROW(moveselect::validate(fixtures::bakery_type()));

    ConversationalType bad = fixtures::bakery_type();
    bad.init_state = "nowhere";
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);

    bad = fixtures::bakery_type();
    bad.final_states = {"nowhere"};
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);

    bad = fixtures::bakery_type();
    bad.final_states.clear();
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);

    bad = fixtures::bakery_type();
    bad.transitions.push_back({"order", "teleport", "void"});
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);

    bad = fixtures::bakery_type();
    bad.transitions.push_back({"order", "give-price", "paid"});
    CHECK_THROWS_WITH_AS(moveselect::validate(bad), doctest::Contains("duplicate transition"),
                         validation_error);

    bad = fixtures::bakery_type();
    bad.conformity_overrides["loud-singing"] = 1.5;
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);
}

TEST_CASE("conformity examples") {
    ConversationalType ct = fixtures::bakery_type();
    ct.conformity_overrides["price-quote"] = 0.8;
    ct.conformity_overrides["eject-customer"] = -1.0;

    CHECK(conformity(ct, "price-quote", "order") == 0.8);
    CHECK(conformity(ct, "eject-customer", "order") == -1.0);
    CHECK(conformity(ct, "request-croissants", "order") == 1.0);
    CHECK(conformity(ct, "sing", "order") == -1.0);
    CHECK_THROWS_AS(conformity(ct, "pay", "nowhere"), validation_error);
}

TEST_CASE("advance examples") {
    const ConversationalType ct = fixtures::bakery_type();

    CHECK(advance(ct, "order", "give-price") == AdvanceResult{"awaiting-payment", false});
    CHECK(advance(ct, "order", "sing") == AdvanceResult{"order", true});
    CHECK(advance(ct, "paid", "thank") == AdvanceResult{"done", false});
    CHECK_THROWS_AS(advance(ct, "nowhere", "pay"), validation_error);

    SUBCASE("determinism and closure over states") {
        std::mt19937 rng(5150);
        const std::vector<std::string> labels = {"request-croissants", "give-price", "pay",
                                                 "thank", "sing"};
        std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
        std::string state = ct.init_state;
        for (int i = 0; i < 1000; ++i) {
            const std::string& label = labels[pick(rng)];
            const AdvanceResult step = advance(ct, state, label);
            CHECK(advance(ct, state, label) == step);
            CHECK(ct.has_state(step.state));
            state = step.state;
        }
    }
}

TEST_CASE("is_final examples") {
    const ConversationalType ct = fixtures::bakery_type();
    CHECK(is_final(ct, "done"));
    CHECK_FALSE(is_final(ct, "order"));
    CHECK(is_final(fixtures::single_state_type("lobby"), "idle"));
    CHECK_THROWS_AS(is_final(ct, "nowhere"), validation_error);
}

TEST_CASE("belief validation") {
    CHECK_NOTHROW(moveselect::validate(fixtures::bakery_belief()));

    ConvTypeBelief bad = fixtures::bakery_belief();
    bad.candidates[0].probability = 0.5;
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);

    bad = fixtures::bakery_belief();
    bad.active_index = 7;
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);

    bad.candidates.clear();
    bad.active_index = 0;
    CHECK_THROWS_AS(moveselect::validate(bad), validation_error);
}

TEST_CASE("bayes update examples") {
    const std::vector<std::string> states = {"order", "s"};

    SUBCASE("documented two-candidate posterior") {
        const ConvTypeBelief prior = two_candidate_belief(0.98, 0.8, 0.0);
        const ConvTypeBelief post = bayes_update(prior, "m", states);
        CHECK(near(post.candidates[0].probability, 0.9888, 1e-4));
        CHECK(near(post.candidates[1].probability, 0.0112, 1e-4));
        CHECK(post.active_index == prior.active_index);
    }

    SUBCASE("zero prior stays zero") {
        const ConvTypeBelief prior = two_candidate_belief(1.0, -0.5, 1.0);
        const ConvTypeBelief post = bayes_update(prior, "m", states);
        CHECK(post.candidates[0].probability == 1.0);
        CHECK(post.candidates[1].probability == 0.0);
    }

    SUBCASE("identical conformity leaves the prior alone") {
        const ConvTypeBelief prior = two_candidate_belief(0.7, 0.4, 0.4);
        const ConvTypeBelief post = bayes_update(prior, "m", states);
        CHECK(near(post.candidates[0].probability, 0.7, 1e-12));
        CHECK(near(post.candidates[1].probability, 0.3, 1e-12));
    }

    SUBCASE("state a candidate lacks counts as fully non-conforming") {
        ConvTypeBelief prior = two_candidate_belief(0.98, 1.0, 1.0);
        const std::vector<std::string> mixed = {"order", "order"};
        const ConvTypeBelief post = bayes_update(prior, "m", mixed);
        const double z = 0.98 * 1.0 + 0.02 * 0.01;
        CHECK(near(post.candidates[0].probability, 0.98 / z, 1e-12));
    }

    SUBCASE("wrong state count is rejected") {
        const ConvTypeBelief prior = two_candidate_belief(0.98, 0.8, 0.0);
        const std::vector<std::string> one = {"order"};
        CHECK_THROWS_AS(bayes_update(prior, "m", one), validation_error);
    }
}

TEST_CASE("bayes update properties") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> conf(-1.0, 1.0);
    const std::vector<std::string> states = {"order", "s"};

    for (int i = 0; i < 1000; ++i) {
        const double p = unit(rng);
        const ConvTypeBelief prior = two_candidate_belief(p, conf(rng), conf(rng));
        const ConvTypeBelief post = bayes_update(prior, "m", states);
        double sum = 0.0;
        for (const auto& c : post.candidates) {
            CHECK(c.probability >= 0.0);
            CHECK(c.probability <= 1.0);
            sum += c.probability;
        }
        CHECK(near(sum, 1.0, 1e-9));
    }

    SUBCASE("uniform likelihood is the identity") {
        for (int i = 0; i < 1000; ++i) {
            const double p = unit(rng);
            const double d = conf(rng);
            const ConvTypeBelief prior = two_candidate_belief(p, d, d);
            const ConvTypeBelief post = bayes_update(prior, "m", states);
            CHECK(near(post.candidates[0].probability, p, 1e-9));
            CHECK(near(post.candidates[1].probability, 1.0 - p, 1e-9));
        }
    }
}
