#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "moveselect/errors.hpp"
#include "moveselect/scenario.hpp"
#include "moveselect/serialize.hpp"
#include "moveselect/sim.hpp"
#include "test_paths.hpp"

using json = nlohmann::json;
using moveselect::Scenario;
using moveselect::parse_scenario;
using moveselect::schema_error;
using moveselect::validation_error;

namespace {

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

std::string bakery_text() {
    return moveselect::read_file(std::string(kScenarioDir) + "/bakery.json");
}

json bakery_doc() { return json::parse(bakery_text()); }

} // namespace

TEST_CASE("bakery fixture parses fully") {
    const Scenario s = parse_scenario(bakery_text());
    CHECK(s.agents.size() == 2);
    CHECK(s.agents[0].name == "baker");
    CHECK(s.agents[1].name == "client");
    CHECK(s.agents[0].weights == moveselect::Weights{0.1, 0.1, 0.8});
    CHECK(s.opening_agent == "client");
    CHECK(s.opening_move.label == "request-croissants");
    CHECK(s.max_turns == 8);
    CHECK(s.conv_types[s.active_index].name == "bakery");
    CHECK(near(s.priors[s.active_index], 0.98, 1e-12));

    SUBCASE("missing per-move conformity comes from the type at the space's state") {
        const auto* space = moveselect::find_move_space(s, "baker", "order");
        REQUIRE(space);
        REQUIRE(space->size() == 4);
        CHECK((*space)[0].conformity == 0.8);
        CHECK((*space)[1].conformity == -1.0);
        CHECK((*space)[2].conformity == 0.3);
        CHECK((*space)[3].conformity == 0.7);
    }
}

TEST_CASE("strict parsing diagnostics") {
    SUBCASE("unknown top-level field") {
        json doc = bakery_doc();
        doc["surprise"] = 1;
        CHECK_THROWS_WITH_AS(parse_scenario(doc.dump()), doctest::Contains("/surprise"),
                             schema_error);
    }

    SUBCASE("unknown nested field carries its path") {
        json doc = bakery_doc();
        doc["agents"][0]["mood"] = "sunny";
        CHECK_THROWS_WITH_AS(parse_scenario(doc.dump()), doctest::Contains("/agents/0/mood"),
                             schema_error);
    }

    SUBCASE("missing version") {
        json doc = bakery_doc();
        doc.erase("version");
        CHECK_THROWS_AS(parse_scenario(doc.dump()), schema_error);
    }

    SUBCASE("unsupported version") {
        json doc = bakery_doc();
        doc["version"] = 2;
        CHECK_THROWS_WITH_AS(parse_scenario(doc.dump()), doctest::Contains("version"),
                             schema_error);
    }

    SUBCASE("simplex violation names the constraint") {
        json doc = bakery_doc();
        doc["agents"][0]["weights"] = {0.5, 0.5, 0.5};
        CHECK_THROWS_WITH_AS(parse_scenario(doc.dump()), doctest::Contains("simplex"),
                             validation_error);
    }

    SUBCASE("malformed json names its line") {
        std::string text = bakery_text();
        text.insert(text.find("\"agents\""), "@");
        try {
            parse_scenario(text);
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }

    SUBCASE("duplicate move space") {
        json doc = bakery_doc();
        doc["move_spaces"].push_back(doc["move_spaces"][0]);
        CHECK_THROWS_WITH_AS(parse_scenario(doc.dump()), doctest::Contains("duplicate"),
                             schema_error);
    }

    SUBCASE("unknown active type") {
        json doc = bakery_doc();
        doc["active_type"] = "garage";
        CHECK_THROWS_AS(parse_scenario(doc.dump()), schema_error);
    }

    SUBCASE("space state outside the active type") {
        json doc = bakery_doc();
        doc["move_spaces"][0]["state"] = "mezzanine";
        CHECK_THROWS_AS(parse_scenario(doc.dump()), schema_error);
    }

    SUBCASE("priors must sum to one") {
        json doc = bakery_doc();
        doc["conv_types"][0]["prior"] = 0.5;
        CHECK_THROWS_WITH_AS(parse_scenario(doc.dump()), doctest::Contains("sum"),
                             validation_error);
    }

    SUBCASE("exactly two agents") {
        json doc = bakery_doc();
        doc["agents"].erase(1);
        CHECK_THROWS_AS(parse_scenario(doc.dump()), schema_error);
    }
}

TEST_CASE("weight normalization flag") {
    json doc = bakery_doc();
    doc["agents"][0]["weights"] = {1.0, 1.0, 2.0};

    CHECK_THROWS_AS(parse_scenario(doc.dump()), validation_error);

    doc["normalize_weights"] = true;
    const Scenario s = parse_scenario(doc.dump());
    CHECK(near(s.agents[0].weights.alpha, 0.25, 1e-12));
    CHECK(near(s.agents[0].weights.beta, 0.25, 1e-12));
    CHECK(near(s.agents[0].weights.gamma, 0.5, 1e-12));
}

TEST_CASE("scenario helpers") {
    const Scenario s = parse_scenario(bakery_text());

    CHECK(moveselect::scenario_agent(s).name == "baker");
    CHECK(moveselect::scenario_agent(s, "client").name == "client");
    CHECK_THROWS_AS(moveselect::scenario_agent(s, "stranger"), validation_error);

    CHECK(moveselect::scenario_state(s) == "order");
    CHECK(moveselect::scenario_state(s, "paid") == "paid");
    CHECK_THROWS_AS(moveselect::scenario_state(s, "mezzanine"), validation_error);

    SUBCASE("initial score matches the worked table") {
        const moveselect::ScoredMoveSpace space = moveselect::initial_score(s);
        REQUIRE(space.size() == 4);
        const std::vector<double> expected = {0.7646, -0.6694, 0.1201, 0.4727};
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(near(space.entries[i].rho, expected[i], 1e-3));
    }

    SUBCASE("initial factors feed the estimator") {
        const auto rows = moveselect::initial_factors(s);
        REQUIRE(rows.size() == 4);
        CHECK(near(rows[0].s_self, 0.3743, 1e-4));
        CHECK(near(rows[0].s_other, 1.0, 1e-9));
        CHECK(near(rows[0].conf_mass, 0.784, 1e-9));
    }

    SUBCASE("score at another state and agent") {
        const moveselect::ScoredMoveSpace space = moveselect::initial_score(s, "baker", "paid");
        REQUIRE(space.size() == 1);
        CHECK(space.entries[0].probability == 1.0);
        CHECK_THROWS_AS(moveselect::initial_score(s, "baker", "awaiting-payment"),
                        validation_error);
    }
}
