#include <doctest.h>

#include <cmath>

#include "steerkit/catalog.hpp"
#include "steerkit/json_io.hpp"
#include "steerkit/run.hpp"

using namespace steerkit;

namespace {

bool specs_match(const LsiSpec& a, const LsiSpec& b) {
    if (a.layout.dims != b.layout.dims || a.trusted_parties != b.trusted_parties) return false;
    if (a.settings.size() != b.settings.size() || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.settings.size(); ++i)
        if (a.settings[i].label != b.settings[i].label || a.settings[i].kind != b.settings[i].kind ||
            a.settings[i].outcomes != b.settings[i].outcomes)
            return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].setting != b.terms[i].setting ||
            a.terms[i].outcome_index != b.terms[i].outcome_index ||
            a.terms[i].weight != b.terms[i].weight)
            return false;
        if (!approx_equal(a.terms[i].trusted_op, b.terms[i].trusted_op, 1e-15)) return false;
    }
    if (a.constant_term != b.constant_term) return false;
    if (a.constant_op.empty() != b.constant_op.empty()) return false;
    if (!a.constant_op.empty() && !approx_equal(a.constant_op, b.constant_op, 1e-15)) return false;
    return true;
}

}  // namespace

TEST_CASE("lsi spec json round trip") {
    const LsiSpec original = restrict_to_direction(*ghz_type().full, {0});
    const Json doc = spec_to_json(original);
    const auto parsed = parse_spec_json(doc.dump());
    REQUIRE(std::holds_alternative<LsiSpec>(parsed));
    CHECK(specs_match(original, std::get<LsiSpec>(parsed)));
}

TEST_CASE("lsi spec round trip with outcome settings keeps the threshold") {
    const CatalogEntry entry = nghz_global(4, 2);
    const auto parsed = parse_spec_json(spec_to_json(*entry.lsi).dump());
    REQUIRE(std::holds_alternative<LsiSpec>(parsed));
    CHECK(specs_match(*entry.lsi, std::get<LsiSpec>(parsed)));
    CHECK(one_way_threshold(std::get<LsiSpec>(parsed)).beta ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-11));
}

TEST_CASE("state descriptors survive a json round trip") {
    for (const StateSpec& spec : {StateSpec::werner(0.3, 3), StateSpec::noisy_ghz(0.7, 4),
                                  StateSpec::custom_state(make_state(StateSpec::max_entangled(2)))}) {
        const StateSpec back = state_spec_from_json(to_json(spec), "");
        CHECK(back.family == spec.family);
        CHECK(back.params == spec.params);
        CHECK(approx_equal(make_state(back), make_state(spec), 1e-15));
    }
}

TEST_CASE("full spec json round trip preserves the realized operator") {
    for (const CatalogEntry& entry : {chsh_accompanied(), svetlichny(), pironio(3)}) {
        const Json doc = spec_to_json(*entry.full);
        const auto parsed = parse_spec_json(doc.dump());
        REQUIRE(std::holds_alternative<FullOperatorSpec>(parsed));
        const FullOperatorSpec& back = std::get<FullOperatorSpec>(parsed);
        CHECK(approx_equal(realize_full_operator(back), realize_full_operator(*entry.full), 1e-15));
        // And the serialization itself is stable.
        CHECK(spec_to_json(back) == doc);
    }
}

TEST_CASE("chsh json fixture reproduces the threshold through the parser") {
    const Json doc = spec_to_json(*chsh_accompanied().full);
    const auto parsed = parse_spec_json(doc.dump());
    const ThresholdReport r = two_way_threshold(std::get<FullOperatorSpec>(parsed));
    CHECK(r.beta_overall == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("empty term list leaves the constant term as the threshold") {
    const std::string text = R"({
        "type": "lsi",
        "layout": {"dims": [2, 2]},
        "trusted_parties": [1],
        "settings": [],
        "terms": [],
        "constant_term": 1.25
    })";
    const auto parsed = parse_spec_json(text);
    const DirectionalThreshold dir = one_way_threshold(std::get<LsiSpec>(parsed));
    CHECK(dir.beta == doctest::Approx(1.25));
    CHECK(dir.gamma == doctest::Approx(1.25));
}

TEST_CASE("schema errors carry a json-pointer path") {
    try {
        parse_spec_json(std::string(R"({"type": "lsi", "layout": {"dims": [2, 2]}})"));
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("trusted_parties") != std::string::npos);
    }

    try {
        parse_spec_json(std::string(R"({
            "type": "lsi",
            "layout": {"dims": [2, 2]},
            "trusted_parties": [1],
            "settings": [{"label": "A", "kind": "two-value"}],
            "terms": [{"setting": "A", "weight": "heavy", "trusted_op": [[[1,0]]]}]
        })"));
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path == "/terms/0/weight");
    }
}

TEST_CASE("non-hermitian trusted operators are invariant violations") {
    const std::string text = R"({
        "type": "lsi",
        "layout": {"dims": [2, 2]},
        "trusted_parties": [1],
        "settings": [{"label": "A", "kind": "two-value"}],
        "terms": [{"setting": "A", "weight": 1.0,
                   "trusted_op": [[[0,0],[1,0]],[[0,0],[0,0]]]}]
    })";
    CHECK_THROWS_AS(parse_spec_json(text), NotHermitianError);
}

TEST_CASE("run: threshold of a catalog entry") {
    RunRequest req;
    req.command = "threshold";
    req.entry = "svetlichny";
    const RunReport report = run(req);
    CHECK(report.exit_code == 0);
    CHECK(report.document["results"]["threshold"]["beta_overall"].get<double>() ==
          doctest::Approx(4.0).epsilon(1e-11));
    CHECK(report.text.find("beta_overall") != std::string::npos);
}

TEST_CASE("run: certify mermin on the noiseless ghz mixture") {
    RunRequest req;
    req.command = "certify";
    req.entry = "mermin";
    req.state_family = "noisy-ghz";
    req.parameters = {{"v", 1.0}};
    const RunReport report = run(req);
    CHECK(report.exit_code == 0);
    CHECK(report.document["results"]["certify"]["expectation"].get<double>() ==
          doctest::Approx(4.0).epsilon(1e-10));
    CHECK(report.document["results"]["certify"]["violated"].get<bool>());
}

TEST_CASE("run: expect-violation failures map to exit code 2") {
    RunRequest req;
    req.command = "certify";
    req.entry = "mermin";
    req.state_family = "noisy-ghz";
    req.parameters = {{"v", 0.3}};
    req.expect_violation = true;
    const RunReport report = run(req);
    CHECK(report.exit_code == 2);
    CHECK_FALSE(report.document["results"]["certify"]["violated"].get<bool>());
}

TEST_CASE("run: identical requests give identical reports modulo timing") {
    RunRequest req;
    req.command = "threshold";
    req.entry = "ghz";
    Json a = run(req).document;
    Json b = run(req).document;
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("run: scan sweeps the entry's default parameter") {
    RunRequest req;
    req.command = "scan";
    req.entry = "ghz-weighted";
    req.state_family = "noisy-ghz";
    req.parameters = {{"v", 1.0}};
    req.range = {{0.0, 2.0}};
    req.points = 21;
    const RunReport report = run(req);
    CHECK(report.document["results"]["scan"]["refined_best"]["parameter"].get<double>() ==
          doctest::Approx(0.709).epsilon(0.005));
}

TEST_CASE("run: haar command reports estimate, analytic value and bounds") {
    RunRequest req;
    req.command = "haar";
    req.state_family = "werner";
    req.parameters = {{"w", 0.5}, {"d", 2.0}};
    req.constraint = "plain";
    req.samples = 2000;
    req.seed = 7;
    const RunReport report = run(req);
    const Json& h = report.document["results"]["haar"];
    CHECK(std::abs(h["mean"].get<double>() - 0.25) <= 5.0 * h["std_error"].get<double>());
    CHECK(h["analytic"].get<double>() == doctest::Approx(0.25));
    CHECK(h["bounds"]["beta"].get<double>() == doctest::Approx(0.75));
}

TEST_CASE("run: list names every catalog entry") {
    RunRequest req;
    req.command = "list";
    const RunReport report = run(req);
    CHECK(report.document["results"]["entries"].size() == 16);
}

TEST_CASE("run: unconsumed parameters are rejected") {
    RunRequest req;
    req.command = "threshold";
    req.entry = "mermin";
    req.parameters = {{"typo", 1.0}};
    CHECK_THROWS_AS(run(req), InvalidParameterError);
}
