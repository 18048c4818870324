#include <gtest/gtest.h>

#include "orbiroot/errors.hpp"
#include "orbiroot/session.hpp"
#include "support.hpp"

using namespace orbiroot;
using namespace orbiroot::testing;
using nlohmann::json;

namespace {

json base_doc() {
    return json::parse(R"({
        "config": {"genus": 0, "num_points": 2, "root_index": 4},
        "bundles": {
            "E": {"d": 1, "weights": ["1/4", "1/2"]},
            "K": [{"d": -1, "res": [3, 1]}, {"d": 2, "res": [0, 0]}]
        }})");
}

}  // namespace

TEST(Session, ParsesBothKinds) {
    auto s = parse_session(base_doc());
    EXPECT_EQ(s.config.root_index(), 4);
    const auto& E = std::get<ParBundle>(s.bundle("E"));
    EXPECT_EQ(E.summands()[0], par(1, {q(1, 4), q(1, 2)}));
    const auto& K = std::get<StackBundle>(s.bundle("K"));
    EXPECT_EQ(K.rank(), 2u);
    EXPECT_THROW(s.bundle("missing"), DomainError);
}

TEST(Session, RoundTripsThroughJson) {
    auto s = parse_session(base_doc());
    auto again = parse_session(session_to_json(s));
    EXPECT_EQ(again.config, s.config);
    EXPECT_EQ(again.bundles, s.bundles);
    EXPECT_EQ(session_to_json(again), session_to_json(s));
}

TEST(Session, WeightsAreFractionStrings) {
    auto s = parse_session(base_doc());
    auto out = bundle_to_json(s.bundle("E"));
    EXPECT_EQ(out[0]["weights"][0], "1/4");
    EXPECT_EQ(out[0]["weights"][1], "1/2");
}

TEST(Session, RejectsDecimalWeights) {
    auto cfg = OrbiConfig::make(0, 1, 2);
    EXPECT_THROW(parse_weight(cfg, json("0.5")), DomainError);
    EXPECT_THROW(parse_weight(cfg, json(0.5)), DomainError);
    EXPECT_THROW(parse_weight(cfg, json("5e-1")), DomainError);
    EXPECT_THROW(parse_weight(cfg, json("1/3")), DomainError);
    EXPECT_EQ(parse_weight(cfg, json("1/2")), q(1, 2));
    EXPECT_EQ(parse_weight(cfg, json("0")), q(0));
}

TEST(Session, WrittenDenominatorMustDivideR) {
    // 2/4 reduces to 1/2 but the written denominator 4 does not divide r = 2.
    EXPECT_THROW(parse_weight(OrbiConfig::make(0, 1, 2), json("2/4")), DomainError);
}

TEST(Session, RejectsMixedKinds) {
    auto cfg = OrbiConfig::make(0, 1, 2);
    auto doc = json::parse(R"([{"d": 0, "weights": ["1/2"]}, {"d": 0, "res": [1]}])");
    EXPECT_THROW(parse_bundle(cfg, doc), DomainError);
    EXPECT_THROW(parse_bundle(cfg, json::parse(R"({"d": 0, "weights": ["1/2"], "res": [1]})")), DomainError);
    EXPECT_THROW(parse_bundle(cfg, json::parse(R"({"d": 0, "res": [2]})")), DomainError);
    EXPECT_THROW(parse_bundle(cfg, json::parse(R"({"d": 0.5, "res": [1]})")), DomainError);
    EXPECT_THROW(parse_bundle(cfg, json::array()), DomainError);
}

TEST(Session, ConfigFieldErrors) {
    try {
        parse_raw_config(json::parse(R"({"genus": "zero", "root_index": 2})"));
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.field(), "genus");
    }
    auto doc = base_doc();
    doc["config"]["root_index"] = 0;
    EXPECT_THROW(parse_session(doc), ConfigError);
    doc = base_doc();
    doc["config"]["point_labels"] = {"a", "a"};
    EXPECT_THROW(parse_session(doc), ConfigError);
}

TEST(Session, MissingConfig) {
    EXPECT_THROW(parse_session(json::parse(R"({"bundles": {}})")), DomainError);
    EXPECT_THROW(load_session("/nonexistent/session.json"), DomainError);
}

TEST(Module, ParsesDefaultPrecision) {
    auto M = parse_module(json::parse(R"({"r": 3, "ambient_degrees": [1], "matrix": [["t^3 + 1"]]})"));
    EXPECT_EQ(M.ring().precision, 12);
    EXPECT_EQ(M.column_degrees(), std::vector<int>{1});
    EXPECT_THROW(parse_module(json::parse(R"({"r": 3, "ambient_degrees": [0], "matrix": [["1 + t"]]})")),
                 DomainError);
    EXPECT_THROW(parse_module(json::parse(R"({"r": 3, "N": 7, "ambient_degrees": [0], "matrix": [["1"]]})")),
                 DomainError);
}
