#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "rpq/spec.hpp"

using namespace rpq;
using rpqtest::make;

TEST_CASE("kind names round-trip", "[spec_io]") {
    for (const auto& spec : rpqtest::canonical_specs())
        REQUIRE(kind_from_string(kind_name(spec.kind)) == spec.kind);
    REQUIRE_THROWS_AS(kind_from_string("no_such_kind"), UnsupportedKind);
}

TEST_CASE("json serialization round-trips every canonical spec", "[spec_io]") {
    for (const auto& spec : rpqtest::canonical_specs()) {
        INFO(kind_name(spec.kind));
        const DeformationSpec back = spec_from_json(to_json(spec));
        REQUIRE(back.kind == spec.kind);
        REQUIRE(back.p == spec.p);
        REQUIRE(back.q == spec.q);
        REQUIRE(back.extras == spec.extras);
    }
}

TEST_CASE("parser accepts the documented shape", "[spec_io]") {
    const auto j = nlohmann::json::parse(R"({
        "kind": "jagannathan_srinivasa",
        "p": 2.0,
        "q": 1.0
    })");
    const DeformationSpec s = spec_from_json(j);
    REQUIRE(s.kind == Kind::jagannathan_srinivasa);
    REQUIRE(s.p == 2.0);
    REQUIRE(s.q == 1.0);
    REQUIRE(s.extras.empty());
}

TEST_CASE("defaults fill in omitted parameters", "[spec_io]") {
    const DeformationSpec s =
        spec_from_json(nlohmann::json::parse(R"({"kind": "heine_q"})"));
    REQUIRE(s.p == 1.0);
    REQUIRE(s.q == 0.5);
}

TEST_CASE("unknown fields are rejected, not ignored", "[spec_io]") {
    REQUIRE_THROWS_AS(spec_from_json(nlohmann::json::parse(
                          R"({"kind": "heine_q", "Q": 0.4})")),
                      ConfigError);
    REQUIRE_THROWS_AS(spec_from_json(nlohmann::json::parse(
                          R"({"kind": "heine_q", "extras": {"resolution": 9}})")),
                      ConfigError);
    REQUIRE_THROWS_AS(spec_from_json(nlohmann::json::parse(
                          R"({"kind": "kalnins", "q": 2.0, "extras": {"l": 1, "mu": 3}})")),
                      ConfigError);
    REQUIRE_THROWS_AS(spec_from_json(nlohmann::json::parse(
                          R"({"kind": "heine_q", "q": "half"})")),
                      ConfigError);
}

TEST_CASE("admissibility checks", "[spec_io]") {
    REQUIRE_THROWS_AS(make(Kind::jagannathan_srinivasa, 1.2, 1.2), DomainError);
    REQUIRE_THROWS_AS(make(Kind::heine_q, 1.0, 1.0), DomainError);
    REQUIRE_THROWS_AS(make(Kind::heine_q, 1.0, -0.5), DomainError);
    REQUIRE_THROWS_AS(make(Kind::quesne, 2.0, 0.5), DomainError);       // pq = 1
    REQUIRE_THROWS_AS(make(Kind::kalnins, 1.0, 2.0, {{"l", 0.0}}), DomainError);
    REQUIRE_THROWS_AS(make(Kind::calogero_vasiliev, 1.0, 0.5, {{"nu", -0.5}}),
                      DomainError);
    REQUIRE_THROWS_AS(make(Kind::chung, 1.0, 1.0, {{"alpha", 0.5}}), DomainError);
    REQUIRE_NOTHROW(make(Kind::chung, 1.0, 1.0, {{"alpha", 1.0}}));
    REQUIRE_THROWS_AS(make(Kind::baloitcha, -0.9, 0.5), DomainError);
}

TEST_CASE("indexed coefficient lists for the rational family", "[spec_io]") {
    DeformationSpec rat;
    rat.kind = Kind::rational_rRs;
    rat.p = 0.9;
    rat.q = 0.5;
    SECTION("contiguous 1-based lists are accepted") {
        rat.extras = {{"a1", 1.0}, {"b1", 0.3}, {"a2", 0.5}, {"b2", 0.2}};
        REQUIRE_NOTHROW(validate(rat));
        REQUIRE(indexed_extras(rat, "a") == std::vector<double>{1.0, 0.5});
    }
    SECTION("gaps are rejected") {
        rat.extras = {{"a1", 1.0}, {"b1", 0.3}, {"c2", 0.4}};
        REQUIRE_THROWS_AS(validate(rat), ConfigError);
    }
    SECTION("mismatched pair counts are rejected") {
        rat.extras = {{"a1", 1.0}};
        REQUIRE_THROWS_AS(validate(rat), ConfigError);
    }
    SECTION("leading zeros are not valid indices") {
        rat.extras = {{"a01", 1.0}, {"b01", 0.3}};
        REQUIRE_THROWS_AS(validate(rat), ConfigError);
    }
}

TEST_CASE("file round trip", "[spec_io]") {
    const std::string path = "spec_io_roundtrip_tmp.json";
    auto spec = make(Kind::hounkonnou_ngompe, 1.2, 0.8,
                     {{"mu", 1.0}, {"nu", 1.5}, {"h", 1.0}});
    save_spec(spec, path);
    const DeformationSpec back = load_spec(path);
    std::remove(path.c_str());
    REQUIRE(back.kind == spec.kind);
    REQUIRE(back.extras == spec.extras);
    REQUIRE_THROWS_AS(load_spec("definitely_missing_file.json"), ConfigError);
}
