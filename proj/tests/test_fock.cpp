#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "rpq/fock.hpp"

using namespace rpq;
using rpqtest::make;

TEST_CASE("ladder matrices carry square-root structure entries", "[fock]") {
    auto js = make(Kind::jagannathan_srinivasa, 1.2, 0.7);
    const int D = 8;
    auto ops = fock_operators(js, D);
    for (int i = 0; i + 1 < D; ++i) {
        REQUIRE(ops.a(i, i + 1) ==
                Catch::Approx(std::sqrt(rpq_number(js, i + 1))).epsilon(1e-14));
        REQUIRE(ops.ad(i + 1, i) == ops.a(i, i + 1));
        REQUIRE(ops.n(i, i) == i);
    }
    REQUIRE(ops.a.rows() == D);
}

TEST_CASE("defining relations hold at truncation 32 for every kind", "[fock]") {
    for (const auto& spec : rpqtest::canonical_specs()) {
        INFO(kind_name(spec.kind));
        auto rm = fock_algebra_residuals(spec, 32);
        REQUIRE(rm.count("number_lower") == 1);
        REQUIRE(rm.count("structure_raise") == 1);
        for (const auto& [key, v] : rm) {
            INFO(key);
            REQUIRE(v < 1e-12);
        }
    }
    // the extra growing-lattice point stresses the relative scaling
    auto kh = make(Kind::kalnins, 1.0, 0.5, {{"l", 1.0}, {"lambda", 0.0}});
    for (const auto& [key, v] : fock_algebra_residuals(kh, 32)) {
        INFO(key);
        REQUIRE(v < 1e-12);
    }
}

TEST_CASE("second catalogued relation for the two-parameter families", "[fock]") {
    for (auto kind : {Kind::jagannathan_srinivasa, Kind::chakrabarti_jagannathan,
                      Kind::quesne}) {
        auto spec = make(kind, kind == Kind::quesne ? 1.1 : 1.2,
                         kind == Kind::quesne ? 0.9 : 0.7);
        auto rm = fock_algebra_residuals(spec, 24);
        INFO(kind_name(kind));
        REQUIRE(rm.count("fg_relation_dual") == 1);
        REQUIRE(rm.at("fg_relation_dual") < 1e-12);
    }
    REQUIRE(fock_algebra_residuals(make(Kind::heine_q, 1.0, 0.5), 16)
                .count("fg_relation_dual") == 0);
}

TEST_CASE("rational kind exposes structure checks without a scalar recursion",
          "[fock]") {
    auto rm = fock_algebra_residuals(rpqtest::canonical_specs().back(), 32);
    REQUIRE(rm.count("fg_relation") == 0);
    REQUIRE(rm.at("structure_lower") < 1e-12);
}

TEST_CASE("negative structure values are rejected", "[fock]") {
    auto bad = make(Kind::baloitcha, 0.9, 0.5,
                    {{"nu", 1.0}, {"alpha", 1.0}, {"beta", 0.0}, {"gamma", -5.0}});
    REQUIRE_THROWS_AS(fock_operators(bad, 8), DomainError);
}

TEST_CASE("dimension bounds", "[fock]") {
    auto js = make(Kind::jagannathan_srinivasa, 1.2, 0.7);
    REQUIRE_THROWS_AS(fock_operators(js, 1), RangeError);
    REQUIRE_THROWS_AS(fock_operators(js, max_fock_dim + 1), RangeError);
}

TEST_CASE("oscillator report reproduces the closed-form spectrum", "[fock]") {
    auto ka = make(Kind::kalnins, 1.0, 2.0, {{"l", 1.0}, {"lambda", 0.0}});
    auto rep = oscillator_report(ka, 16);
    REQUIRE(rep.spectrum_residual < 1e-10);
    auto phi = [](int n) { return 1.0 - std::pow(2.0, -n); };
    for (const auto& lvl : rep.levels) {
        const double expect = 0.5 * (phi(lvl.n) + phi(lvl.n + 1));
        REQUIRE(lvl.energy == Catch::Approx(expect).epsilon(1e-12));
        // with the default units the two variances coincide with the energy
        REQUIRE(lvl.dx2 == Catch::Approx(expect).epsilon(1e-12));
        REQUIRE(lvl.dp2 == Catch::Approx(expect).epsilon(1e-12));
        REQUIRE(lvl.product == Catch::Approx(expect * expect).epsilon(1e-12));
    }
    REQUIRE_THROWS_AS(oscillator_report(make(Kind::heine_q, 1.0, 0.5), 8),
                      UnsupportedKind);
}

TEST_CASE("lattice sites stay inside the spectral bound for q > 1", "[fock]") {
    auto ka = make(Kind::kalnins, 1.0, 2.0, {{"l", 1.0}, {"lambda", 0.0}});
    auto d = kalnins_site_diagnostics(ka, 64);
    REQUIRE(d.bound == Catch::Approx(1.0));
    for (double x : d.x) REQUIRE(x <= d.bound + 1e-12);
    REQUIRE(d.max_x <= d.bound + 1e-12);
    REQUIRE(d.max_x > 0.99); // the sites accumulate at the bound
}

TEST_CASE("growing lattice is log-concave with tail ratio sqrt(q) for q < 1",
          "[fock]") {
    auto kh = make(Kind::kalnins, 1.0, 0.5, {{"l", 1.0}, {"lambda", 0.0}});
    auto d = kalnins_site_diagnostics(kh, 64);
    REQUIRE(d.worst_log_concavity <= 1e-12);
    REQUIRE(d.tail_ratio == Catch::Approx(std::sqrt(0.5)).margin(1e-8));
    REQUIRE(std::isnan(d.bound));
}
