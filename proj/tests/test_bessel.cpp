#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rpq/bessel.hpp"

using namespace rpq;

TEST_CASE("reduced series leading coefficients", "[bessel]") {
    const double p = 0.9, q = 0.5, s = 1.0;
    for (int variant : {1, 2}) {
        auto rb = reduced_bessel(p, q, cplx(s), variant, 10);
        REQUIRE(std::abs(rb.g.coef[0] - cplx(1.0)) < 1e-15);
        REQUIRE(std::abs(rb.g.coef[1]) == 0.0); // even series
        const double D1 = (p - q) * (std::pow(p, s + 1) - std::pow(q, s + 1));
        const double w1 = variant == 1 ? 1.0 : std::pow(q / p, s + 1);
        // n = 1 weight: (-1) w_1 / (4 D_1)
        REQUIRE(std::abs(rb.g.coef[2] - cplx(-w1 / (4.0 * D1))) < 1e-14);
    }
}

TEST_CASE("prefactor products telescope", "[bessel]") {
    const double p = 0.9, q = 0.5;
    for (double s : {0.5, 1.0, 2.3}) {
        for (int K = 1; K <= 12; ++K) {
            const cplx ratio =
                bessel_bk(p, q, cplx(s + 1.0), K) / bessel_bk(p, q, cplx(s), K);
            const cplx expect((std::pow(p, s + K) - std::pow(q, s + K)) /
                              (std::pow(p, s) - std::pow(q, s)));
            REQUIRE(std::abs(ratio - expect) < 1e-12 * std::abs(expect));
        }
    }
}

TEST_CASE("first and second kind are proportional through a shifted product",
          "[bessel]") {
    const ResidualMap suite = bessel_identity_suite(0.9, 0.5, cplx(1.0), cplx(0.3, 0.0));
    INFO("s=1 z=0.3 p=0.9 q=0.5");
    REQUIRE(suite.at("first_second_product") < 1e-8);
    REQUIRE(suite.at("half_step_ladder") < 1e-8);
    REQUIRE(suite.at("three_term") < 1e-8);
}

TEST_CASE("recurrence identities at a second operating point", "[bessel]") {
    const ResidualMap suite = bessel_identity_suite(0.95, 0.6, cplx(1.0), cplx(0.2, 0.0));
    for (const auto& [key, v] : suite) {
        INFO(key);
        REQUIRE(v < 1e-8);
    }
}

TEST_CASE("complex order through the principal branch", "[bessel]") {
    const cplx s(1.0, 0.4);
    const ResidualMap suite = bessel_identity_suite(0.9, 0.5, s, cplx(0.25, 0.1));
    for (const auto& [key, v] : suite) {
        INFO(key);
        REQUIRE(v < 1e-8);
    }
    REQUIRE(std::abs(cpow(2.0, cplx(0.0, 1.0)) -
                     std::exp(cplx(0.0, std::log(2.0)))) < 1e-15);
    REQUIRE_THROWS_AS(cpow(-2.0, cplx(0.5, 0.0)), DomainError);
}

TEST_CASE("full function assembles prefactor and reduced series", "[bessel]") {
    const double p = 0.9, q = 0.5;
    const cplx s(1.0), z(0.3, 0.0);
    for (int variant : {1, 2}) {
        auto rb = reduced_bessel(p, q, s, variant, 40);
        const cplx expect = bessel_bk(p, q, s + cplx(1.0), 20) * eval_reduced(rb, z);
        REQUIRE(std::abs(bessel_j(p, q, s, z, variant) - expect) < 1e-14);
    }
}

TEST_CASE("ordering constraints are enforced", "[bessel]") {
    REQUIRE_THROWS_AS(bessel_identity_suite(0.5, 0.9, cplx(1.0), cplx(0.3, 0.0)),
                      DomainError);
}
