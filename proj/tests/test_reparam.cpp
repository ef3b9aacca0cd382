// Reparameterizations of the control weight: reciprocal seven probability
// (rho1), expected pass-line gain (rho2), and the hand-length rate functions
// gamma and delta built on top of them.

#include <catch2/catch_amalgamated.hpp>

#include "craps/dice_models.hpp"
#include "craps/hand_chain.hpp"
#include "craps/reparam.hpp"

using namespace craps;

TEST_CASE("rho1 closed forms and ranges", "[reparam]") {
    CHECK(rho1(Model::ss, 0.0) == Catch::Approx(6.0).margin(1e-15));
    CHECK(rho1(Model::ws, 0.0) == Catch::Approx(6.0).margin(1e-15));
    CHECK(rho1(Model::ss, 1.0) == Catch::Approx(8.0).margin(1e-15));
    CHECK(rho1(Model::ws, 1.0) == Catch::Approx(18.0).margin(1e-15));
    // rho1 is 1 / P(seven) under the point-roll distribution
    for (double theta : {0.1, 0.4, 0.9}) {
        CHECK(rho1(Model::ss, theta) ==
              Catch::Approx(1.0 / point_pmf(Model::ss, 6, theta)(7)).margin(1e-12));
        CHECK(rho1(Model::ws, theta) ==
              Catch::Approx(1.0 / point_pmf(Model::ws, 4, theta)(7)).margin(1e-12));
    }
}

TEST_CASE("rho1 round trips through its inverse", "[reparam]") {
    for (Model m : {Model::ss, Model::ws}) {
        for (int k = 0; k <= 20; ++k) {
            const double theta = k / 20.0;
            const double eta = rho1(m, theta);
            CHECK(rho1_inv(m, eta) == Catch::Approx(theta).margin(1e-12));
        }
    }
    CHECK_THROWS_AS(rho1_inv(Model::ss, 5.9), std::domain_error);
    CHECK_THROWS_AS(rho1_inv(Model::ss, 8.1), std::domain_error);
    CHECK_THROWS_AS(rho1_inv(Model::ws, 18.2), std::domain_error);
}

TEST_CASE("rho2 equals the expected gain and round trips", "[reparam]") {
    for (Model m : {Model::ss, Model::ws}) {
        for (int k = 0; k <= 20; ++k) {
            const double theta = k / 20.0;
            CHECK(rho2(m, theta) == Catch::Approx(expected_gain(m, theta)).margin(1e-15));
        }
        // the inverse is defined on the common gain range, which the ws
        // model exits partway through [0, 1]
        for (int k = 0; k <= 20; ++k) {
            const double theta = k / 20.0;
            const double eta = rho2(m, theta);
            if (eta > kGainCommonMax) continue;
            CHECK(rho2_inv(m, eta) == Catch::Approx(theta).margin(1e-10));
        }
    }
    CHECK(kGainNoControl == Catch::Approx(-7.0 / 495).margin(1e-18));
    CHECK(kGainCommonMax == Catch::Approx(13.0 / 40).margin(1e-18));
    CHECK_THROWS_AS(rho2_inv(Model::ss, kGainNoControl - 1e-6), std::domain_error);
    CHECK_THROWS_AS(rho2_inv(Model::ss, 13.0 / 40 + 1e-6), std::domain_error);
    // the common range cap applies to WS too, even though its native max is higher
    CHECK_NOTHROW(rho2_inv(Model::ws, 13.0 / 40));
    CHECK_THROWS_AS(rho2_inv(Model::ws, 13.0 / 40 + 1e-6), std::domain_error);
}

TEST_CASE("rho2 break-even values of eta = rho1", "[reparam]") {
    // control weight at which the pass-line gain crosses zero, expressed as
    // the reciprocal seven probability
    CHECK(rho1(Model::ss, break_even_theta(Model::ss)) == Catch::Approx(6.06755).margin(1e-4));
    CHECK(rho1(Model::ws, break_even_theta(Model::ws)) == Catch::Approx(6.12790).margin(1e-4));
}

TEST_CASE("gamma and delta rate functions", "[reparam]") {
    for (Model m : {Model::ss, Model::ws}) {
        CHECK(gamma_rate(m, 0.0) == Catch::Approx(495.0 / 196).margin(1e-13));
        for (int k = 0; k <= 10; ++k) {
            const double theta = k / 10.0;
            const RateFunctions rf = rate_functions(m, theta);
            CHECK(rf.gamma == Catch::Approx(gamma_rate(m, theta)).margin(1e-15));
            CHECK(rf.delta == Catch::Approx(rho1(m, theta)).margin(1e-15));
            CHECK(rf.p7o == Catch::Approx(1.0 / rf.gamma).margin(1e-15));
            // decisions per hand plus point rolls per hand give the mean length
            CHECK(rf.gamma + rf.delta ==
                  Catch::Approx(mean_hand_length(m, theta)).margin(1e-10));
        }
    }
}
