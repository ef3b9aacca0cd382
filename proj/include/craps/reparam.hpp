#pragma once

// Reparameterizations of the control level.
//
// The native theta is not comparable across models, so two common scales are
// used: eta = rho1(theta), the reciprocal of the probability of rolling a 7
// once a point is established (6 = no control, 8 = SS perfect control), and
// eta = rho2(theta), the expected gain of a one-unit pass-line bet
// (-7/495 = no control). Also the per-hand rate functions: gamma(theta) is
// the mean number of pass-line decisions per hand, delta(theta) the mean
// number of point rolls, and E[L] = gamma + delta.

#include <cmath>
#include <stdexcept>

#include "craps/dice_models.hpp"
#include "craps/roots.hpp"

namespace craps {

inline constexpr double kGainNoControl = -7.0 / 495.0;   // rho2 lower endpoint
inline constexpr double kGainCommonMax = 13.0 / 40.0;    // rho2 common upper endpoint

// Reciprocal of P(7 on a point roll): SS 24/(4-theta), WS 18/(3-2 theta).
inline double rho1(Model model, double theta) {
    require_theta(theta);
    return model == Model::ss ? 24.0 / (4.0 - theta) : 18.0 / (3.0 - 2.0 * theta);
}

inline double rho1_inv(Model model, double eta) {
    const double hi = model == Model::ss ? 8.0 : 18.0;
    if (!(eta >= 6.0 && eta <= hi))
        throw std::domain_error("rho1_inv: eta outside the model's achievable range");
    return model == Model::ss ? 4.0 - 24.0 / eta : 1.5 - 9.0 / eta;
}

// Expected pass-line gain as a parameter.
inline double rho2(Model model, double theta) { return expected_gain(model, theta); }

inline double rho2_inv(Model model, double eta) {
    if (!(eta >= kGainNoControl - 1e-15 && eta <= kGainCommonMax + 1e-15))
        throw std::domain_error("rho2_inv: eta outside the common range [-7/495, 13/40]");
    if (eta <= kGainNoControl) return 0.0;
    return brent_root([=](double t) { return expected_gain(model, t) - eta; },
                      0.0, 1.0, 1e-14);
}

struct RateFunctions {
    double gamma;  // mean pass-line decisions per hand = 1/p7o
    double delta;  // mean point rolls per hand = rho1(theta)
    double p7o;    // probability a decision ends in seven-out
};

inline double gamma_rate(Model model, double theta) {
    require_theta(theta);
    if (model == Model::ss) {
        const double d28 = 28.0 - theta;
        return 144.0 * (10.0 - theta) * (44.0 + theta) /
               ((4.0 - theta) * (8.0 + theta) * d28 * d28);
    }
    return 27.0 * (5.0 - 2.0 * theta) * (11.0 - 3.0 * theta) /
           ((3.0 - 2.0 * theta) * (196.0 - 85.0 * theta + 6.0 * theta * theta));
}

inline RateFunctions rate_functions(Model model, double theta) {
    RateFunctions out;
    out.gamma = gamma_rate(model, theta);
    out.delta = rho1(model, theta);
    out.p7o = 1.0 / out.gamma;
    return out;
}

} // namespace craps
