#pragma once

// Monte Carlo machinery: inverse-method dice-total samplers for each model
// and dice set, hand simulation by running the craps chain to absorption,
// and the likelihood-ratio test of no control on a sample of hand lengths
// (likelihood, maximum likelihood estimator, test decision, simulated power).

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "craps/dice_models.hpp"
#include "craps/normal.hpp"
#include "craps/rng.hpp"
#include "craps/roots.hpp"
#include "craps/spectral.hpp"

namespace craps {

// ---------------------------------------------------------------------------
// Dice-total samplers
// ---------------------------------------------------------------------------

// One roll from the SS model with both dice on axis A (come-out set).
inline int sample_total_ss_aa(double theta, RngStream& rng) {
    const double u0 = rng.next_double();
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    if (u0 < 1.0 - theta)
        return (int(6.0 * u1) + 1) + (int(6.0 * u2) + 1);
    return (int(4.0 * u1) + 2) + (int(4.0 * u2) + 2);
}

// One roll from the SS model with dice on axes A and B (points 6 and 8).
inline int sample_total_ss_ab(double theta, RngStream& rng) {
    const double u0 = rng.next_double();
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    if (u0 < 1.0 - theta)
        return (int(6.0 * u1) + 1) + (int(6.0 * u2) + 1);
    const int die2 = (u2 < 0.5) ? (2 * int(4.0 * u2) + 1) : (2 * int(4.0 * u2));
    return (int(4.0 * u1) + 2) + die2;
}

// One roll from the SS model with dice on axes A and C (points 4, 5, 9, 10).
inline int sample_total_ss_ac(double theta, RngStream& rng) {
    const double u0 = rng.next_double();
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    if (u0 < 1.0 - theta)
        return (int(6.0 * u1) + 1) + (int(6.0 * u2) + 1);
    const int die2 = (u2 < 0.5) ? (int(4.0 * u2) + 1) : (int(4.0 * u2) + 3);
    return (int(4.0 * u1) + 2) + die2;
}

// One roll from the WS model with the (1,5,6,2) come-out set: extreme or
// near-extreme pre-totals are pitched toward 7.
inline int sample_total_ws_1562(double theta, RngStream& rng) {
    const double u0 = rng.next_double();
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    const int pre = (int(6.0 * u1) + 1) + (int(6.0 * u2) + 1);
    const int dev = pre >= 7 ? pre - 7 : 7 - pre;
    if (dev == 5 && u0 >= 1.0 - theta) return 7;
    if (dev == 3) {
        const double u3 = rng.next_double();
        if (u3 < 1.0 / 3.0 && u0 >= 1.0 - theta) return 7;
    }
    return pre;
}

// One roll from the WS model with the (2,4,2,4) point set: sevens are pitched
// away, landing uniformly on 4, 6, 8, or 10.
inline int sample_total_ws_2424(double theta, RngStream& rng) {
    const double u0 = rng.next_double();
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    const int pre = (int(6.0 * u1) + 1) + (int(6.0 * u2) + 1);
    if (pre == 7) {
        const double u3 = rng.next_double();
        if (u3 < 2.0 / 3.0 && u0 >= 1.0 - theta) {
            const double u4 = rng.next_double();
            return 2 * (int(4.0 * u4) + 2);
        }
    }
    return pre;
}

// One roll under the model's optimal policy for the given state:
// point = 0 means come-out; otherwise point is the established point.
inline int sample_total(Model model, int point, double theta, RngStream& rng) {
    require_theta(theta);
    if (model == Model::ss) {
        if (point == 0) return sample_total_ss_aa(theta, rng);
        switch (point) {
            case 6: case 8: return sample_total_ss_ab(theta, rng);
            case 4: case 5: case 9: case 10: return sample_total_ss_ac(theta, rng);
            default: throw std::invalid_argument("sample_total: invalid point");
        }
    }
    if (point == 0) return sample_total_ws_1562(theta, rng);
    switch (point) {
        case 4: case 5: case 6: case 8: case 9: case 10:
            return sample_total_ws_2424(theta, rng);
        default: throw std::invalid_argument("sample_total: invalid point");
    }
}

// ---------------------------------------------------------------------------
// Hand simulation
// ---------------------------------------------------------------------------

// Length of one shooter's hand: rolls from the first come-out up to and
// including the seven-out. Minimum possible value is 2.
inline int simulate_hand(Model model, double theta, RngStream& rng) {
    int point = 0;
    int rolls = 0;
    for (;;) {
        const int total = sample_total(model, point, theta, rng);
        ++rolls;
        if (point == 0) {
            if (total == 4 || total == 5 || total == 6 || total == 8 ||
                total == 9 || total == 10)
                point = total;
            // naturals and craps stay at come-out
        } else if (total == point) {
            point = 0;
        } else if (total == 7) {
            return rolls;
        }
    }
}

// ---------------------------------------------------------------------------
// Hand-length samples and the likelihood-ratio test
// ---------------------------------------------------------------------------

struct HandSample {
    std::map<int, long long> counts;  // hand length -> count, keys >= 2
    long long n = 0;

    void add(int length, long long k = 1) {
        if (length < 2) throw std::invalid_argument("HandSample: length must be >= 2");
        if (k < 0) throw std::invalid_argument("HandSample: negative count");
        counts[length] += k;
        n += k;
    }

    // Run-length form: counts[i] is the number of hands of length first + i.
    static HandSample from_counts_by_length(const std::vector<long long>& by_length,
                                            int first = 2) {
        HandSample s;
        for (std::size_t i = 0; i < by_length.size(); ++i)
            if (by_length[i] != 0) s.add(first + int(i), by_length[i]);
        return s;
    }

    int max_length() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

inline HandSample simulate_sample(Model model, double theta, long long n,
                                  RngStream& rng) {
    HandSample s;
    for (long long i = 0; i < n; ++i) s.add(simulate_hand(model, theta, rng));
    return s;
}

// Log likelihood of the sample: sum over lengths j of count(j) * log f(j).
// Powers of the mixture eigenvalues are carried incrementally across j, so
// the cost is linear in the maximum observed length.
inline double log_likelihood(Model model, const HandSample& sample, double theta) {
    if (sample.n <= 0) throw std::invalid_argument("log_likelihood: empty sample");
    const GeometricMixture mix = geometric_mixture(model, theta);
    std::array<double, 4> ep;  // e_i^(j-1), carried from j = 2
    for (int i = 0; i < 4; ++i) ep[i] = mix.e[i];
    double ll = 0.0;
    int j = 2;
    for (const auto& [length, count] : sample.counts) {
        for (; j < length; ++j)
            for (int i = 0; i < 4; ++i) ep[i] *= mix.e[i];
        double f = 0.0;
        for (int i = 0; i < 4; ++i) f += mix.c[i] * ep[i] * (1.0 - mix.e[i]);
        if (!(f > 0.0)) return -std::numeric_limits<double>::infinity();
        ll += double(count) * std::log(f);
    }
    return ll;
}

// Maximum likelihood estimate of theta on [0, theta_max]: coarse grid scan
// to bracket the optimum, then derivative-free local refinement.
inline double mle_theta(Model model, const HandSample& sample, double theta_max = 1.0) {
    constexpr int kGridPoints = 33;
    const auto neg_ll = [&](double th) { return -log_likelihood(model, sample, th); };
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGridPoints; ++i) {
        const double th = theta_max * double(i) / (kGridPoints - 1);
        const double v = neg_ll(th);
        if (v < best_val) { best_val = v; best = i; }
    }
    const double step = theta_max / (kGridPoints - 1);
    const double lo = std::max(0.0, theta_max * double(best) / (kGridPoints - 1) - step);
    const double hi = std::min(theta_max, theta_max * double(best) / (kGridPoints - 1) + step);
    return brent_minimize(neg_ll, lo, hi, 1e-10);
}

struct LrOutcome {
    double theta_hat = 0.0;
    double log_lik_null = 0.0;
    double log_lik_hat = 0.0;
    double statistic = 0.0;  // -2 log Lambda
    bool reject = false;
};

// Likelihood-ratio test of theta = 0 against theta > 0. The statistic is
// compared with the square of the two-sided normal critical value, the
// chi-squared(1) quantile.
inline LrOutcome lr_test(Model model, const HandSample& sample, double alpha = 0.05,
                         double theta_max = 1.0) {
    LrOutcome out;
    out.log_lik_null = log_likelihood(model, sample, 0.0);
    out.theta_hat = mle_theta(model, sample, theta_max);
    out.log_lik_hat = log_likelihood(model, sample, out.theta_hat);
    if (out.log_lik_hat < out.log_lik_null) {
        out.theta_hat = 0.0;
        out.log_lik_hat = out.log_lik_null;
    }
    out.statistic = 2.0 * (out.log_lik_hat - out.log_lik_null);
    const double crit = normal_quantile(1.0 - alpha / 2.0);
    out.reject = out.statistic > crit * crit;
    return out;
}

struct LrPowerResult {
    double power = 0.0;
    double std_error = 0.0;
    long long rejections = 0;
    long long replications = 0;
};

// Simulated power of the likelihood-ratio test at a fixed alternative.
// Replication r uses the dedicated stream (seed, stream_base + r), so any
// single replication can be reproduced without rerunning the others.
inline LrPowerResult simulate_lr_power(Model model, double theta, long long n,
                                       long long replications, std::uint64_t seed,
                                       double alpha = 0.05, double theta_max = 1.0,
                                       std::uint64_t stream_base = 0) {
    LrPowerResult res;
    res.replications = replications;
    for (long long r = 0; r < replications; ++r) {
        RngStream rng(seed, stream_base + std::uint64_t(r));
        const HandSample sample = simulate_sample(model, theta, n, rng);
        if (lr_test(model, sample, alpha, theta_max).reject) ++res.rejections;
    }
    res.power = double(res.rejections) / double(replications);
    res.std_error = std::sqrt(res.power * (1.0 - res.power) / double(replications));
    return res;
}

} // namespace craps
