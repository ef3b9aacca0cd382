#pragma once

// The two dice-control models.
//
// Model ss: with probability theta the shooter keeps both dice on axis, and
// each die lands uniformly on its axis set's four faces; with probability
// 1-theta the toss is a fair 6x6 roll. Optimal strategy: AA on come-out,
// AC on points 4/5/9/10, AB on points 6/8.
//
// Model ws: on-axis tosses are no more likely than for a random shooter,
// but the fraction theta of double pitches is converted to the corresponding
// zero pitches. Optimal strategy: (1,5,6,2) on come-out, (2,4,2,4) on every
// point.
//
// Both models expose the distribution of dice totals, the expected gain of a
// one-unit pass-line bet, and the break-even control level.

#include <array>
#include <cmath>
#include <stdexcept>

#include "craps/dice_sets.hpp"
#include "craps/roots.hpp"

namespace craps {

enum class Model { ss, ws };

inline const char* model_name(Model m) { return m == Model::ss ? "ss" : "ws"; }

inline void require_theta(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::domain_error("theta must lie in [0,1]");
}

// ---------------------------------------------------------------------------
// Joint and total distributions
// ---------------------------------------------------------------------------

// P(left die = x, right die = y), faces indexed 1..6.
struct JointPmf {
    std::array<std::array<double, 6>, 6> p{};

    double operator()(int x, int y) const { return p[x - 1][y - 1]; }
    double& at(int x, int y) { return p[x - 1][y - 1]; }
};

// P(total = x), totals indexed 2..12.
struct TotalPmf {
    std::array<double, 11> p{};

    double operator()(int total) const { return p[total - 2]; }
    double& at(int total) { return p[total - 2]; }
    double sum() const {
        double s = 0.0;
        for (double v : p) s += v;
        return s;
    }
};

inline TotalPmf total_from_joint(const JointPmf& joint) {
    TotalPmf out;
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y) out.at(x + y) += joint(x, y);
    return out;
}

// Fair-dice total distribution, p(x) = (6-|x-7|)/36.
inline TotalPmf fair_total_pmf() {
    TotalPmf out;
    for (int x = 2; x <= 12; ++x) out.at(x) = (6.0 - std::abs(x - 7)) / 36.0;
    return out;
}

// SS joint: (1-theta) UNIF[SxS] + theta UNIF[leftFaces x rightFaces].
inline JointPmf joint_pmf_ss(const PairSet& pair, double theta) {
    require_theta(theta);
    JointPmf out;
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y) out.at(x, y) = (1.0 - theta) / 36.0;
    for (int x : axis_faces(pair.left))
        for (int y : axis_faces(pair.right)) out.at(x, y) += theta / 16.0;
    return out;
}

inline TotalPmf total_pmf_ss(const PairSet& pair, double theta) {
    return total_from_joint(joint_pmf_ss(pair, theta));
}

// WS joint: fair 1/36 everywhere, +theta/36 on the four zero pitches and
// -theta/36 on the four double pitches (coincident hits accumulate).
inline JointPmf joint_pmf_ws(const FullSet& s, double theta) {
    require_theta(theta);
    if (!s.valid()) throw std::domain_error("joint_pmf_ws: set not in D");
    JointPmf out;
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y) out.at(x, y) = 1.0 / 36.0;
    const int ab = opposite_face(s.a), bb = opposite_face(s.b);
    const int cb = opposite_face(s.c), db = opposite_face(s.d);
    const std::array<std::array<int, 2>, 4> zero = {{{s.a, s.c}, {s.b, s.d}, {ab, cb}, {bb, db}}};
    const std::array<std::array<int, 2>, 4> dbl = {{{s.a, cb}, {s.b, db}, {ab, s.c}, {bb, s.d}}};
    for (const auto& z : zero) out.at(z[0], z[1]) += theta / 36.0;
    for (const auto& d : dbl) out.at(d[0], d[1]) -= theta / 36.0;
    return out;
}

inline TotalPmf total_pmf_ws(const FullSet& s, double theta) {
    return total_from_joint(joint_pmf_ws(s, theta));
}

// ---------------------------------------------------------------------------
// Optimal strategy
// ---------------------------------------------------------------------------

inline const FullSet& ws_comeout_set() {
    static const FullSet s{1, 5, 6, 2};  // Sevens Set #1
    return s;
}
inline const FullSet& ws_point_set() {
    static const FullSet s{2, 4, 2, 4};  // Hard Ways Set #1
    return s;
}

// Total distribution used on the come-out roll under the model's strategy.
inline TotalPmf comeout_pmf(Model model, double theta) {
    if (model == Model::ss) return total_pmf_ss({Axis::A, Axis::A}, theta);
    return total_pmf_ws(ws_comeout_set(), theta);
}

// Total distribution used once the given point is established.
inline TotalPmf point_pmf(Model model, int point, double theta) {
    if (point != 4 && point != 5 && point != 6 && point != 8 && point != 9 && point != 10)
        throw std::domain_error("point must be one of 4,5,6,8,9,10");
    if (model == Model::ws) return total_pmf_ws(ws_point_set(), theta);
    if (point == 6 || point == 8) return total_pmf_ss({Axis::A, Axis::B}, theta);
    return total_pmf_ss({Axis::A, Axis::C}, theta);
}

// P(make the point before a 7) under a given total distribution.
inline double point_make_probability(const TotalPmf& pmf, int point) {
    if (point != 4 && point != 5 && point != 6 && point != 8 && point != 9 && point != 10)
        throw std::domain_error("point must be one of 4,5,6,8,9,10");
    return pmf(point) / (pmf(point) + pmf(7));
}

inline double point_make_probability(Model model, int point, double theta) {
    return point_make_probability(point_pmf(model, point, theta), point);
}

// ---------------------------------------------------------------------------
// Expected pass-line gain and break-even point
// ---------------------------------------------------------------------------

// Gain of a one-unit pass-line bet given a come-out distribution and a
// point-distribution supplier: 2[p(7) + p(11) + sum over points of
// p(point) * make-probability] - 1.
template <typename PointPmfFn>
inline double expected_gain_from(const TotalPmf& comeout, PointPmfFn point_dist) {
    double win = comeout(7) + comeout(11);
    for (int point : {4, 5, 6, 8, 9, 10}) {
        const TotalPmf pp = point_dist(point);
        win += comeout(point) * pp(point) / (pp(point) + pp(7));
    }
    return 2.0 * win - 1.0;
}

// First-principles expected gain under the model's optimal strategy.
inline double expected_gain_first_principles(Model model, double theta) {
    require_theta(theta);
    return expected_gain_from(comeout_pmf(model, theta),
                              [&](int point) { return point_pmf(model, point, theta); });
}

// Closed-form expected gain.
inline double expected_gain(Model model, double theta) {
    require_theta(theta);
    if (model == Model::ss) {
        const double num = 448.0 + theta * (-10064.0 + theta * (72.0 + theta * (68.0 - theta)));
        return -num / (72.0 * (10.0 - theta) * (44.0 + theta));
    }
    const double num = 21.0 + theta * (-682.0 + theta * (361.0 - 42.0 * theta));
    return -num / (27.0 * (5.0 - 2.0 * theta) * (11.0 - 3.0 * theta));
}

// Root of expected_gain(model, .) in (0, 0.5).
inline double break_even_theta(Model model) {
    return brent_root([=](double t) { return expected_gain(model, t); }, 0.0, 0.5, 1e-14);
}

} // namespace craps
