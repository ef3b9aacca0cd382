#pragma once

// The absorbing Markov chain for the shooter's hand.
//
// Five states: come-out (co), point 4-or-10, point 5-or-9, point 6-or-8, and
// the absorbing seven-out (7o). The hand length L is the number of rolls from
// the first come-out through the seven-out inclusive, so L >= 2 and
// P(L >= x) = 1 - [P^(x-1)]_{co,7o}.
//
// Provides the transition matrix under each model's optimal strategy, the
// closed-form mean and variance of L, a fundamental-matrix oracle for both,
// and a matrix-power oracle for the tail.

#include <array>
#include <cmath>
#include <stdexcept>

#include "craps/dice_models.hpp"

namespace craps {

using Matrix5 = std::array<std::array<double, 5>, 5>;

enum HandState { kComeOut = 0, kPoint410 = 1, kPoint59 = 2, kPoint68 = 3, kSevenOut = 4 };

// Transition matrix under the model's optimal set strategy. Points are
// aggregated in symmetric pairs; the strategy distributions satisfy
// p(x) = p(14-x), so 4 and 10 (etc.) share a row.
inline Matrix5 transition_matrix(Model model, double theta) {
    const TotalPmf co = comeout_pmf(model, theta);
    Matrix5 P{};
    P[kComeOut][kComeOut] = co(2) + co(3) + co(7) + co(11) + co(12);
    P[kComeOut][kPoint410] = co(4) + co(10);
    P[kComeOut][kPoint59] = co(5) + co(9);
    P[kComeOut][kPoint68] = co(6) + co(8);
    P[kComeOut][kSevenOut] = 0.0;
    const std::array<int, 3> reps = {4, 5, 6};
    for (int i = 0; i < 3; ++i) {
        const TotalPmf pp = point_pmf(model, reps[i], theta);
        auto& row = P[kPoint410 + i];
        row[kComeOut] = pp(reps[i]);                      // point made
        row[kPoint410 + i] = 1.0 - pp(reps[i]) - pp(7);   // still on the point
        row[kSevenOut] = pp(7);
    }
    P[kSevenOut][kSevenOut] = 1.0;
    return P;
}

// ---------------------------------------------------------------------------
// Closed-form moments
// ---------------------------------------------------------------------------

inline double mean_hand_length(Model model, double theta) {
    require_theta(theta);
    const double th = theta;
    if (model == Model::ss) {
        const double d28 = 28.0 - th;
        const double num = 8912.0 + th * (132.0 + th * (-54.0 + th));
        return 24.0 * num / ((4.0 - th) * (8.0 + th) * d28 * d28);
    }
    const double num = 557.0 + th * (-281.0 + 30.0 * th);
    return 9.0 * num / ((3.0 - 2.0 * th) * (196.0 + th * (-85.0 + 6.0 * th)));
}

inline double var_hand_length(Model model, double theta) {
    require_theta(theta);
    const double th = theta;
    if (model == Model::ss) {
        const double num = 27441664.0 +
            th * (4461696.0 +
            th * (-441024.0 +
            th * (-34064.0 +
            th * (5652.0 +
            th * (-174.0 + th)))));
        const double d4 = 4.0 - th, d8 = 8.0 + th, d28 = 28.0 - th;
        return 24.0 * (44.0 + th) * num / (d4 * d4 * d8 * d8 * d28 * d28 * d28 * d28);
    }
    const double num = 5306103.0 +
        th * (-5622318.0 +
        th * (1933097.0 +
        th * (-153376.0 +
        th * (-39214.0 +
        th * (7176.0 - 360.0 * th)))));
    const double d32 = 3.0 - 2.0 * th, dq = 196.0 + th * (-85.0 + 6.0 * th);
    return 9.0 * num / ((3.0 - th) * d32 * d32 * dq * dq);
}

// ---------------------------------------------------------------------------
// Fundamental-matrix oracle
// ---------------------------------------------------------------------------

namespace detail {

// Solve the 4x4 system A z = b by Gaussian elimination with partial pivoting.
inline std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> A,
                                    std::array<double, 4> b) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        if (A[col][col] == 0.0) throw std::runtime_error("solve4: singular matrix");
        for (int r = col + 1; r < 4; ++r) {
            const double f = A[r][col] / A[col][col];
            for (int c = col; c < 4; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::array<double, 4> z{};
    for (int r = 3; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 4; ++c) s -= A[r][c] * z[c];
        z[r] = s / A[r][r];
    }
    return z;
}

} // namespace detail

struct MeanVar {
    double mean;
    double variance;
};

// Mean and variance of L from the fundamental matrix M = (I-Q)^{-1}:
// m = M 1 gives expected absorption times; the second factorial-type moment
// uses w = (2M - I) m, and Var = w_co - mean^2.
inline MeanVar mean_var_oracle(Model model, double theta) {
    const Matrix5 P = transition_matrix(model, theta);
    std::array<std::array<double, 4>, 4> ImQ{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ImQ[i][j] = (i == j ? 1.0 : 0.0) - P[i][j];
    const auto m = detail::solve4(ImQ, {1.0, 1.0, 1.0, 1.0});
    const auto z = detail::solve4(ImQ, m);  // z = M m
    const double mean = m[kComeOut];
    const double w = 2.0 * z[kComeOut] - m[kComeOut];
    return {mean, w - mean * mean};
}

// ---------------------------------------------------------------------------
// Matrix-power tail oracle
// ---------------------------------------------------------------------------

// P(L >= x) = 1 - [P^(x-1)]_{co,7o}, computed by iterating a row vector.
inline double hand_tail_oracle(Model model, double theta, int x) {
    if (x < 2) return 1.0;
    const Matrix5 P = transition_matrix(model, theta);
    std::array<double, 5> v{};
    v[kComeOut] = 1.0;
    for (int step = 0; step < x - 1; ++step) {
        std::array<double, 5> w{};
        for (int i = 0; i < 5; ++i) {
            if (v[i] == 0.0) continue;
            for (int j = 0; j < 5; ++j) w[j] += v[i] * P[i][j];
        }
        v = w;
    }
    return 1.0 - v[kSevenOut];
}

} // namespace craps
