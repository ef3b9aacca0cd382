#pragma once

// Verification that the hand-length tail t(x, theta) = P(L >= x) is
// nondecreasing in theta for every x, the fact that licenses the composite
// null for the mean-length test.
//
// For each x up to a practical limit, the tail is a polynomial in theta,
// computed exactly from symbolic powers of the integer-scaled transition
// matrix. Its theta-derivative's coefficient signs are checked against three
// structural conditions (isolated negative, negative pair, no negative
// triple); each condition implies nonnegativity of the derivative on [0,1].
// The handful of x where the conditions fail are resolved directly: exact
// rational evaluation on a dense grid plus a Sturm-chain proof that the
// derivative has no root, hence no sign change, inside (0,1).
//
// For large x, the spectral form reduces the question to a lower bound built
// from eight extrema of c_i e_i' and c_i' e_i and the eigenvalue ratios
// e_i/e_1, evaluated on a dense theta grid.

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "craps/dice_models.hpp"
#include "craps/polynomial.hpp"
#include "craps/spectral.hpp"

namespace craps {

// ---------------------------------------------------------------------------
// Integer-scaled transition matrix (144 P for SS, 36 P for WS)
// ---------------------------------------------------------------------------

using PolyMatrix5 = std::array<std::array<IntPoly, 5>, 5>;
using PolyRow5 = std::array<IntPoly, 5>;

inline PolyMatrix5 scaled_transition_poly(Model model) {
    auto lin = [](long c0, long c1) {
        IntPoly p = {mpz_class(c0), mpz_class(c1)};
        poly_trim(p);
        return p;
    };
    if (model == Model::ss) {
        return {{{lin(48, -12), lin(24, -6), lin(32, 4), lin(40, 14), lin(0, 0)},
                 {lin(12, 6), lin(108, 0), lin(0, 0), lin(0, 0), lin(24, -6)},
                 {lin(16, 2), lin(0, 0), lin(104, 4), lin(0, 0), lin(24, -6)},
                 {lin(20, 7), lin(0, 0), lin(0, 0), lin(100, -1), lin(24, -6)},
                 {lin(0, 0), lin(0, 0), lin(0, 0), lin(0, 0), lin(144, 0)}}};
    }
    return {{{lin(12, 2), lin(6, -2), lin(8, 0), lin(10, 0), lin(0, 0)},
             {lin(3, 1), lin(27, 3), lin(0, 0), lin(0, 0), lin(6, -4)},
             {lin(4, 0), lin(0, 0), lin(26, 4), lin(0, 0), lin(6, -4)},
             {lin(5, 1), lin(0, 0), lin(0, 0), lin(25, 3), lin(6, -4)},
             {lin(0, 0), lin(0, 0), lin(0, 0), lin(0, 0), lin(36, 0)}}};
}

inline int scaled_transition_denominator(Model model) {
    return model == Model::ss ? 144 : 36;
}

namespace mono_detail {

inline PolyRow5 row_times_matrix(const PolyRow5& v, const PolyMatrix5& m) {
    PolyRow5 out;
    for (int j = 0; j < 5; ++j) {
        IntPoly acc;
        for (int k = 0; k < 5; ++k) acc = poly_add(acc, poly_mul(v[k], m[k][j]));
        out[j] = std::move(acc);
    }
    return out;
}

} // namespace mono_detail

// Coefficients (up to the positive scale s^(x-1)) of d/dtheta t(x, theta),
// where t(x, theta) = 1 - [P^(x-1)]_{co,7o}: the negated derivative of the
// absorption polynomial [N^(x-1)]_{co,7o} with N = s P. Requires x >= 3.
// To amortize the matrix powers, all of x = 3..x_max are produced at once.
inline std::vector<IntPoly> tail_derivative_polys(Model model, int x_max) {
    if (x_max < 3 || x_max > 200)
        throw std::invalid_argument("tail_derivative_polys: need 3 <= x_max <= 200");
    const PolyMatrix5 n = scaled_transition_poly(model);
    PolyRow5 v = {IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{}, IntPoly{}};
    std::vector<IntPoly> out;  // out[i] corresponds to x = 3 + i
    for (int step = 1; step <= x_max - 1; ++step) {
        v = mono_detail::row_times_matrix(v, n);
        if (step < 2) continue;
        IntPoly d = poly_derivative(v[4]);
        for (auto& c : d) c = -c;
        poly_trim(d);
        out.push_back(std::move(d));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coefficient sign conditions
// ---------------------------------------------------------------------------

struct ConditionReport {
    bool pass = false;
    std::string detail;  // which conditions applied, or why the check failed
};

// Check the structural sign conditions on the derivative coefficients a_i.
// The constant coefficient must be positive. Negative coefficients are then
// scanned as maximal runs: a run of three or more fails outright; a run of
// two starting at i-1 needs a_{i-2} > |a_{i-1}| + |a_i| (the pair is dominated
// by the preceding coefficient); an isolated negative a_i with i >= 2 needs
// a_{i-1} > |a_i| or a_{i-2} > |a_i|; an isolated negative a_1 has no
// dominating predecessor pattern in range and fails.
inline ConditionReport check_sign_conditions(const IntPoly& a) {
    ConditionReport rep;
    if (a.empty()) {
        rep.pass = false;
        rep.detail = "zero polynomial";
        return rep;
    }
    if (a[0] <= 0) {
        rep.pass = false;
        rep.detail = "a_0 <= 0";
        return rep;
    }
    const int len = int(a.size());
    std::string used;
    for (int j = 1; j < len; ++j) {
        if (a[j] >= 0) continue;
        int run = 1;
        while (j + run < len && a[j + run] < 0) ++run;
        if (run >= 3) {
            rep.pass = false;
            rep.detail = "three consecutive negative coefficients at i=" + std::to_string(j);
            return rep;
        }
        if (run == 2) {
            if (!(a[j - 1] > 0 && a[j - 1] > -a[j] + -a[j + 1])) {
                rep.pass = false;
                rep.detail = "negative pair at i=" + std::to_string(j) + " not dominated";
                return rep;
            }
            if (!used.empty()) used += ", ";
            used += "pair at i=" + std::to_string(j);
        } else {
            if (j == 1) {
                rep.pass = false;
                rep.detail = "isolated negative a_1";
                return rep;
            }
            if (!(a[j - 1] > -a[j] || a[j - 2] > -a[j])) {
                rep.pass = false;
                rep.detail = "isolated negative at i=" + std::to_string(j) + " not dominated";
                return rep;
            }
            if (!used.empty()) used += ", ";
            used += "isolated at i=" + std::to_string(j);
        }
        j += run - 1;
    }
    rep.pass = true;
    rep.detail = used.empty() ? "all coefficients nonnegative" : used;
    return rep;
}

// ---------------------------------------------------------------------------
// Direct resolution for exceptional x
// ---------------------------------------------------------------------------

struct ExceptionResolution {
    int x = 0;
    bool grid_nonnegative = false;  // exact evaluation at theta = k/grid
    int roots_in_01 = -1;           // distinct real roots in (0,1); -1 if skipped
    bool resolved = false;
};

inline ExceptionResolution resolve_exception(const IntPoly& a, int x,
                                             int grid_points = 10000) {
    ExceptionResolution res;
    res.x = x;
    res.grid_nonnegative = true;
    for (int k = 0; k <= grid_points; ++k) {
        const mpq_class theta(k, grid_points);
        if (poly_eval(a, theta) < 0) {
            res.grid_nonnegative = false;
            break;
        }
    }
    const bool boundary_zero = poly_eval(a, mpq_class(0)) == 0 ||
                               poly_eval(a, mpq_class(1)) == 0;
    if (!boundary_zero) res.roots_in_01 = sturm_root_count(a, mpq_class(0), mpq_class(1));
    // Positive endpoints plus no interior root means no sign change at all;
    // the grid check alone covers the (unused) boundary-zero case.
    res.resolved = res.grid_nonnegative && (boundary_zero || res.roots_in_01 == 0);
    return res;
}

// ---------------------------------------------------------------------------
// Full per-x verification
// ---------------------------------------------------------------------------

struct TailMonotonicityCase {
    int x = 0;
    bool conditions_pass = false;
    std::string detail;
    bool needed_resolution = false;
    bool resolved = false;  // meaningful only when needed_resolution
};

struct TailMonotonicityReport {
    Model model = Model::ss;
    int x_max = 0;
    std::vector<TailMonotonicityCase> cases;  // x = 3..x_max in order
    std::vector<int> exceptions;              // x whose conditions failed
    bool all_verified = false;                // every x passed or was resolved
};

inline TailMonotonicityReport verify_tail_monotonicity(Model model, int x_max,
                                                       int grid_points = 10000) {
    TailMonotonicityReport rep;
    rep.model = model;
    rep.x_max = x_max;
    rep.all_verified = true;
    const std::vector<IntPoly> derivs = tail_derivative_polys(model, x_max);
    for (int x = 3; x <= x_max; ++x) {
        const IntPoly& a = derivs[x - 3];
        TailMonotonicityCase c;
        c.x = x;
        const ConditionReport cond = check_sign_conditions(a);
        c.conditions_pass = cond.pass;
        c.detail = cond.detail;
        if (!cond.pass) {
            rep.exceptions.push_back(x);
            c.needed_resolution = true;
            c.resolved = resolve_exception(a, x, grid_points).resolved;
            if (!c.resolved) rep.all_verified = false;
        }
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Large-x regime
// ---------------------------------------------------------------------------

struct LargeXBounds {
    std::array<double, 4> min_c_eprime{};  // min over grid of c_i(t) e_i'(t)
    std::array<double, 4> min_cprime_e{};  // min over grid of c_i'(t) e_i(t)
    std::array<double, 3> max_ratio{};     // max of e_i/e_1, i = 2..4
    std::array<double, 3> min_ratio{};     // min of e_i/e_1, i = 2..4
    int grid_points = 0;
};

// Theta-derivative of the characteristic quartic's coefficients.
inline std::array<double, 5> characteristic_quartic_dtheta(Model model, double theta) {
    using spectral_detail::horner;
    const double th = theta;
    if (model == Model::ss) {
        return {0.0,
                186624.0,
                288.0 * (-1870.0 - 110.0 * th),
                -12.0 * horner({-40920.0, -4248.0, -57.0}, th),
                horner({-144032.0, -20352.0, -528.0, -4.0}, th)};
    }
    return {0.0,
            -69984.0,
            162.0 * (786.0 + 110.0 * th),
            -9.0 * horner({7926.0, 2326.0, 174.0}, th),
            horner({11457.0, 5536.0, 894.0, 48.0}, th)};
}

namespace mono_detail {

// e_i'(theta) by implicit differentiation of the characteristic quartic.
inline std::array<double, 4> eigen_derivs(Model model, double theta,
                                          const std::array<double, 4>& e) {
    const auto q = characteristic_quartic(model, theta);
    const auto qt = characteristic_quartic_dtheta(model, theta);
    std::array<double, 4> d;
    for (int i = 0; i < 4; ++i) {
        const double z = e[i];
        const double ftheta = ((qt[1] * z + qt[2]) * z + qt[3]) * z + qt[4];
        d[i] = -ftheta / spectral_detail::quartic_deriv(q, z);
    }
    return d;
}

// c_i'(theta) by second-order finite differences (one-sided at endpoints).
inline std::array<double, 4> coeff_derivs(Model model, double theta, double h) {
    auto coeffs = [&](double th) {
        return mixture_coefficients(model, eigenvalues_closed_form(model, th), th);
    };
    std::array<double, 4> d;
    if (theta < h) {
        const auto f0 = coeffs(theta), f1 = coeffs(theta + h), f2 = coeffs(theta + 2 * h);
        for (int i = 0; i < 4; ++i) d[i] = (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) / (2.0 * h);
    } else if (theta > 1.0 - h) {
        const auto f0 = coeffs(theta), f1 = coeffs(theta - h), f2 = coeffs(theta - 2 * h);
        for (int i = 0; i < 4; ++i) d[i] = (3.0 * f0[i] - 4.0 * f1[i] + f2[i]) / (2.0 * h);
    } else {
        const auto fp = coeffs(theta + h), fm = coeffs(theta - h);
        for (int i = 0; i < 4; ++i) d[i] = (fp[i] - fm[i]) / (2.0 * h);
    }
    return d;
}

} // namespace mono_detail

inline LargeXBounds large_x_bounds(Model model, int grid_points = 10000) {
    LargeXBounds b;
    b.grid_points = grid_points;
    b.min_c_eprime.fill(std::numeric_limits<double>::infinity());
    b.min_cprime_e.fill(std::numeric_limits<double>::infinity());
    b.max_ratio.fill(-std::numeric_limits<double>::infinity());
    b.min_ratio.fill(std::numeric_limits<double>::infinity());
    const double h = 1e-6;
    for (int k = 0; k <= grid_points; ++k) {
        const double theta = double(k) / grid_points;
        const auto e = eigenvalues_closed_form(model, theta);
        const auto c = mixture_coefficients(model, e, theta);
        const auto ed = mono_detail::eigen_derivs(model, theta, e);
        const auto cd = mono_detail::coeff_derivs(model, theta, h);
        for (int i = 0; i < 4; ++i) {
            b.min_c_eprime[i] = std::min(b.min_c_eprime[i], c[i] * ed[i]);
            b.min_cprime_e[i] = std::min(b.min_cprime_e[i], cd[i] * e[i]);
        }
        for (int i = 1; i < 4; ++i) {
            const double r = e[i] / e[0];
            b.max_ratio[i - 1] = std::max(b.max_ratio[i - 1], r);
            b.min_ratio[i - 1] = std::min(b.min_ratio[i - 1], r);
        }
    }
    return b;
}

struct LargeXSufficiency {
    int x_start = 0;
    int x_checked_to = 0;
    bool holds = false;
    double worst_margin = 0.0;
    int worst_x = 0;
};

// Lower-bound the factored tail derivative for each x >= x_start using the
// grid extrema: the i = 1 term contributes (x-1) min(c1 e1') + min(c1' e1);
// each i >= 2 bracket B_i(x) is scaled by the ratio power that makes the
// bound smallest (max ratio when B_i < 0, min ratio when B_i >= 0). Beyond
// x_checked_to the linear i = 1 term dominates the vanishing ratio powers.
inline LargeXSufficiency check_large_x_sufficiency(Model model, const LargeXBounds& b,
                                                   int x_limit = 2000) {
    LargeXSufficiency s;
    s.x_start = (model == Model::ss) ? 4 : 3;
    s.x_checked_to = x_limit;
    s.holds = true;
    s.worst_margin = std::numeric_limits<double>::infinity();
    for (int x = s.x_start; x <= x_limit; ++x) {
        double lb = (x - 1) * b.min_c_eprime[0] + b.min_cprime_e[0];
        for (int i = 1; i < 4; ++i) {
            const double bracket = (x - 1) * b.min_c_eprime[i] + b.min_cprime_e[i];
            const double ratio = (bracket < 0.0) ? b.max_ratio[i - 1] : b.min_ratio[i - 1];
            lb += bracket * std::pow(ratio, x - 2);
        }
        if (lb < s.worst_margin) {
            s.worst_margin = lb;
            s.worst_x = x;
        }
        if (lb < 0.0) s.holds = false;
    }
    return s;
}

} // namespace craps
