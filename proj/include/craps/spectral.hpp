#pragma once

// Spectral form of the hand-length distribution.
//
// The non-unit eigenvalues 1 > e1 > e2 > e3 > e4 > 0 of the hand chain's
// transition matrix give P(L = x) = sum_i c_i e_i^(x-1) (1 - e_i): a signed
// mixture of geometric distributions that is a genuine distribution because
// sum c_i = 1 and sum c_i e_i = 1. Two eigenvalue paths are provided:
//
//  - closed form: the trigonometric resolvent-cubic radicals (exact up to
//    floating-point roundoff);
//  - quartic: bracketed root isolation of the characteristic quartic using
//    the interlacing of eigenvalues with the transient diagonal entries.
//
// The coefficient functions c_i are rational in theta and the eigenvalues.
// At theta = 1 two transient diagonal entries coincide, pinching e2 exactly
// onto them and making c2 = 0; the eigenvalues remain distinct.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "craps/dice_models.hpp"

namespace craps {

struct GeometricMixture {
    std::array<double, 4> e;  // eigenvalues, strictly decreasing
    std::array<double, 4> c;  // coefficients: c[0] > 0, others <= 0

    // P(L = x)
    double pmf(int x) const {
        if (x < 2) return 0.0;
        double s = 0.0;
        for (int i = 0; i < 4; ++i) s += c[i] * std::pow(e[i], x - 1) * (1.0 - e[i]);
        return s;
    }
    // P(L >= x)
    double tail(int x) const {
        if (x <= 2) return 1.0;
        double s = 0.0;
        for (int i = 0; i < 4; ++i) s += c[i] * std::pow(e[i], x - 1);
        return s;
    }
};

namespace spectral_detail {

inline double horner(std::initializer_list<double> coeffs_low_to_high, double x) {
    double acc = 0.0;
    const double* begin = coeffs_low_to_high.begin();
    for (std::size_t i = coeffs_low_to_high.size(); i-- > 0;) acc = acc * x + begin[i];
    return acc;
}

} // namespace spectral_detail

// ---------------------------------------------------------------------------
// Closed-form eigenvalues
// ---------------------------------------------------------------------------

inline std::array<double, 4> eigenvalues_closed_form(Model model, double theta) {
    using spectral_detail::horner;
    require_theta(theta);
    const double th = theta;
    double base, alpha, s, t, uscale, inner_factor;
    if (model == Model::ss) {
        const double q = horner({727417856.0, 1090622976.0, 592227264.0, 146776064.0,
                                 18260400.0, 1567554.0, 85295.0}, th);
        const double r = 2.0 * horner({314528.0, 263680.0, 74334.0, 9592.0, 527.0}, th);
        s = (8.0 + th) * horner({22784.0, 13520.0, 2171.0}, th);
        t = horner({22336.0, 10480.0, 1123.0}, th);
        alpha = 8.0 * (2.0 * std::sqrt(r) *
                       std::cos(std::acos(-q / (2.0 * r * std::sqrt(r))) / 3.0));
        base = 5.0 / 8.0 - th / 64.0;
        uscale = 1.0 / 576.0;
        inner_factor = 6.0;
    } else {
        const double q = horner({710369.0, 258462.0, -63957.0, -5832.0,
                                 6027.0, 522.0, -55.0}, th);
        const double r = horner({9829.0, 1356.0, -238.0, 12.0, 1.0}, th);
        s = horner({1068.0, 246.0, 5.0, -2.0}, th);
        t = horner({349.0, 48.0, -2.0}, th);
        alpha = 2.0 * std::sqrt(r) * std::cos(std::acos(-q / (r * std::sqrt(r))) / 3.0);
        base = 5.0 / 8.0 + th / 12.0;
        uscale = 1.0 / 72.0;
        inner_factor = 2.0;
    }
    // e(u,v) = base + u*uscale*sqrt((t+alpha)/3)
    //        + v*uscale*sqrt((2t-alpha)/3 - inner_factor*u*s*sqrt(3/(t+alpha)))
    auto e = [&](int u, int v) {
        const double first = std::sqrt((t + alpha) / 3.0);
        const double inner = (2.0 * t - alpha) / 3.0 -
                             inner_factor * u * s * std::sqrt(3.0 / (t + alpha));
        return base + u * uscale * first + v * uscale * std::sqrt(std::max(inner, 0.0));
    };
    return {e(1, 1), e(1, -1), e(-1, 1), e(-1, -1)};
}

// ---------------------------------------------------------------------------
// Characteristic quartic path
// ---------------------------------------------------------------------------

// Coefficients of a z^4 + b z^3 + c z^2 + d z + e, highest degree first.
inline std::array<double, 5> characteristic_quartic(Model model, double theta) {
    using spectral_detail::horner;
    require_theta(theta);
    const double th = theta;
    if (model == Model::ss) {
        return {2985984.0,
                -186624.0 * (40.0 - th),
                288.0 * horner({22904.0, -1870.0, -55.0}, th),
                -12.0 * horner({195424.0, -40920.0, -2124.0, -19.0}, th),
                horner({252800.0, -144032.0, -10176.0, -176.0, -1.0}, th)};
    }
    return {209952.0,
            -34992.0 * (15.0 + 2.0 * th),
            162.0 * horner({2863.0, 786.0, 55.0}, th),
            -9.0 * horner({18321.0, 7926.0, 1163.0, 58.0}, th),
            horner({17775.0, 11457.0, 2768.0, 298.0, 12.0}, th)};
}

namespace spectral_detail {

inline double quartic_value(const std::array<double, 5>& q, double z) {
    return (((q[0] * z + q[1]) * z + q[2]) * z + q[3]) * z + q[4];
}
inline double quartic_deriv(const std::array<double, 5>& q, double z) {
    return ((4.0 * q[0] * z + 3.0 * q[1]) * z + 2.0 * q[2]) * z + q[3];
}

// Isolate the single root of the quartic inside [lo, hi] by bisection and
// polish it with guarded Newton steps. Handles degenerate brackets (the
// theta = 1 pinch) by returning the endpoint/midpoint.
inline double quartic_root_in(const std::array<double, 5>& q, double lo, double hi) {
    double flo = quartic_value(q, lo), fhi = quartic_value(q, hi);
    if (flo != 0.0 && fhi != 0.0 && (flo > 0.0) == (fhi > 0.0)) {
        // Degenerate bracket: the root is pinched onto a coincident diagonal
        // pair and the interval has collapsed to roundoff width.
        if (hi - lo < 64.0 * std::numeric_limits<double>::epsilon())
            return 0.5 * (lo + hi);
        throw std::runtime_error("quartic_root_in: bracket does not isolate a root");
    }
    double z;
    if (flo == 0.0) {
        z = lo;
    } else if (fhi == 0.0) {
        z = hi;
    } else {
        for (int it = 0; it < 200 && hi - lo > std::numeric_limits<double>::epsilon(); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = quartic_value(q, mid);
            // a zero here is a noise crossing, not the root; stop bisecting
            // and leave the rest to the extended-precision polish
            if (fm == 0.0) { lo = hi = mid; break; }
            if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; }
            else { hi = mid; fhi = fm; }
        }
        z = 0.5 * (lo + hi);
        for (int it = 0; it < 3; ++it) {
            const double d = quartic_deriv(q, z);
            if (d == 0.0) break;
            const double step = quartic_value(q, z) / d;
            const double zn = z - step;
            if (zn < lo || zn > hi) break;
            z = zn;
        }
    }
    // Newton polish in extended precision: evaluating the large integer
    // coefficients in double leaves ~1e-13 of noise in the root, which the
    // near-cancelling factors of the mixture coefficients then amplify.
    long double zl = z;
    for (int it = 0; it < 2; ++it) {
        long double v = q[0], dv = 0.0L;
        for (int i = 1; i < 5; ++i) {
            dv = dv * zl + v;
            v = v * zl + static_cast<long double>(q[i]);
        }
        if (dv == 0.0L) break;
        const long double step = v / dv;
        if (std::fabs(static_cast<double>(step)) > 1e-6) break;
        zl -= step;
    }
    return static_cast<double>(zl);
}

} // namespace spectral_detail

// Transient diagonal entries (after the first), which interlace the
// eigenvalues: 1 > e1 > d1 >= e2 >= d2 >= e3 >= d3 > e4 > 0.
inline std::array<double, 3> interlacing_diagonals(Model model, double theta) {
    if (model == Model::ss)
        return {108.0 / 144.0, (104.0 + 4.0 * theta) / 144.0, (100.0 - theta) / 144.0};
    return {(27.0 + 3.0 * theta) / 36.0, (26.0 + 4.0 * theta) / 36.0,
            (25.0 + 3.0 * theta) / 36.0};
}

inline std::array<double, 4> eigenvalues_quartic(Model model, double theta) {
    using namespace spectral_detail;
    const auto q = characteristic_quartic(model, theta);
    const auto d = interlacing_diagonals(model, theta);
    if (d[0] - d[1] > 1e-8) {
        return {quartic_root_in(q, d[0], 1.0),
                quartic_root_in(q, d[1], d[0]),
                quartic_root_in(q, d[2], d[1]),
                quartic_root_in(q, 0.0, d[2])};
    }
    // theta = 1 pinch: the first two diagonals coincide and e2 equals them
    // exactly, so the quartic vanishes at the brackets' shared endpoint.
    // Deflate that root out and isolate the rest from the cubic factor.
    const double e2 = d[0];
    std::array<double, 4> cubic;  // synthetic division by (z - e2)
    cubic[0] = q[0];
    for (int i = 1; i < 4; ++i) cubic[i] = q[i] + cubic[i - 1] * e2;
    auto cubic_val = [&](double z) {
        return ((cubic[0] * z + cubic[1]) * z + cubic[2]) * z + cubic[3];
    };
    auto cubic_root_in = [&](double lo, double hi) {
        double flo = cubic_val(lo), fhi = cubic_val(hi);
        if (flo == 0.0) return lo;
        if (fhi == 0.0) return hi;
        if ((flo > 0.0) == (fhi > 0.0))
            throw std::runtime_error("eigenvalues_quartic: cubic bracket failed");
        for (int it = 0; it < 200 && hi - lo > std::numeric_limits<double>::epsilon(); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = cubic_val(mid);
            if (fm == 0.0) return mid;
            if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; }
            else { hi = mid; fhi = fm; }
        }
        return 0.5 * (lo + hi);
    };
    return {cubic_root_in(d[0], 1.0), e2, cubic_root_in(d[2], d[1]),
            cubic_root_in(0.0, d[2])};
}

// ---------------------------------------------------------------------------
// Mixture coefficients
// ---------------------------------------------------------------------------

inline std::array<double, 4> mixture_coefficients(Model model,
                                                  const std::array<double, 4>& e,
                                                  double theta) {
    const double th = theta;
    if (model == Model::ss) {
        auto c = [&](double e1, double e2, double e3, double e4) {
            const double num = (3.0 - 4.0 * e1) * (26.0 + th - 36.0 * e1) *
                               (100.0 - th - 144.0 * e1) *
                               (20.0 + th - 24.0 * e2) * (20.0 + th - 24.0 * e3) *
                               (20.0 + th - 24.0 * e4);
            const double den = 1152.0 * (2.0 + th) * (8.0 + th) * (20.0 + 7.0 * th) *
                               (e2 - e1) * (e3 - e1) * (e4 - e1);
            return num / den;
        };
        return {c(e[0], e[1], e[2], e[3]), c(e[1], e[2], e[3], e[0]),
                c(e[2], e[3], e[0], e[1]), c(e[3], e[0], e[1], e[2])};
    }
    const double sym =
        e[0]*e[0]*e[1]*e[1]*e[1]*e[2] + e[0]*e[0]*e[0]*e[1]*e[2]*e[2] +
        e[0]*e[1]*e[1]*e[2]*e[2]*e[2] + e[0]*e[0]*e[0]*e[1]*e[1]*e[3] +
        e[0]*e[0]*e[1]*e[3]*e[3]*e[3] + e[0]*e[1]*e[1]*e[1]*e[3]*e[3] +
        e[0]*e[0]*e[2]*e[2]*e[2]*e[3] + e[0]*e[0]*e[0]*e[2]*e[3]*e[3] +
        e[0]*e[2]*e[2]*e[3]*e[3]*e[3] + e[1]*e[1]*e[1]*e[2]*e[2]*e[3] +
        e[1]*e[1]*e[2]*e[3]*e[3]*e[3] + e[1]*e[2]*e[2]*e[2]*e[3]*e[3];
    const double poly = spectral_detail::horner(
        {448331256.0, 349805385.0, 113332133.0, 19480471.0, 1870151.0, 94864.0, 1980.0}, th);
    const double d = (3.0 + th) * (5.0 + th) * (544195584.0 * sym - poly);
    auto c = [&](double e1, double e2, double e3, double e4) {
        const double num = 69984.0 * (9.0 + th - 12.0 * e1) * (13.0 + 2.0 * th - 18.0 * e1) *
                           (25.0 + 3.0 * th - 36.0 * e1) *
                           (e2 - e3) * (e2 - e4) * (e3 - e4) *
                           (15.0 + 2.0 * th - 18.0 * e2) * (15.0 + 2.0 * th - 18.0 * e3) *
                           (15.0 + 2.0 * th - 18.0 * e4);
        return num / d;
    };
    return {c(e[0], e[1], e[2], e[3]), -c(e[1], e[2], e[3], e[0]),
            c(e[2], e[3], e[0], e[1]), -c(e[3], e[0], e[1], e[2])};
}

enum class EigenPath { closed_form, quartic };

inline GeometricMixture geometric_mixture(Model model, double theta,
                                          EigenPath path = EigenPath::closed_form) {
    GeometricMixture mix;
    mix.e = (path == EigenPath::closed_form) ? eigenvalues_closed_form(model, theta)
                                             : eigenvalues_quartic(model, theta);
    mix.c = mixture_coefficients(model, mix.e, theta);
    return mix;
}

// ---------------------------------------------------------------------------
// Distribution of L
// ---------------------------------------------------------------------------

inline double hand_pmf(Model model, double theta, int x) {
    return geometric_mixture(model, theta).pmf(x);
}

inline double hand_tail(Model model, double theta, int x) {
    return geometric_mixture(model, theta).tail(x);
}

} // namespace craps
