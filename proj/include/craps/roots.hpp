#pragma once

// One-dimensional root finding and minimization (Brent's methods).
//
// Both routines are derivative-free and need only a bracketing interval.
// They are used for break-even points, reparameterization inverses, and
// maximum-likelihood estimation.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace craps {

// Brent root finder on [a, b]; requires f(a) and f(b) of opposite sign
// (either may be zero). Returns a root to absolute tolerance xtol.
inline double brent_root(const std::function<double(double)>& f,
                         double a, double b, double xtol = 1e-14,
                         int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("brent_root: interval does not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = b - a; e = d; }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b)
                         + 0.5 * xtol;
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol || fb == 0.0) return b;

        if (std::fabs(e) < tol || std::fabs(fa) <= std::fabs(fb)) {
            d = m; e = m;                       // bisection
        } else {
            double p, q;
            const double s = fb / fa;
            if (a == c) {                       // secant
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {                            // inverse quadratic
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
                e = d; d = p / q;               // accept interpolation
            } else {
                d = m; e = m;                   // fall back to bisection
            }
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    return b;
}

// Brent minimizer on [a, b]. Returns the argmin to absolute tolerance xtol.
inline double brent_minimize(const std::function<double(double)>& f,
                             double a, double b, double xtol = 1e-10,
                             int max_iter = 200) {
    const double golden = 0.5 * (3.0 - std::sqrt(5.0));
    double x = a + golden * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;

    for (int it = 0; it < max_iter; ++it) {
        const double m = 0.5 * (a + b);
        const double tol = xtol + 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(x);
        if (std::fabs(x - m) <= 2.0 * tol - 0.5 * (b - a)) break;

        bool parabolic = false;
        if (std::fabs(e) > tol) {               // try parabolic fit through x, v, w
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p; else q = -q;
            if (std::fabs(p) < std::fabs(0.5 * q * e) && p > q * (a - x) && p < q * (b - x)) {
                e = d; d = p / q;
                parabolic = true;
            }
        }
        if (!parabolic) {
            e = (x < m) ? b - x : a - x;        // golden-section step
            d = golden * e;
        }
        const double u = x + ((std::fabs(d) >= tol) ? d : (d > 0.0 ? tol : -tol));
        const double fu = f(u);

        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw; w = x; fw = fx; x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) { v = w; fv = fw; w = u; fw = fu; }
            else if (fu <= fv || v == x || v == w) { v = u; fv = fu; }
        }
    }
    return x;
}

} // namespace craps
