#pragma once

// Exact univariate polynomial arithmetic over arbitrary-precision integers
// and rationals: the coefficient-sign analysis of the tail derivative is
// meaningless in floating point once matrix powers grow, so everything here
// stays exact. Includes a Sturm chain for counting distinct real roots.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace craps {

// Coefficients low degree to high; trailing zeros stripped ("[]" is zero).
using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

inline void poly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void poly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const IntPoly& p) { return int(p.size()) - 1; }
inline int poly_degree(const RatPoly& p) { return int(p.size()) - 1; }

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline IntPoly poly_derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * long(i);
    poly_trim(r);
    return r;
}

inline mpq_class poly_eval(const IntPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + mpq_class(p[i]);
    return acc;
}

inline mpq_class poly_eval(const RatPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// ---------------------------------------------------------------------------
// Sturm chain
// ---------------------------------------------------------------------------

namespace poly_detail {

inline RatPoly to_rat(const IntPoly& p) {
    RatPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = mpq_class(p[i]);
    return r;
}

inline RatPoly rat_derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * long(i);
    return r;
}

// Remainder of a / b over the rationals (b nonzero).
inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const mpq_class q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// Divide through by the largest absolute coefficient; sign-preserving, keeps
// the chain's numbers small.
inline void normalize_signs(RatPoly& p) {
    if (p.empty()) return;
    mpq_class biggest = 0;
    for (const auto& c : p) {
        mpq_class a = abs(c);
        if (a > biggest) biggest = a;
    }
    if (biggest != 0)
        for (auto& c : p) c /= biggest;
}

inline int sign_of(const mpq_class& v) { return sgn(v); }

inline int sign_variations(const std::vector<RatPoly>& chain, const mpq_class& x) {
    int variations = 0, prev = 0;
    for (const auto& p : chain) {
        const int s = sign_of(poly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

} // namespace poly_detail

// Number of distinct real roots of p in the open interval (a, b).
// Requires p(a) != 0 and p(b) != 0.
inline int sturm_root_count(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
    using namespace poly_detail;
    if (poly_eval(p, a) == 0 || poly_eval(p, b) == 0)
        throw std::invalid_argument("sturm_root_count: endpoint is a root");
    if (poly_degree(p) <= 0) return 0;
    std::vector<RatPoly> chain;
    chain.push_back(to_rat(p));
    chain.push_back(rat_derivative(chain[0]));
    normalize_signs(chain[0]);
    normalize_signs(chain[1]);
    while (!chain.back().empty() && poly_degree(chain.back()) >= 1) {
        RatPoly next = rat_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : next) c = -c;
        normalize_signs(next);
        if (next.empty()) break;
        chain.push_back(std::move(next));
    }
    return sign_variations(chain, a) - sign_variations(chain, b);
}

} // namespace craps
