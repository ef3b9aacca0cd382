#pragma once

// Dice-set combinatorics.
//
// Two notions of "dice set" appear:
//  - an axis set (A, B, or C) keeps four faces of one die in play and excludes
//    an opposite pair; a pair of axis sets (AA, AB, ...) describes both dice.
//  - a full set (a,b,c,d) fixes the top and front faces of both dice; the
//    space D of full sets has 6*4*6*4 = 576 elements.
//
// Five permutations act on D: rotation about the axis, axis reversal, and
// interchange of dice generate a group of order 16 whose 45 orbits are the
// classical named dice sets; adding single-die rotation and reversal grows
// the group to order 128 and collapses the orbits to the six axis-set pairs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace craps {

// ---------------------------------------------------------------------------
// Axis sets
// ---------------------------------------------------------------------------

enum class Axis : int { A = 0, B = 1, C = 2 };

// Faces kept in play by each axis set (the excluded pair sums to 7).
inline const std::array<int, 4>& axis_faces(Axis axis) {
    static const std::array<std::array<int, 4>, 3> faces = {{
        {2, 3, 4, 5},   // A excludes 1-6
        {1, 3, 4, 6},   // B excludes 2-5
        {1, 2, 5, 6},   // C excludes 3-4
    }};
    return faces[static_cast<int>(axis)];
}

inline char axis_name(Axis axis) { return "ABC"[static_cast<int>(axis)]; }

// Unordered pair of axis sets, canonicalized so left <= right.
struct PairSet {
    Axis left, right;

    PairSet(Axis l, Axis r)
        : left(l <= r ? l : r), right(l <= r ? r : l) {}

    bool operator==(const PairSet& o) const {
        return left == o.left && right == o.right;
    }
    std::string name() const { return {axis_name(left), axis_name(right)}; }
};

inline const std::array<PairSet, 6>& all_pair_sets() {
    static const std::array<PairSet, 6> sets = {
        PairSet{Axis::A, Axis::A}, PairSet{Axis::A, Axis::B},
        PairSet{Axis::A, Axis::C}, PairSet{Axis::B, Axis::B},
        PairSet{Axis::B, Axis::C}, PairSet{Axis::C, Axis::C}};
    return sets;
}

// ---------------------------------------------------------------------------
// Full sets and the space D
// ---------------------------------------------------------------------------

inline int opposite_face(int f) { return 7 - f; }

// (a,b) = top/front of the left die, (c,d) = top/front of the right die.
struct FullSet {
    int a, b, c, d;

    bool operator==(const FullSet& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator<(const FullSet& o) const {
        return std::array{a, b, c, d} < std::array{o.a, o.b, o.c, o.d};
    }
    // Membership in D: the front face may not share the top face's axis pair.
    bool valid() const {
        auto face_ok = [](int top, int front) {
            return 1 <= top && top <= 6 && 1 <= front && front <= 6 &&
                   front != top && front != opposite_face(top);
        };
        return face_ok(a, b) && face_ok(c, d);
    }
    // The axis of one die is determined by its on-axis faces {t, f, 7-t, 7-f}.
    static Axis die_axis(int top, int front) {
        std::set<int> on = {top, front, opposite_face(top), opposite_face(front)};
        for (Axis ax : {Axis::A, Axis::B, Axis::C}) {
            const auto& keep = axis_faces(ax);
            if (on == std::set<int>(keep.begin(), keep.end())) return ax;
        }
        throw std::logic_error("die_axis: unreachable");
    }
    PairSet axis_pair() const { return {die_axis(a, b), die_axis(c, d)}; }
};

// All 576 elements of D in lexicographic order.
inline const std::vector<FullSet>& enumerate_dice_sets() {
    static const std::vector<FullSet> space = [] {
        std::vector<FullSet> out;
        out.reserve(576);
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; b <= 6; ++b)
                for (int c = 1; c <= 6; ++c)
                    for (int d = 1; d <= 6; ++d) {
                        FullSet s{a, b, c, d};
                        if (s.valid()) out.push_back(s);
                    }
        return out;
    }();
    return space;
}

inline std::size_t dice_set_index(const FullSet& s) {
    const auto& space = enumerate_dice_sets();
    auto it = std::lower_bound(space.begin(), space.end(), s);
    if (it == space.end() || !(*it == s))
        throw std::domain_error("dice_set_index: set not in D");
    return static_cast<std::size_t>(it - space.begin());
}

// ---------------------------------------------------------------------------
// Group actions on D
// ---------------------------------------------------------------------------

inline FullSet sigma1(const FullSet& s) {  // rotation of both dice
    return {s.b, opposite_face(s.a), s.d, opposite_face(s.c)};
}
inline FullSet sigma2(const FullSet& s) {  // axis reversal
    return {s.c, opposite_face(s.d), s.a, opposite_face(s.b)};
}
inline FullSet sigma3(const FullSet& s) {  // interchange of dice
    return {s.c, s.d, s.a, s.b};
}
inline FullSet sigma4(const FullSet& s) {  // rotation of the left die only
    return {s.b, opposite_face(s.a), s.c, s.d};
}
inline FullSet sigma5(const FullSet& s) {  // reversal of the left die only
    return {s.a, opposite_face(s.b), s.c, s.d};
}

enum class GroupKind {
    wong,   // <sigma1, sigma2, sigma3>, order 16, 45 orbits
    axis,   // <sigma1, ..., sigma5>, order 128, 6 orbits
};

using Permutation = std::vector<std::uint16_t>;  // image over D indices

// Closure of the generating permutations under composition.
inline std::vector<Permutation> group_elements(GroupKind kind) {
    const auto& space = enumerate_dice_sets();
    std::vector<FullSet (*)(const FullSet&)> gens = {sigma1, sigma2, sigma3};
    if (kind == GroupKind::axis) {
        gens.push_back(sigma4);
        gens.push_back(sigma5);
    }
    std::vector<Permutation> gen_perms;
    for (auto g : gens) {
        Permutation p(space.size());
        for (std::size_t i = 0; i < space.size(); ++i)
            p[i] = static_cast<std::uint16_t>(dice_set_index(g(space[i])));
        gen_perms.push_back(std::move(p));
    }

    Permutation ident(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        ident[i] = static_cast<std::uint16_t>(i);

    std::set<Permutation> elems = {ident};
    std::vector<Permutation> frontier = {ident};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : gen_perms) {
                Permutation q(space.size());
                for (std::size_t i = 0; i < space.size(); ++i) q[i] = g[p[i]];
                if (elems.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

// Orbits of D under the group action, each orbit as a sorted index list.
inline std::vector<std::vector<std::uint16_t>> orbit_partition(GroupKind kind) {
    const auto elems = group_elements(kind);
    const std::size_t n = enumerate_dice_sets().size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint16_t>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::set<std::uint16_t> orbit = {static_cast<std::uint16_t>(i)};
        std::vector<std::uint16_t> stack = {static_cast<std::uint16_t>(i)};
        while (!stack.empty()) {
            const auto j = stack.back();
            stack.pop_back();
            for (const auto& p : elems)
                if (orbit.insert(p[j]).second) stack.push_back(p[j]);
        }
        for (auto j : orbit) seen[j] = true;
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

// Lexicographically first element of each orbit.
inline std::vector<FullSet> orbit_representatives(GroupKind kind) {
    const auto& space = enumerate_dice_sets();
    std::vector<FullSet> reps;
    for (const auto& orbit : orbit_partition(kind)) reps.push_back(space[orbit.front()]);
    return reps;
}

struct BurnsideSummary {
    std::size_t order = 0;          // |G|
    long fixed_point_sum = 0;       // sum over g of |D^g|
    long orbit_count = 0;           // fixed_point_sum / order
    std::map<int, int> profile;     // fixed-point count -> number of elements
};

inline BurnsideSummary burnside(GroupKind kind) {
    BurnsideSummary out;
    const auto elems = group_elements(kind);
    out.order = elems.size();
    for (const auto& p : elems) {
        int fixed = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == i) ++fixed;
        out.fixed_point_sum += fixed;
        ++out.profile[fixed];
    }
    out.orbit_count = out.fixed_point_sum / static_cast<long>(out.order);
    return out;
}

} // namespace craps
