#pragma once

#include <string>
#include <vector>

#include "sfw/perm/group.hpp"

namespace sfw::named {

inline PermGroup symmetric(std::size_t n) {
    if (n <= 1) return trivial_group(n);
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
    std::vector<Point> tr(n);
    for (std::size_t i = 0; i < n; ++i) tr[i] = static_cast<Point>(i);
    std::swap(tr[0], tr[1]);
    return PermGroup::generate(n, {Permutation(tr), Permutation(cyc)});
}

/// Generated by the 3-cycles (0 1 2), (1 2 3), ..., (n-3 n-2 n-1).
inline PermGroup alternating(std::size_t n) {
    if (n < 3) return trivial_group(n);
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i + 2 < n; ++i)
        gens.push_back(Permutation::from_cycles(n, "(" + std::to_string(i) + " " + std::to_string(i + 1) + " " +
                                                        std::to_string(i + 2) + ")"));
    return PermGroup::generate(n, std::move(gens));
}

inline PermGroup cyclic(std::size_t n) {
    if (n <= 1) return trivial_group(n);
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
    return PermGroup::generate(n, {Permutation(cyc)});
}

/// Symmetries of the square 0-1-2-3 inside S_4.
inline PermGroup dihedral8() { return group_from_cycles(4, {"(0 1 2 3)", "(0 2)"}); }

/// Normal Klein four-group {e, (0 1)(2 3), (0 2)(1 3), (0 3)(1 2)} of S_4.
inline PermGroup klein4() { return group_from_cycles(4, {"(0 1)(2 3)", "(0 2)(1 3)"}); }

/// ℤ/2 ≀ ℤ/3 on blocks {0,1}, {2,3}, {4,5}.
inline PermGroup z2_wr_z3() { return group_from_cycles(6, {"(0 1)", "(0 2 4)(1 3 5)"}); }

/// Base (ℤ/2)^3 of z2_wr_z3().
inline PermGroup z2_wr_z3_base() { return group_from_cycles(6, {"(0 1)", "(2 3)", "(4 5)"}); }

/// S_n × S_n on 2n points, first factor on 0..n-1.
inline PermGroup symmetric_square(std::size_t n) {
    const std::size_t d = 2 * n;
    auto shift = [&](const Permutation& p, std::size_t off) {
        std::vector<Point> img(d);
        for (std::size_t x = 0; x < d; ++x) img[x] = static_cast<Point>(x);
        for (std::size_t x = 0; x < n; ++x) img[off + x] = static_cast<Point>(off + p[static_cast<Point>(x)]);
        return Permutation(std::move(img));
    };
    std::vector<Permutation> gens;
    const PermGroup factor = symmetric(n);
    for (const auto& s : factor.generators()) {
        gens.push_back(shift(s, 0));
        gens.push_back(shift(s, n));
    }
    return PermGroup::generate(d, std::move(gens));
}

/// The factor swap i <-> i+n normalizing symmetric_square(n).
inline Permutation factor_swap(std::size_t n) {
    std::vector<Point> img(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        img[x] = static_cast<Point>(x + n);
        img[x + n] = static_cast<Point>(x);
    }
    return Permutation(std::move(img));
}

}  // namespace sfw::named
