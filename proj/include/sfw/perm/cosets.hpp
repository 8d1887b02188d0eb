#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sfw/error.hpp"
#include "sfw/perm/group.hpp"
#include "sfw/perm/homomorphism.hpp"

namespace sfw {

/// Right cosets H g_1, ..., H g_t of H in G with g_1 the identity.
struct CosetData {
    PermGroup group;
    PermGroup subgroup;
    std::vector<Permutation> reps;
    std::size_t index = 0;
    /// coset_id[x] = i such that element x of `group` lies in H reps[i].
    std::vector<std::uint32_t> coset_id;

    std::uint32_t coset_of(Elem x) const { return coset_id.at(x); }
    std::uint32_t coset_of(const Permutation& p) const { return coset_id.at(group.index_of(p)); }
    Elem rep_elem(std::size_t i) const { return group.index_of(reps.at(i)); }
};

namespace detail {

inline CosetData right_cosets_with(const PermGroup& g, const PermGroup& h,
                                   std::vector<Permutation> reps) {
    CosetData cd{g, h, {}, 0, std::vector<std::uint32_t>(g.order(), UINT32_MAX)};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!g.contains(reps[i]))
            throw PreconditionError("coset representative " + reps[i].to_cycles() + " not in G");
        for (const auto& hh : h.elements()) {
            Elem x = g.index_of(hh * reps[i]);
            if (cd.coset_id[x] != UINT32_MAX)
                throw PreconditionError("coset representatives " + reps[i].to_cycles() + " and " +
                                        reps[cd.coset_id[x]].to_cycles() + " share a coset");
            cd.coset_id[x] = static_cast<std::uint32_t>(i);
        }
    }
    if (reps.size() * h.order() != g.order())
        throw PreconditionError("coset representatives do not cover G");
    cd.reps = std::move(reps);
    cd.index = cd.reps.size();
    return cd;
}

}  // namespace detail

/// Right coset decomposition G = H g_1 ∪ ... ∪ H g_t. Each representative is
/// the lexicographically least element of its coset and the representatives
/// are listed in increasing order, so reps[0] is the identity.
inline CosetData right_coset_data(const PermGroup& g, const PermGroup& h) {
    PermGroup::require_subgroup(h, g);
    std::vector<std::uint32_t> seen(g.order(), 0);
    std::vector<Permutation> reps;
    for (Elem x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        reps.push_back(g.element(x));
        for (const auto& hh : h.elements()) seen[g.index_of(hh * g.element(x))] = 1;
    }
    return detail::right_cosets_with(g, h, std::move(reps));
}

/// Same decomposition with caller-chosen representatives; reps[0] must be
/// the identity and every coset must be hit exactly once.
inline CosetData right_coset_data(const PermGroup& g, const PermGroup& h,
                                  std::vector<Permutation> reps) {
    PermGroup::require_subgroup(h, g);
    if (reps.empty() || !reps.front().is_identity())
        throw PreconditionError("first coset representative must be the identity");
    return detail::right_cosets_with(g, h, std::move(reps));
}

/// G acting on its right cosets of H: x sends H g_i to H g_i x^-1.
inline GroupAction coset_action(const CosetData& cd) {
    const PermGroup& g = cd.group;
    GroupAction act{g, cd.index, {}};
    act.images.reserve(g.order());
    std::vector<Elem> rep_elems(cd.index);
    for (std::size_t i = 0; i < cd.index; ++i) rep_elems[i] = cd.rep_elem(i);
    for (Elem x = 0; x < g.order(); ++x) {
        std::vector<Point> img(cd.index);
        for (std::size_t i = 0; i < cd.index; ++i) img[i] = cd.coset_of(g.mul(rep_elems[i], g.inv(x)));
        act.images.emplace_back(std::move(img));
    }
    return act;
}

/// Left cosets g_1 K, ..., g_m K; same selection rule as right_coset_data.
struct LeftCosetData {
    PermGroup group;
    PermGroup subgroup;
    std::vector<Permutation> reps;
    std::vector<std::uint32_t> coset_id;

    std::size_t index() const noexcept { return reps.size(); }
    std::uint32_t coset_of(const Permutation& p) const { return coset_id.at(group.index_of(p)); }
};

inline LeftCosetData left_coset_data(const PermGroup& g, const PermGroup& k) {
    PermGroup::require_subgroup(k, g, "K");
    LeftCosetData cd{g, k, {}, std::vector<std::uint32_t>(g.order(), UINT32_MAX)};
    for (Elem x = 0; x < g.order(); ++x) {
        if (cd.coset_id[x] != UINT32_MAX) continue;
        auto id = static_cast<std::uint32_t>(cd.reps.size());
        cd.reps.push_back(g.element(x));
        for (const auto& kk : k.elements()) cd.coset_id[g.index_of(g.element(x) * kk)] = id;
    }
    return cd;
}

/// Double cosets H g_i H with stabilizers K_i = H ∩ g_i^-1 H g_i.
struct DoubleCosetData {
    std::vector<Permutation> reps;
    std::vector<PermGroup> stabilizers;
    std::vector<std::size_t> sizes;

    std::size_t count() const noexcept { return reps.size(); }
};

/// Representatives are lexicographically least in their double coset and
/// listed in increasing order, so reps[0] is the identity and K_1 = H.
inline DoubleCosetData double_coset_data(const PermGroup& g, const PermGroup& h) {
    PermGroup::require_subgroup(h, g);
    DoubleCosetData dc;
    std::vector<char> seen(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        const Permutation& gx = g.element(x);
        std::size_t size = 0;
        for (const auto& a : h.elements()) {
            Permutation ax = a * gx;
            for (const auto& b : h.elements()) {
                Elem y = g.index_of(ax * b);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++size;
                }
            }
        }
        dc.reps.push_back(gx);
        dc.stabilizers.push_back(intersection(h, conjugate_subgroup(h, gx)));
        dc.sizes.push_back(size);
    }
    return dc;
}

/// K = ∩_i g_i^-1 H g_i, the largest normal subgroup of G inside H.
inline PermGroup normal_core(const PermGroup& g, const PermGroup& h) {
    CosetData cd = right_coset_data(g, h);
    std::vector<Permutation> core;
    for (const auto& x : h.elements()) {
        bool in_all = true;
        for (const auto& r : cd.reps)
            if (!h.contains(r * x * r.inverse())) {
                in_all = false;
                break;
            }
        if (in_all) core.push_back(x);
    }
    PermGroup k = PermGroup::from_closed_set(g.degree(), std::move(core));
    if (!k.is_normal_in(g)) throw InvariantViolation("normal core is not normal");
    return k;
}

}  // namespace sfw
