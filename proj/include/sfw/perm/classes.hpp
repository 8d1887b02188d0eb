#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "sfw/perm/group.hpp"

namespace sfw {

/// Conjugacy classes of a group. Representatives are lexicographically least
/// in their class and classes are listed by increasing representative, so
/// class 0 is {identity}.
struct ConjClassData {
    PermGroup group;
    std::vector<Elem> reps;
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> class_of;  // indexed by element

    std::size_t count() const noexcept { return reps.size(); }
    const Permutation& rep(std::size_t c) const { return group.element(reps.at(c)); }
    std::uint32_t class_of_perm(const Permutation& p) const { return class_of.at(group.index_of(p)); }
};

inline ConjClassData conjugacy_classes(const PermGroup& g) {
    ConjClassData cc{g, {}, {}, std::vector<std::uint32_t>(g.order(), UINT32_MAX)};
    std::vector<Elem> gens;
    for (const auto& s : g.generators()) gens.push_back(g.index_of(s));
    for (Elem x = 0; x < g.order(); ++x) {
        if (cc.class_of[x] != UINT32_MAX) continue;
        auto id = static_cast<std::uint32_t>(cc.reps.size());
        std::size_t size = 0;
        std::deque<Elem> queue{x};
        cc.class_of[x] = id;
        while (!queue.empty()) {
            Elem y = queue.front();
            queue.pop_front();
            ++size;
            for (Elem s : gens) {
                Elem z = g.conj(s, y);
                if (cc.class_of[z] == UINT32_MAX) {
                    cc.class_of[z] = id;
                    queue.push_back(z);
                }
            }
        }
        cc.reps.push_back(x);
        cc.sizes.push_back(size);
    }
    return cc;
}

}  // namespace sfw
