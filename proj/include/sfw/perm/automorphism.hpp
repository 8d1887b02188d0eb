#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "sfw/config.hpp"
#include "sfw/error.hpp"
#include "sfw/perm/classes.hpp"
#include "sfw/perm/group.hpp"

namespace sfw {

// Automorphisms of G are permutations of G's element indices, so Aut(G) is
// itself a PermGroup of degree |G|. Composition follows Permutation:
// (a * b)(x) = a(b(x)).

/// Ad(g): x -> g x g^-1 on element indices.
inline Permutation inner_automorphism(const PermGroup& g, Elem a) {
    std::vector<Point> img(g.order());
    for (Elem x = 0; x < g.order(); ++x) img[x] = g.conj(a, x);
    return Permutation(std::move(img));
}

/// The automorphism x -> p x p^-1 induced by a point permutation `p`
/// normalizing G.
inline Permutation automorphism_from_normalizer(const PermGroup& g, const Permutation& p) {
    if (p.degree() != g.degree()) throw InputError("normalizer element has wrong degree");
    Permutation pi = p.inverse();
    std::vector<Point> img(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
        auto y = g.find(p * g.element(x) * pi);
        if (!y) throw PreconditionError(p.to_cycles() + " does not normalize G");
        img[x] = *y;
    }
    return Permutation(std::move(img));
}

/// True iff `phi` (a permutation of element indices) is multiplicative.
inline bool is_automorphism(const PermGroup& g, const Permutation& phi) {
    if (phi.degree() != g.order() || phi[PermGroup::identity()] != PermGroup::identity()) return false;
    for (const auto& s : g.generators()) {
        Elem se = g.index_of(s);
        for (Elem x = 0; x < g.order(); ++x)
            if (phi[g.mul(x, se)] != g.mul(phi[x], phi[se])) return false;
    }
    return true;
}

struct AutomorphismData {
    PermGroup group;
    PermGroup aut;    // acts on element indices of `group`
    PermGroup inner;  // image of g -> Ad(g)
    /// Cosets of Inn(G) in Aut(G); entry 0 is Inn(G). Each coset lists aut
    /// element indices in increasing order, so front() is its least member.
    std::vector<std::vector<Elem>> out_cosets;

    std::size_t out_order() const noexcept { return out_cosets.size(); }
    const Permutation& out_rep(std::size_t c) const { return aut.element(out_cosets.at(c).front()); }
    std::size_t out_coset_of(const Permutation& phi) const {
        Elem e = aut.index_of(phi);
        for (std::size_t c = 0; c < out_cosets.size(); ++c)
            if (std::binary_search(out_cosets[c].begin(), out_cosets[c].end(), e)) return c;
        throw InvariantViolation("automorphism outside every Out coset");
    }
};

namespace detail {

// Cosets of a normal subgroup `n` of `g` (both acting on the same points),
// each sorted; coset of the identity first.
inline std::vector<std::vector<Elem>> cosets_of_normal(const PermGroup& g, const PermGroup& n) {
    std::vector<char> seen(g.order(), 0);
    std::vector<std::vector<Elem>> out;
    for (Elem x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<Elem> coset;
        for (const auto& k : n.elements()) {
            Elem y = g.index_of(g.element(x) * k);
            seen[y] = 1;
            coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

}  // namespace detail

inline PermGroup inner_automorphism_group(const PermGroup& g) {
    std::vector<Permutation> inn;
    inn.reserve(g.order());
    for (Elem a = 0; a < g.order(); ++a) inn.push_back(inner_automorphism(g, a));
    return PermGroup::from_closed_set(g.order(), std::move(inn));
}

/// Aut(G) by backtracking over generator images. Candidate images of a
/// generator share its element order and conjugacy class size; every partial
/// assignment is checked for consistency and injectivity on the subgroup
/// generated so far.
inline AutomorphismData automorphism_group(const PermGroup& g, const Config& cfg = default_config()) {
    if (g.order() > cfg.aut_cap)
        throw ResourceLimitError("automorphism search: |G| = " + std::to_string(g.order()) +
                                 " exceeds aut cap " + std::to_string(cfg.aut_cap));
    const ConjClassData cc = conjugacy_classes(g);
    std::vector<Elem> gens;
    for (const auto& s : g.generators()) gens.push_back(g.index_of(s));
    const std::size_t ng = gens.size();

    std::vector<std::vector<Elem>> candidates(ng);
    for (std::size_t j = 0; j < ng; ++j)
        for (Elem y = 0; y < g.order(); ++y)
            if (g.element_order(y) == g.element_order(gens[j]) &&
                cc.sizes[cc.class_of[y]] == cc.sizes[cc.class_of[gens[j]]])
                candidates[j].push_back(y);

    std::vector<Elem> assigned(ng);
    std::vector<Permutation> found;
    constexpr Elem unset = UINT32_MAX;

    // Extends the map on <gens[0..upto]>; returns the partial table or empty.
    auto extend = [&](std::size_t upto) -> std::vector<Elem> {
        std::vector<Elem> img(g.order(), unset);
        std::vector<char> used(g.order(), 0);
        img[0] = 0;
        used[0] = 1;
        std::deque<Elem> queue{0};
        while (!queue.empty()) {
            Elem x = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j <= upto; ++j) {
                Elem y = g.mul(x, gens[j]);
                Elem fy = g.mul(img[x], assigned[j]);
                if (img[y] == unset) {
                    if (used[fy]) return {};
                    img[y] = fy;
                    used[fy] = 1;
                    queue.push_back(y);
                } else if (img[y] != fy) {
                    return {};
                }
            }
        }
        return img;
    };

    auto search = [&](auto&& self, std::size_t j) -> void {
        if (j == ng) {
            std::vector<Elem> img = ng == 0 ? std::vector<Elem>{0} : extend(ng - 1);
            found.emplace_back(std::vector<Point>(img.begin(), img.end()));
            if (found.size() > cfg.order_cap)
                throw ResourceLimitError("|Aut(G)| exceeds order cap");
            return;
        }
        for (Elem c : candidates[j]) {
            assigned[j] = c;
            if (!extend(j).empty()) self(self, j + 1);
        }
    };
    search(search, 0);

    AutomorphismData ad{g, PermGroup::from_closed_set(g.order(), std::move(found)),
                        inner_automorphism_group(g), {}};
    ad.out_cosets = detail::cosets_of_normal(ad.aut, ad.inner);
    return ad;
}

}  // namespace sfw
