#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfw/error.hpp"
#include "sfw/perm/cosets.hpp"
#include "sfw/perm/group.hpp"
#include "sfw/perm/homomorphism.hpp"

namespace sfw {

/// A ≀_I B built as a permutation group on blocks.
struct WreathProduct {
    PermGroup group;
    std::vector<PermGroup> base_copies;  // A_i acting on block i
    GroupHom kappa;                      // group -> top, kernel = ⊕ A_i
    GroupAction top_action;              // B on I
    std::size_t block_size = 0;
    bool extra_top_points = false;       // true when the top action is not faithful
};

/// Point (i, x) of block i is i * deg(A) + x. A generator a of A acts on
/// block i alone; b ∈ B moves block i to block b·i. When B does not act
/// faithfully on I, deg(B) extra points carry B's own permutation so that
/// the quotient map onto B stays well defined.
inline WreathProduct wreath_product(const PermGroup& a, const PermGroup& b, const GroupAction& action,
                                    const Config& cfg = default_config()) {
    if (!(action.group == b) || !action.is_action())
        throw InputError("wreath product: invalid action table for B");
    const std::size_t n = action.set_size;
    const std::size_t da = a.degree();
    if (da == 0) throw InputError("wreath product: base group must act on at least one point");
    const bool extra = !action.is_faithful();
    const std::size_t base_points = n * da;
    const std::size_t degree = base_points + (extra ? b.degree() : 0);

    auto lift_a = [&](const Permutation& p, std::size_t block) {
        std::vector<Point> img(degree);
        for (std::size_t x = 0; x < degree; ++x) img[x] = static_cast<Point>(x);
        for (std::size_t x = 0; x < da; ++x)
            img[block * da + x] = static_cast<Point>(block * da + p[static_cast<Point>(x)]);
        return Permutation(std::move(img));
    };
    auto lift_b = [&](Elem be) {
        const Permutation& blocks = action(be);
        std::vector<Point> img(degree);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t x = 0; x < da; ++x)
                img[i * da + x] = static_cast<Point>(blocks[static_cast<Point>(i)] * da + x);
        if (extra) {
            const Permutation& own = b.element(be);
            for (std::size_t y = 0; y < b.degree(); ++y)
                img[base_points + y] = static_cast<Point>(base_points + own[static_cast<Point>(y)]);
        }
        return Permutation(std::move(img));
    };

    std::vector<Permutation> gens;
    std::vector<PermGroup> copies;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Permutation> ci;
        for (const auto& g : a.generators()) ci.push_back(lift_a(g, i));
        gens.insert(gens.end(), ci.begin(), ci.end());
        copies.push_back(PermGroup::generate(degree, std::move(ci), cfg));
    }
    for (const auto& s : b.generators()) gens.push_back(lift_b(b.index_of(s)));
    PermGroup g = PermGroup::generate(degree, std::move(gens), cfg);

    // kappa reads the block permutation (faithful case) or the extra points.
    GroupHom kappa{g, b, std::vector<Elem>(g.order())};
    for (Elem x = 0; x < g.order(); ++x) {
        const Permutation& p = g.element(x);
        if (extra) {
            std::vector<Point> own(b.degree());
            for (std::size_t y = 0; y < b.degree(); ++y)
                own[y] = p[static_cast<Point>(base_points + y)] - static_cast<Point>(base_points);
            kappa.image[x] = b.index_of(Permutation(std::move(own)));
        } else {
            std::vector<Point> blocks(n);
            for (std::size_t i = 0; i < n; ++i) blocks[i] = p[static_cast<Point>(i * da)] / static_cast<Point>(da);
            Permutation bp(std::move(blocks));
            std::optional<Elem> hit;
            for (Elem be = 0; be < b.order(); ++be)
                if (action(be) == bp) {
                    hit = be;
                    break;
                }
            if (!hit) throw InvariantViolation("block permutation outside the top action");
            kappa.image[x] = *hit;
        }
    }
    return WreathProduct{std::move(g), std::move(copies), std::move(kappa), action, da, extra};
}

/// Regular action of B on itself by left multiplication, indexed by B's
/// element order.
inline GroupAction regular_action(const PermGroup& b) {
    GroupAction act{b, b.order(), {}};
    for (Elem x = 0; x < b.order(); ++x) {
        std::vector<Point> img(b.order());
        for (Elem y = 0; y < b.order(); ++y) img[y] = b.mul(x, y);
        act.images.emplace_back(std::move(img));
    }
    return act;
}

/// Quotient G -> G/N realised as the left-multiplication action of G on the
/// left cosets of a normal subgroup N.
struct Quotient {
    PermGroup group;  // G/N acting regularly on [G:N] points
    GroupHom map;
};

inline Quotient quotient_by_normal(const PermGroup& g, const PermGroup& n, const Config& cfg = default_config()) {
    if (!n.is_normal_in(g)) throw PreconditionError("quotient: subgroup is not normal");
    LeftCosetData lc = left_coset_data(g, n);
    const std::size_t m = lc.index();
    std::vector<Permutation> images(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
        std::vector<Point> img(m);
        for (std::size_t c = 0; c < m; ++c) img[c] = lc.coset_of(g.element(x) * lc.reps[c]);
        images[x] = Permutation(std::move(img));
    }
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) gens.push_back(images[g.index_of(s)]);
    PermGroup q = PermGroup::generate(m, std::move(gens), cfg);
    GroupHom f{g, q, std::vector<Elem>(g.order())};
    for (Elem x = 0; x < g.order(); ++x) f.image[x] = q.index_of(images[x]);
    return Quotient{std::move(q), std::move(f)};
}

/// Outcome of verify_wreath_like; on failure `reason` names the violated
/// axiom and (g, i, witness) the first offending triple when applicable.
struct WreathLikeReport {
    bool ok = true;
    std::string reason;
    std::optional<Permutation> g;
    std::optional<std::size_t> copy;
    std::optional<Permutation> witness;
};

/// Checks the wreath-like axioms: the copies A_i generate their direct sum,
/// that sum is ker(kappa), kappa is onto B, and g A_i g^-1 = A_{kappa(g)·i}.
/// Throws PreconditionError when kappa is not a homomorphism.
inline WreathLikeReport verify_wreath_like(const PermGroup& g, const std::vector<PermGroup>& copies,
                                           const GroupHom& kappa, const PermGroup& b,
                                           const GroupAction& action) {
    if (!(kappa.source == g) || !(kappa.target == b) || !kappa.is_homomorphism())
        throw PreconditionError("kappa is not a homomorphism G -> B");
    if (!(action.group == b) || !action.is_action() || action.set_size != copies.size())
        throw InputError("invalid action of B on the copy index set");

    WreathLikeReport rep;
    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.reason = std::move(why);
        return rep;
    };
    for (std::size_t i = 0; i < copies.size(); ++i)
        if (!copies[i].is_subgroup_of(g)) return fail("copy " + std::to_string(i) + " is not a subgroup");
    if (!kappa.is_surjective()) return fail("kappa is not surjective");

    for (std::size_t i = 0; i < copies.size(); ++i)
        for (std::size_t j = i + 1; j < copies.size(); ++j) {
            for (const auto& x : copies[i].generators())
                for (const auto& y : copies[j].generators())
                    if (x * y != y * x) {
                        rep.copy = i;
                        rep.witness = x;
                        return fail("copies " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
                    }
            if (intersection(copies[i], copies[j]).order() != 1)
                return fail("copies " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }

    std::vector<Permutation> all;
    std::size_t product = 1;
    for (const auto& c : copies) {
        all.insert(all.end(), c.generators().begin(), c.generators().end());
        product *= c.order();
    }
    PermGroup sum = PermGroup::generate(g.degree(), all);
    if (sum.order() != product) return fail("copies do not form a direct sum");
    if (!(sum == kappa.kernel())) return fail("kernel of kappa differs from the sum of copies");

    for (Elem x = 0; x < g.order(); ++x) {
        const Permutation& gx = g.element(x);
        Permutation gi = gx.inverse();
        const Permutation& move = action(kappa(x));
        for (std::size_t i = 0; i < copies.size(); ++i) {
            const PermGroup& target = copies[move[static_cast<Point>(i)]];
            for (const auto& a : copies[i].elements())
                if (!target.contains(gx * a * gi)) {
                    rep.g = gx;
                    rep.copy = i;
                    rep.witness = a;
                    return fail("conjugation does not follow kappa");
                }
        }
    }
    return rep;
}

}  // namespace sfw
