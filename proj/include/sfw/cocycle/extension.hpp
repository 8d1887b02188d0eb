#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sfw/cocycle/cocycle.hpp"
#include "sfw/config.hpp"
#include "sfw/perm/automorphism.hpp"
#include "sfw/perm/cosets.hpp"
#include "sfw/perm/wreath.hpp"
#include "sfw/subfactor/group_algebra.hpp"

namespace sfw {

/// H realized inside Aut(G) as the preimage of Γ₀; the embedding of G sends
/// g to Ad(g) and quotient.map is H -> Γ₀ with kernel Inn(G).
struct ExtensionResult {
    PermGroup base;
    PermGroup realized;
    PermGroup inner;
    GroupHom embedding;
    Quotient quotient;
    std::vector<Permutation> lifts;  // φ_k indexed by Γ₀ element
    Cocycle2<GroupValues> cocycle;
    bool outer = true;

    const PermGroup& gamma() const noexcept { return quotient.group; }
    std::size_t index() const noexcept { return realized.order() / base.order(); }
};

namespace detail {

/// Ad(g) -> g for a centreless group.
class InnerLookup {
public:
    explicit InnerLookup(const PermGroup& g) {
        for (Elem a = 0; a < g.order(); ++a)
            if (!map_.emplace(inner_automorphism(g, a), a).second)
                throw PreconditionError("extension: G has nontrivial center");
    }
    std::optional<Elem> find(const Permutation& phi) const {
        auto it = map_.find(phi);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::unordered_map<Permutation, Elem, PermutationHash> map_;
};

inline Cocycle2<GroupValues> cocycle_from_lifts(const PermGroup& g, const PermGroup& gamma,
                                                const std::vector<Permutation>& lifts, const InnerLookup& inner) {
    Cocycle2<GroupValues> c{gamma, GroupValues{g}, lifts, std::vector<Elem>(gamma.order() * gamma.order())};
    for (Elem a = 0; a < gamma.order(); ++a)
        for (Elem b = 0; b < gamma.order(); ++b) {
            Permutation ad = lifts[a] * lifts[b] * lifts[gamma.mul(a, b)].inverse();
            auto w = inner.find(ad);
            if (!w) throw InvariantViolation("extension: phi_a phi_b phi_ab^-1 is not inner");
            c(a, b) = *w;
        }
    return c;
}

}  // namespace detail

/// Mac Lane data for Γ₀ = ⟨generators⟩ Inn(G) / Inn(G), with `generators`
/// automorphisms of G written as permutations of G's element indices.
/// Lifts are the lexicographically least element of each Inn(G)-coset.
inline ExtensionResult extension_from_out(const PermGroup& g, const std::vector<Permutation>& generators,
                                          const Config& cfg = default_config()) {
    if (center(g).order() != 1) throw PreconditionError("extension: G has nontrivial center");
    for (const auto& phi : generators)
        if (!is_automorphism(g, phi)) throw PreconditionError("extension: generator is not an automorphism of G");
    detail::InnerLookup lookup(g);

    PermGroup inner = inner_automorphism_group(g);
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) gens.push_back(inner_automorphism(g, g.index_of(s)));
    for (const auto& phi : generators) gens.push_back(phi);
    if (gens.empty()) gens.push_back(Permutation::identity(g.order()));
    PermGroup h = PermGroup::generate(g.order(), std::move(gens), cfg);
    Quotient q = quotient_by_normal(h, inner, cfg);

    std::vector<Permutation> lifts(q.group.order());
    std::vector<char> have(q.group.order(), 0);
    for (Elem x = 0; x < h.order(); ++x) {
        Elem k = q.map(x);
        if (!have[k]) {
            lifts[k] = h.element(x);
            have[k] = 1;
        }
    }

    GroupHom emb{g, h, std::vector<Elem>(g.order())};
    for (Elem a = 0; a < g.order(); ++a) emb.image[a] = h.index_of(inner_automorphism(g, a));

    // Ad(x)|_G for x ∈ H, read off from x Ad(a) x^-1 = Ad(a').
    bool outer = true;
    for (Elem x = 0; x < h.order() && outer; ++x) {
        if (inner.contains(h.element(x))) continue;
        std::vector<Point> img(g.order());
        for (Elem a = 0; a < g.order(); ++a) {
            auto a2 = lookup.find(h.element(h.conj(x, emb(a))));
            if (!a2) throw InvariantViolation("extension: image of G is not normal in H");
            img[a] = static_cast<Point>(*a2);
        }
        if (inner.contains(Permutation(std::move(img)))) outer = false;
    }

    auto cocycle = detail::cocycle_from_lifts(g, q.group, lifts, lookup);
    return ExtensionResult{g, std::move(h), std::move(inner), std::move(emb), std::move(q),
                           std::move(lifts), std::move(cocycle), outer};
}

/// Γ₀ generated by the listed cosets of Out(G) = Aut(G)/Inn(G).
inline ExtensionResult extension_from_out(const PermGroup& g, const AutomorphismData& ad,
                                          const std::vector<std::size_t>& out_cosets,
                                          const Config& cfg = default_config()) {
    if (!(ad.group == g)) throw PreconditionError("extension: automorphism data belongs to another group");
    std::vector<Permutation> gens;
    for (std::size_t c : out_cosets) {
        if (c >= ad.out_order()) throw InputError("extension: Out coset index " + std::to_string(c) + " out of range");
        gens.push_back(ad.out_rep(c));
    }
    return extension_from_out(g, gens, cfg);
}

/// Γ₀ = Out(G).
inline ExtensionResult extension_from_full_out(const PermGroup& g, const Config& cfg = default_config()) {
    AutomorphismData ad = automorphism_group(g, cfg);
    std::vector<std::size_t> all(ad.out_order());
    for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
    return extension_from_out(g, ad, all, cfg);
}

/// The G-valued cocycle for another choice of lifts (one per Γ₀ element,
/// each in its Inn(G)-coset of H). With φ_1 ≠ id the result is not normalized.
inline Cocycle2<GroupValues> extension_cocycle(const ExtensionResult& ext, const std::vector<Permutation>& lifts) {
    if (lifts.size() != ext.gamma().order()) throw InputError("extension: need one lift per element of Gamma0");
    for (Elem k = 0; k < lifts.size(); ++k)
        if (!ext.realized.contains(lifts[k]) || ext.quotient.map(ext.realized.index_of(lifts[k])) != k)
            throw PreconditionError("extension: lift lies outside its coset");
    return detail::cocycle_from_lifts(ext.base, ext.gamma(), lifts, detail::InnerLookup(ext.base));
}

/// order -> number of elements of that order.
inline std::map<std::size_t, std::size_t> order_fingerprint(const PermGroup& g) { return g.order_histogram(); }

inline nlohmann::json extension_json(const ExtensionResult& ext) {
    nlohmann::json j;
    j["order"] = ext.realized.order();
    j["base_order"] = ext.base.order();
    j["index"] = ext.index();
    j["outer"] = ext.outer;
    nlohmann::json fp = nlohmann::json::object();
    for (auto [o, n] : order_fingerprint(ext.realized)) fp[std::to_string(o)] = n;
    j["fingerprint"] = fp;
    j["cocycle"] = cocycle_json(ext.cocycle);
    return j;
}

/// Outcome of crossed_product_check. `witness` holds the first failing pair
/// of symbols as (k1, j1, k2, j2) element/coset indices.
struct CrossedProductReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    bool cocycle_ok = true;
    bool restriction_ok = true;
    std::vector<std::size_t> witness;
    std::string message;
};

enum class RepRule { LexMin, LexMaxNonIdentity };

/// Symbols (k, K g̃_j) with k ∈ K multiply as
/// (k1, i)(k2, j) = (k1 · g̃_i k2 g̃_i^-1 · ω_ij, ij) where g̃_i g̃_j = ω_ij g̃_{ij};
/// the check is that (k, j) -> u_{k g̃_j} is a bijective multiplicative map
/// onto the basis of ℂ[G] and that symbols over H_mid/K land in ℂ[H_mid].
inline CrossedProductReport crossed_product_check(const PermGroup& g, const PermGroup& k, const PermGroup& h_mid,
                                                  RepRule rule = RepRule::LexMin,
                                                  const Config& cfg = default_config()) {
    PermGroup::require_subgroup(k, g, "K");
    PermGroup::require_subgroup(h_mid, g, "H_mid");
    if (!k.is_normal_in(g)) throw PreconditionError("crossed product: K is not normal in G");
    if (!k.is_subgroup_of(h_mid)) throw PreconditionError("crossed product: K is not contained in H_mid");

    CosetData lex = right_coset_data(g, k);
    std::vector<Permutation> reps = lex.reps;
    if (rule == RepRule::LexMaxNonIdentity)
        for (std::size_t j = 1; j < reps.size(); ++j)
            for (Elem x = g.order(); x-- > 0;)
                if (lex.coset_of(x) == j) {
                    reps[j] = g.element(x);
                    break;
                }
    CosetData cd = right_coset_data(g, k, reps);
    const std::size_t t = cd.index;

    std::vector<char> in_mid(t, 0);
    for (std::size_t j = 0; j < t; ++j) {
        bool any = false, all = true;
        for (const auto& kk : k.elements()) {
            bool c = h_mid.contains(kk * reps[j]);
            any = any || c;
            all = all && c;
        }
        if (any != all) throw InvariantViolation("crossed product: K-coset meets H_mid partially");
        if (any && !h_mid.contains(reps[j]))
            throw PreconditionError("crossed product: representatives do not contain a transversal of K in H_mid");
        in_mid[j] = any;
    }

    CrossedProductReport r;
    std::vector<Elem> rep_e(t);
    for (std::size_t j = 0; j < t; ++j) rep_e[j] = cd.rep_elem(j);
    std::vector<std::uint32_t> prod(t * t);
    std::vector<Elem> omega(t * t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Elem x = g.mul(rep_e[i], rep_e[j]);
            std::uint32_t c = cd.coset_of(x);
            prod[i * t + j] = c;
            omega[i * t + j] = g.mul(x, g.inv(rep_e[c]));
        }

    // α, ω as a K-valued cocycle on Γ = G/K.
    {
        Quotient q = quotient_by_normal(g, k, cfg);
        std::vector<std::uint32_t> coset_of_q(q.group.order());
        for (std::size_t j = 0; j < t; ++j) coset_of_q[q.map(rep_e[j])] = static_cast<std::uint32_t>(j);
        std::vector<Permutation> alpha(q.group.order());
        for (Elem a = 0; a < q.group.order(); ++a) {
            std::vector<Point> img(k.order());
            for (Elem y = 0; y < k.order(); ++y)
                img[y] = static_cast<Point>(k.index_of(g.element(g.conj(rep_e[coset_of_q[a]], g.index_of(k.element(y))))));
            alpha[a] = Permutation(std::move(img));
        }
        Cocycle2<GroupValues> c{q.group, GroupValues{k}, std::move(alpha),
                                std::vector<Elem>(q.group.order() * q.group.order())};
        for (Elem a = 0; a < q.group.order(); ++a)
            for (Elem b = 0; b < q.group.order(); ++b)
                c(a, b) = k.index_of(g.element(omega[coset_of_q[a] * t + coset_of_q[b]]));
        CocycleReport cr = verify_cocycle(c);
        r.cocycle_ok = cr.ok;
        if (!cr.ok) {
            r.ok = false;
            r.message = cr.message;
        }
    }

    const std::size_t n = k.order() * t;
    auto symbol_image = [&](Elem ke, std::size_t j) { return g.mul(g.index_of(k.element(ke)), rep_e[j]); };
    std::vector<char> hit(g.order(), 0);
    for (Elem a = 0; a < k.order(); ++a)
        for (std::size_t j = 0; j < t; ++j) {
            Elem x = symbol_image(a, j);
            if (hit[x]) {
                r.ok = false;
                r.message = "symbol map is not injective";
                return r;
            }
            hit[x] = 1;
            if (in_mid[j] != static_cast<char>(h_mid.contains(g.element(x)))) r.restriction_ok = false;
        }
    if (!r.restriction_ok) {
        r.ok = false;
        r.message = "restriction to H_mid/K does not land in H_mid";
    }

    for (std::size_t s1 = 0; s1 < n; ++s1)
        for (std::size_t s2 = 0; s2 < n; ++s2) {
            Elem k1 = static_cast<Elem>(s1 / t), k2 = static_cast<Elem>(s2 / t);
            std::size_t i = s1 % t, j = s2 % t;
            Elem k1g = g.index_of(k.element(k1)), k2g = g.index_of(k.element(k2));
            Elem kk = g.mul(g.mul(k1g, g.conj(rep_e[i], k2g)), omega[i * t + j]);
            if (!k.contains(g.element(kk))) {
                r.ok = false;
                r.message = "twisted product leaves K";
                r.witness = {k1, i, k2, j};
                return r;
            }
            Elem lhs = g.mul(symbol_image(k1, i), symbol_image(k2, j));
            Elem rhs = g.mul(kk, rep_e[prod[i * t + j]]);
            ++r.pairs_checked;
            if (lhs != rhs) {
                r.ok = false;
                r.message = "symbol map is not multiplicative";
                r.witness = {k1, i, k2, j};
                return r;
            }
        }
    return r;
}

struct SubfactorReport {
    std::size_t index = 0;
    bool outerness = false;
    bool crossed_relations = false;
};

/// Checks v_a v_b = ω_ab v_ab and v_a u_x v_a^* = u_{α_a(x)} in ℂ[H] with
/// v_a = u_{φ_a} and x over the generators of G.
inline bool crossed_relations_hold(const ExtensionResult& ext) {
    using Alg = GroupAlgebraElement<long long>;
    const PermGroup& h = ext.realized;
    const PermGroup& gm = ext.gamma();
    auto v = [&](Elem a) { return Alg::basis(h, h.index_of(ext.lifts[a])); };
    auto u = [&](Elem x) { return Alg::basis(h, ext.embedding(x)); };
    for (Elem a = 0; a < gm.order(); ++a) {
        for (Elem b = 0; b < gm.order(); ++b)
            if (!(v(a) * v(b) == u(ext.cocycle(a, b)) * v(gm.mul(a, b)))) return false;
        for (const auto& s : ext.base.generators()) {
            Elem x = ext.base.index_of(s);
            if (!(v(a) * u(x) * v(a).adjoint() == u(ext.cocycle.alpha[a][x]))) return false;
        }
    }
    return true;
}

inline SubfactorReport subfactor_report_from_out(const ExtensionResult& ext) {
    return {ext.index(), ext.outer, crossed_relations_hold(ext)};
}

inline SubfactorReport subfactor_report_from_out(const PermGroup& g, const std::vector<Permutation>& generators,
                                                 const Config& cfg = default_config()) {
    return subfactor_report_from_out(extension_from_out(g, generators, cfg));
}

}  // namespace sfw
