#pragma once

#include <string>
#include <vector>

#include "sfw/character/table.hpp"
#include "sfw/config.hpp"
#include "sfw/error.hpp"
#include "sfw/subfactor/rational_rank.hpp"
#include "sfw/subfactor/theta.hpp"

namespace sfw {

/// Which ambient algebra the relative commutant of Θ^(k)(L(G₀)) is taken in:
/// the amplification of L(G) or of L(H).
enum class CommutantSide { InG, InH };

inline const char* side_name(CommutantSide s) { return s == CommutantSide::InG ? "in-L(G)" : "in-L(H)"; }

namespace detail {

inline void require_chain(const PermGroup& g, const PermGroup& g0, const PermGroup& h) {
    if (!h.is_subgroup_of(g0) || !g0.is_subgroup_of(g))
        throw PreconditionError("commutant: expected a chain H <= G0 <= G");
}

inline long long sum_of_squared_multiplicities(const PermGroup& group, const GroupAction& act, const Config& cfg) {
    CharacterTable t = character_table(group, cfg);
    ClassFunction pi = permutation_character(t.classes, act);
    long long s = 0;
    for (long long m : t.decompose(pi, cfg.tol.multiplicity)) s += m * m;
    return s;
}

}  // namespace detail

/// dim of Θ^(k)(L(G₀))' in the chosen amplification, from characters:
///  in-L(G): Σ over Ĝ₀ of (multiplicity in ℂI^k)²;
///  in-L(H): Σ over G₀-orbit representatives m on I of the same sum for the
///           stabilizer K_m acting on T_m = {i ∈ I^k : g_i ∈ H g_m}.
inline long long relative_commutant_dim(const PermGroup& g, const PermGroup& g0, const PermGroup& h, std::size_t k,
                                        CommutantSide side, const Config& cfg = default_config()) {
    detail::require_chain(g, g0, h);
    ThetaMap theta(right_coset_data(g, h), k, cfg);
    if (side == CommutantSide::InG) return detail::sum_of_squared_multiplicities(g0, theta.action_of(g0), cfg);

    const CosetData& cd = theta.cosets();
    const PermGroup& G = cd.group;
    std::vector<std::uint32_t> tuple_coset(theta.tuple_count());
    for (std::size_t r = 0; r < theta.tuple_count(); ++r) tuple_coset[r] = cd.coset_of(theta.tuple_element(theta.decode(r)));

    std::vector<char> seen(cd.index, 0);
    long long total = 0;
    for (std::uint32_t m = 0; m < cd.index; ++m) {
        if (seen[m]) continue;
        std::vector<Permutation> stab;
        for (const auto& x : g0.elements()) {
            Elem xe = G.index_of(x);
            std::uint32_t img = cd.coset_of(G.mul(cd.rep_elem(m), G.inv(xe)));
            seen[img] = 1;
            if (img == m) stab.push_back(x);
        }
        PermGroup km = PermGroup::from_closed_set(G.degree(), std::move(stab));

        std::vector<std::size_t> members;
        std::vector<std::size_t> local(theta.tuple_count(), SIZE_MAX);
        for (std::size_t r = 0; r < theta.tuple_count(); ++r)
            if (tuple_coset[r] == m) {
                local[r] = members.size();
                members.push_back(r);
            }
        GroupAction act{km, members.size(), {}};
        for (const auto& x : km.elements()) {
            Elem xe = G.index_of(x);
            std::vector<Point> img(members.size());
            for (std::size_t a = 0; a < members.size(); ++a) {
                std::size_t to = theta.encode(theta.act(xe, theta.decode(members[a])));
                if (local[to] == SIZE_MAX) throw InvariantViolation("stabilizer moves a tuple out of its coset block");
                img[a] = static_cast<Point>(local[to]);
            }
            act.images.emplace_back(std::move(img));
        }
        total += detail::sum_of_squared_multiplicities(km, act, cfg);
    }
    return total;
}

/// Independent oracle: solves x Θ^(k)(u_s) = Θ^(k)(u_s) x over generators s of
/// G₀ for x in M_{I^k}(ℂ[G]) with entries x_ij = c_ij u_{g_i g_j^-1}
/// (c_ij = 0 when g_i g_j^-1 ∉ H on the in-L(H) side). Every entry of both
/// products is expanded in the group basis; each coefficient gives one linear
/// equation in the c_ij, and the rank is taken exactly over ℚ.
inline long long brute_force_commutant_dim(const PermGroup& g, const PermGroup& g0, const PermGroup& h, std::size_t k,
                                           CommutantSide side, const Config& cfg = default_config()) {
    detail::require_chain(g, g0, h);
    ThetaMap theta(right_coset_data(g, h), k, cfg);
    const std::size_t n = theta.tuple_count();
    if (g.order() * n > cfg.oracle_cap)
        throw ResourceLimitError("commutant oracle: |G| t^k = " + std::to_string(g.order() * n) +
                                 " exceeds oracle cap " + std::to_string(cfg.oracle_cap));
    const PermGroup& G = theta.group();

    std::vector<Elem> te(n);
    for (std::size_t r = 0; r < n; ++r) te[r] = theta.tuple_element(theta.decode(r));
    // Group element carried by the unknown c_ab, or nothing when c_ab is forced to 0.
    std::vector<std::optional<Elem>> carrier(n * n);
    std::size_t unknowns = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Elem z = G.mul(te[a], G.inv(te[b]));
            if (side == CommutantSide::InG || h.contains(G.element(z))) {
                carrier[a * n + b] = z;
                ++unknowns;
            }
        }

    SparseRationalEliminator elim;
    for (const auto& s : g0.generators()) {
        const auto m = theta.matrix<Rational>(G.index_of(s));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::map<Elem, SparseRationalEliminator::Row> eqs;
                for (std::size_t c = 0; c < n; ++c) {
                    if (auto x = carrier[a * n + c])  // x_ac Θ_cb
                        for (const auto& [z, coef] : m(c, b).terms()) eqs[G.mul(*x, z)][a * n + c] += coef;
                    if (auto x = carrier[c * n + b])  // Θ_ac x_cb
                        for (const auto& [z, coef] : m(a, c).terms()) eqs[G.mul(z, *x)][c * n + b] -= coef;
                }
                for (auto& [elem, row] : eqs) elim.add(std::move(row));
            }
    }
    return static_cast<long long>(unknowns - elim.rank());
}

}  // namespace sfw
