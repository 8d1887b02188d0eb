#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfw/config.hpp"
#include "sfw/error.hpp"
#include "sfw/perm/cosets.hpp"
#include "sfw/subfactor/group_algebra.hpp"

namespace sfw {

/// Tuples i = (i_1, ..., i_k) ∈ I^k stored as their lexicographic rank, with
/// i_1 most significant.
using Tuple = std::vector<std::uint32_t>;

/// The maps Θ^(k)_{ij} : C[G] -> C[H] for H ≤ G with fixed right coset
/// representatives g_1 = 1, ..., g_t. Entries are unscaled: the amplification
/// factor t^{k/2} cancels in the closed form and is not represented.
class ThetaMap {
public:
    ThetaMap(CosetData cd, std::size_t k, const Config& cfg = default_config()) : cd_(std::move(cd)), k_(k) {
        if (k == 0 || k > cfg.theta_k_cap)
            throw ResourceLimitError("tuple length " + std::to_string(k) + " outside 1.." +
                                     std::to_string(cfg.theta_k_cap));
        count_ = 1;
        for (std::size_t l = 0; l < k; ++l) count_ *= cd_.index;
        for (std::size_t i = 0; i < cd_.index; ++i) rep_elems_.push_back(cd_.rep_elem(i));
    }

    const CosetData& cosets() const noexcept { return cd_; }
    const PermGroup& group() const noexcept { return cd_.group; }
    std::size_t k() const noexcept { return k_; }
    std::size_t tuple_count() const noexcept { return count_; }

    Tuple decode(std::size_t rank) const {
        if (rank >= count_) throw InputError("tuple rank out of range");
        Tuple t(k_);
        for (std::size_t l = k_; l-- > 0;) {
            t[l] = static_cast<std::uint32_t>(rank % cd_.index);
            rank /= cd_.index;
        }
        return t;
    }
    std::size_t encode(const Tuple& t) const {
        check(t);
        std::size_t r = 0;
        for (auto x : t) r = r * cd_.index + x;
        return r;
    }

    /// g_{i_l} g_{i_{l+1}} ... g_{i_k}; l is 0-based, l = k gives the identity.
    Elem suffix(const Tuple& t, std::size_t l) const {
        Elem e = PermGroup::identity();
        for (std::size_t m = k_; m-- > l;) e = group().mul(rep_elems_[t[m]], e);
        return e;
    }
    /// g_i = g_{i_1} ... g_{i_k}
    Elem tuple_element(const Tuple& t) const { return suffix(t, 0); }

    /// u_{g_i g g_j^-1} when g_{i_l..k} g ∈ H g_{j_l..k} for every l, else nothing.
    std::optional<Elem> closed_form(Elem g, const Tuple& i, const Tuple& j) const {
        check(i);
        check(j);
        const PermGroup& G = group();
        for (std::size_t l = 0; l < k_; ++l) {
            Elem a = G.mul(suffix(i, l), g);
            Elem b = suffix(j, l);
            if (cd_.coset_of(a) != cd_.coset_of(b)) return std::nullopt;
        }
        return G.mul(G.mul(tuple_element(i), g), G.inv(tuple_element(j)));
    }

    /// E_H(u_{g_{i_1}} E_H(u_{g_{i_2}} ... E_H(u_{g_{i_k}} y u_{g_{j_k}}^*) ... u_{g_{j_2}}^*) u_{g_{j_1}}^*)
    /// evaluated in the group algebra.
    template <class S>
    GroupAlgebraElement<S> nested_form(const GroupAlgebraElement<S>& y, const Tuple& i, const Tuple& j) const {
        check(i);
        check(j);
        if (!(y.group() == group())) throw PreconditionError("theta: element over a different group");
        GroupAlgebraElement<S> cur = y;
        for (std::size_t l = k_; l-- > 0;) {
            auto ui = GroupAlgebraElement<S>::basis(group(), rep_elems_[i[l]]);
            auto uj = GroupAlgebraElement<S>::basis(group(), rep_elems_[j[l]]);
            cur = conditional_expectation(ui * cur * uj.adjoint(), cd_.subgroup);
        }
        return cur;
    }

    /// Θ^(k)_{ij}(u_g) by both formulas; InvariantViolation if they differ.
    template <class S = std::complex<double>>
    GroupAlgebraElement<S> entry(Elem g, const Tuple& i, const Tuple& j) const {
        auto nested = nested_form(GroupAlgebraElement<S>::basis(group(), g), i, j);
        auto closed = closed_form(g, i, j);
        GroupAlgebraElement<S> expect(group());
        if (closed) expect.add_term(*closed, S(1));
        if (!(nested == expect))
            throw InvariantViolation("theta: nested form " + nested.to_string() + " differs from closed form " +
                                     expect.to_string());
        return nested;
    }

    /// The unique i with g_{j_l..k} g^-1 ∈ H g_{i_l..k} for all l, found from
    /// l = k down to 1 and then rechecked.
    Tuple act(Elem g, const Tuple& j) const {
        check(j);
        const PermGroup& G = group();
        Tuple i(k_);
        Elem tail = PermGroup::identity();  // g_{i_{l+1}} ... g_{i_k}
        const Elem gi = G.inv(g);
        for (std::size_t l = k_; l-- > 0;) {
            Elem x = G.mul(G.mul(suffix(j, l), gi), G.inv(tail));
            i[l] = cd_.coset_of(x);
            tail = G.mul(rep_elems_[i[l]], tail);
        }
        for (std::size_t l = 0; l < k_; ++l)
            if (cd_.coset_of(G.mul(suffix(j, l), gi)) != cd_.coset_of(suffix(i, l)))
                throw InvariantViolation("tuple action: condition fails at position " + std::to_string(l));
        return i;
    }

    /// The action of every element of `sub` (a subgroup of G) on I^k by rank.
    GroupAction action_of(const PermGroup& sub) const {
        PermGroup::require_subgroup(sub, group(), "acting group");
        GroupAction a{sub, count_, {}};
        a.images.reserve(sub.order());
        for (const auto& p : sub.elements()) {
            Elem g = group().index_of(p);
            std::vector<Point> img(count_);
            for (std::size_t r = 0; r < count_; ++r) img[r] = static_cast<Point>(encode(act(g, decode(r))));
            a.images.emplace_back(std::move(img));
        }
        return a;
    }

    /// (Θ^(k)_{ij}(u_g))_{ij}, computed entry by entry through `entry`.
    template <class S = std::complex<double>>
    GroupAlgebraMatrix<S> matrix(Elem g) const {
        GroupAlgebraMatrix<S> m(group(), count_);
        for (std::size_t a = 0; a < count_; ++a)
            for (std::size_t b = 0; b < count_; ++b) m(a, b) = entry<S>(g, decode(a), decode(b));
        return m;
    }

private:
    void check(const Tuple& t) const {
        if (t.size() != k_) throw InputError("tuple has length " + std::to_string(t.size()) + ", expected " +
                                             std::to_string(k_));
        for (auto x : t)
            if (x >= cd_.index) throw InputError("tuple entry " + std::to_string(x) + " outside I");
    }

    CosetData cd_;
    std::size_t k_;
    std::size_t count_ = 1;
    std::vector<Elem> rep_elems_;
};

/// Θ^(k)_{ij}(u_g) for a single entry.
template <class S = std::complex<double>>
GroupAlgebraElement<S> theta_entry(const Permutation& g, const Tuple& i, const Tuple& j, const CosetData& cd,
                                   const Config& cfg = default_config()) {
    ThetaMap th(cd, i.size(), cfg);
    return th.entry<S>(cd.group.index_of(g), i, j);
}

inline Tuple action_on_tuples(const Permutation& g, const Tuple& j, const CosetData& cd,
                              const Config& cfg = default_config()) {
    ThetaMap th(cd, j.size(), cfg);
    return th.act(cd.group.index_of(g), j);
}

}  // namespace sfw
