#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "sfw/error.hpp"
#include "sfw/perm/cosets.hpp"
#include "sfw/perm/homomorphism.hpp"
#include "sfw/subfactor/group_algebra.hpp"

namespace sfw {

/// ρ : K -> U(s) as explicit s×s matrices (row-major) per element of K.
template <class S>
struct MatrixRep {
    PermGroup group;
    std::size_t degree = 1;
    std::vector<std::vector<S>> images;

    const S& at(Elem x, std::size_t i, std::size_t j) const { return images.at(x).at(i * degree + j); }
};

template <class S>
MatrixRep<S> trivial_rep(const PermGroup& k) {
    return {k, 1, std::vector<std::vector<S>>(k.order(), std::vector<S>{S(1)})};
}

/// Degree-one representation from values on K's elements.
template <class S>
MatrixRep<S> linear_rep(const PermGroup& k, const std::vector<S>& values) {
    if (values.size() != k.order()) throw InputError("linear representation needs one value per element");
    MatrixRep<S> r{k, 1, {}};
    for (const S& v : values) r.images.push_back({v});
    return r;
}

namespace detail {

template <class S>
bool scalar_close(const S& a, const S& b, double tol) {
    if constexpr (std::is_floating_point_v<S> || is_complex<S>::value)
        return std::abs(a - b) <= tol;
    else
        return a == b;
}

template <class S>
bool element_close(const GroupAlgebraElement<S>& a, const GroupAlgebraElement<S>& b, double tol) {
    for (const auto& [e, c] : a.terms())
        if (!scalar_close(c, b.coeff(e), tol)) return false;
    for (const auto& [e, c] : b.terms())
        if (!scalar_close(a.coeff(e), c, tol)) return false;
    return true;
}

template <class S>
bool matrix_close(const GroupAlgebraMatrix<S>& a, const GroupAlgebraMatrix<S>& b, double tol) {
    if (a.n != b.n) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (!element_close(a.entries[i], b.entries[i], tol)) return false;
    return true;
}

template <class S>
void require_unitary_rep(const MatrixRep<S>& r, double tol) {
    const std::size_t s = r.degree;
    if (s == 0 || r.images.size() != r.group.order()) throw InputError("representation: wrong number of images");
    for (const auto& m : r.images)
        if (m.size() != s * s) throw InputError("representation: image has wrong shape");
    auto prod = [&](Elem x, Elem y, std::size_t i, std::size_t j) {
        S acc(0);
        for (std::size_t l = 0; l < s; ++l) acc += r.at(x, i, l) * r.at(y, l, j);
        return acc;
    };
    for (Elem x = 0; x < r.group.order(); ++x) {
        for (const auto& gen : r.group.generators()) {
            Elem y = r.group.index_of(gen);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j)
                    if (!scalar_close(prod(x, y, i, j), r.at(r.group.mul(x, y), i, j), tol))
                        throw PreconditionError("representation: rho is not a homomorphism");
        }
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                S acc(0);
                for (std::size_t l = 0; l < s; ++l) acc += r.at(x, i, l) * conj_scalar(r.at(x, j, l));
                if (!scalar_close(acc, S(i == j ? 1 : 0), tol)) throw PreconditionError("representation: rho is not unitary");
            }
    }
}

}  // namespace detail

/// Ind_K^G(π_{γ,ρ}) with π(k) = u_{γ(k)} ⊗ ρ(k), realized on ℂ^s ⊗ ℓ²(G/K):
/// block (ghK, hK) of Ind(g) is π(c(g, hK)) with c(g, hK) = χ(ghK)^-1 g χ(hK).
template <class S>
class InducedHomomorphism {
public:
    /// `section` lists χ on the left cosets of K in the order of
    /// left_coset_data(G, K); empty selects those (lexicographically least)
    /// representatives.
    InducedHomomorphism(PermGroup g, PermGroup k, GroupHom gamma, MatrixRep<S> rho,
                        std::vector<Permutation> section = {}, double tol = 1e-9)
        : g_(std::move(g)), k_(std::move(k)), gamma_(std::move(gamma)), rho_(std::move(rho)),
          cosets_(left_coset_data(g_, k_)), tol_(tol) {
        if (!(gamma_.source == k_)) throw PreconditionError("induction: gamma must be defined on K");
        if (!gamma_.is_homomorphism()) throw PreconditionError("induction: gamma is not a homomorphism");
        if (!gamma_.is_injective()) throw PreconditionError("induction: gamma is not injective");
        if (!(rho_.group == k_)) throw PreconditionError("induction: rho must be defined on K");
        detail::require_unitary_rep(rho_, tol_);
        if (section.empty()) section = cosets_.reps;
        if (section.size() != cosets_.index()) throw PreconditionError("induction: section has wrong length");
        for (std::size_t c = 0; c < section.size(); ++c)
            if (!g_.contains(section[c]) || cosets_.coset_of(section[c]) != c)
                throw PreconditionError("induction: section value " + section[c].to_cycles() + " lies outside its coset");
        if (!section[cosets_.coset_of(Permutation::identity(g_.degree()))].is_identity())
            throw PreconditionError("induction: section must send K to the identity");
        section_.reserve(section.size());
        for (const auto& p : section) section_.push_back(g_.index_of(p));

        if (!verify()) throw InvariantViolation("induction: result is not a unitary homomorphism");
    }

    const PermGroup& target() const noexcept { return gamma_.target; }
    std::size_t coset_count() const noexcept { return cosets_.index(); }
    std::size_t size() const noexcept { return cosets_.index() * rho_.degree; }

    /// c(g, hK) as an element of K (index in K).
    Elem cocycle(Elem g, std::size_t coset) const {
        Elem ghk = g_.mul(g, section_.at(coset));
        std::size_t to = cosets_.coset_id.at(ghk);
        Elem c = g_.mul(g_.inv(section_[to]), ghk);
        return k_.index_of(g_.element(c));
    }

    std::size_t image_coset(Elem g, std::size_t coset) const { return cosets_.coset_id.at(g_.mul(g, section_.at(coset))); }

    GroupAlgebraMatrix<S> operator()(Elem g) const {
        const std::size_t s = rho_.degree;
        GroupAlgebraMatrix<S> m(target(), size());
        for (std::size_t c = 0; c < coset_count(); ++c) {
            Elem kc = cocycle(g, c);
            std::size_t r = image_coset(g, c);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j) {
                    const S& v = rho_.at(kc, i, j);
                    if (!detail::scalar_close(v, S(0), 0.0)) m(r * s + i, c * s + j).add_term(gamma_(kc), v);
                }
        }
        return m;
    }
    GroupAlgebraMatrix<S> operator()(const Permutation& g) const { return (*this)(g_.index_of(g)); }

    /// Ind(x) Ind(y) = Ind(xy) for x, y generators and Ind(x) Ind(x)^* = 1.
    bool verify() const {
        std::vector<Elem> gens;
        for (const auto& p : g_.generators()) gens.push_back(g_.index_of(p));
        const auto one = GroupAlgebraMatrix<S>::identity(target(), size());
        if (!detail::matrix_close((*this)(PermGroup::identity()), one, tol_)) return false;
        for (Elem x : gens) {
            const auto ix = (*this)(x);
            if (!detail::matrix_close(ix * ix.adjoint(), one, tol_)) return false;
            for (Elem y : gens)
                if (!detail::matrix_close(ix * (*this)(y), (*this)(g_.mul(x, y)), tol_)) return false;
        }
        return true;
    }

    /// The same checks over every pair of elements.
    bool verify_exhaustive() const {
        const auto one = GroupAlgebraMatrix<S>::identity(target(), size());
        std::vector<GroupAlgebraMatrix<S>> all;
        for (Elem x = 0; x < g_.order(); ++x) all.push_back((*this)(x));
        for (Elem x = 0; x < g_.order(); ++x) {
            if (!detail::matrix_close(all[x] * all[x].adjoint(), one, tol_)) return false;
            for (Elem y = 0; y < g_.order(); ++y)
                if (!detail::matrix_close(all[x] * all[y], all[g_.mul(x, y)], tol_)) return false;
        }
        return true;
    }

private:
    PermGroup g_, k_;
    GroupHom gamma_;
    MatrixRep<S> rho_;
    LeftCosetData cosets_;
    std::vector<Elem> section_;
    double tol_;
};

}  // namespace sfw
