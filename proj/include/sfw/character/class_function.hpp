#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include "sfw/config.hpp"
#include "sfw/error.hpp"
#include "sfw/perm/classes.hpp"
#include "sfw/perm/homomorphism.hpp"

namespace sfw {

using Complex = std::complex<double>;

/// A function constant on conjugacy classes, stored per class.
struct ClassFunction {
    std::shared_ptr<const ConjClassData> classes;
    std::vector<Complex> values;

    const PermGroup& group() const { return classes->group; }
    Complex at(Elem x) const { return values.at(classes->class_of.at(x)); }
    Complex at(const Permutation& p) const { return values.at(classes->class_of_perm(p)); }
    Complex degree() const { return values.at(0); }
};

inline std::shared_ptr<const ConjClassData> class_data(const PermGroup& g) {
    return std::make_shared<const ConjClassData>(conjugacy_classes(g));
}

inline ClassFunction trivial_character(std::shared_ptr<const ConjClassData> cc) {
    const std::size_t r = cc->count();
    return ClassFunction{std::move(cc), std::vector<Complex>(r, 1.0)};
}

inline ClassFunction trivial_character(const PermGroup& g) { return trivial_character(class_data(g)); }

/// Result of an inner product of two class functions. `rounded` and
/// `residual` refer to the nearest integer of the real part; the imaginary
/// part counts toward the residual.
struct InnerProduct {
    Complex value;
    long long rounded = 0;
    double residual = 0;
};

/// (1/|G|) Σ_classes |C| χ(C) conj(ψ(C)).
inline InnerProduct inner_product(const ClassFunction& chi, const ClassFunction& psi) {
    if (!(chi.group() == psi.group())) throw PreconditionError("inner product: class functions on different groups");
    const ConjClassData& cc = *chi.classes;
    Complex s = 0;
    for (std::size_t c = 0; c < cc.count(); ++c)
        s += static_cast<double>(cc.sizes[c]) * chi.values[c] * std::conj(psi.values[c]);
    s /= static_cast<double>(chi.group().order());
    InnerProduct ip{s, std::llround(s.real()), 0};
    ip.residual = std::abs(s - Complex(static_cast<double>(ip.rounded), 0));
    return ip;
}

/// Integer multiplicity ⟨chi, psi⟩ for characters. Throws InvariantViolation
/// when the value is not a nonnegative integer within `tol`.
inline long long multiplicity(const ClassFunction& chi, const ClassFunction& psi,
                              double tol = default_config().tol.multiplicity) {
    InnerProduct ip = inner_product(chi, psi);
    if (ip.residual > tol || ip.rounded < 0)
        throw InvariantViolation("multiplicity " + std::to_string(ip.value.real()) + "+" +
                                 std::to_string(ip.value.imag()) + "i is not a nonnegative integer");
    return ip.rounded;
}

/// Value on each H-class is chi at that class representative.
inline ClassFunction restrict(const ClassFunction& chi, const PermGroup& h) {
    PermGroup::require_subgroup(h, chi.group());
    auto cc = class_data(h);
    ClassFunction out{cc, std::vector<Complex>(cc->count())};
    for (std::size_t c = 0; c < cc->count(); ++c) out.values[c] = chi.at(cc->rep(c));
    return out;
}

/// Frobenius formula Ind χ(g) = (1/|H|) Σ_{x ∈ G, x g x^-1 ∈ H} χ(x g x^-1).
inline ClassFunction induce(const ClassFunction& chi, std::shared_ptr<const ConjClassData> gcc) {
    const PermGroup& g = gcc->group;
    const PermGroup& h = chi.group();
    PermGroup::require_subgroup(h, g);
    ClassFunction out{gcc, std::vector<Complex>(gcc->count())};
    for (std::size_t c = 0; c < gcc->count(); ++c) {
        const Permutation& rep = gcc->rep(c);
        Complex s = 0;
        for (const auto& x : g.elements()) {
            Permutation y = x * rep * x.inverse();
            if (h.contains(y)) s += chi.at(y);
        }
        out.values[c] = s / static_cast<double>(h.order());
    }
    return out;
}

inline ClassFunction induce(const ClassFunction& chi, const PermGroup& g) { return induce(chi, class_data(g)); }

/// Fixed-point counts of an action.
inline ClassFunction permutation_character(std::shared_ptr<const ConjClassData> cc, const GroupAction& action) {
    if (!(action.group == cc->group) || !action.is_action()) throw InputError("permutation character: invalid action");
    ClassFunction out{cc, std::vector<Complex>(cc->count())};
    for (std::size_t c = 0; c < cc->count(); ++c) {
        const Permutation& p = action(cc->reps[c]);
        std::size_t fixed = 0;
        for (Point x = 0; x < p.degree(); ++x) fixed += p[x] == x;
        out.values[c] = static_cast<double>(fixed);
    }
    return out;
}

inline ClassFunction permutation_character(const PermGroup& g, const GroupAction& action) {
    return permutation_character(class_data(g), action);
}

}  // namespace sfw
