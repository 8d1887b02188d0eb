#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfw/error.hpp"
#include "sfw/perm/automorphism.hpp"
#include "sfw/perm/group.hpp"

namespace sfw {

/// Values in a permutation group G; automorphisms act on G's element indices.
struct GroupValues {
    using Value = Elem;
    using Aut = Permutation;

    PermGroup group;

    Value one() const { return PermGroup::identity(); }
    Value mul(Value a, Value b) const { return group.mul(a, b); }
    Value inv(Value a) const { return group.inv(a); }
    Value apply(const Aut& f, Value v) const { return f[v]; }
    bool eq(Value a, Value b) const { return a == b; }
    Aut id() const { return Permutation::identity(group.order()); }
    Aut compose(const Aut& f, const Aut& g) const { return f * g; }
    Aut ad(Value w) const { return inner_automorphism(group, w); }
    bool aut_eq(const Aut& f, const Aut& g) const { return f == g; }
    void check_value(Value v) const {
        if (v >= group.order()) throw InputError("cocycle value outside the value group");
    }
    void check_aut(const Aut& f) const {
        if (!is_automorphism(group, f)) throw InputError("action entry is not an automorphism of the value group");
    }
    std::string text(Value v) const { return group.element(v).to_cycles(); }
};

/// Unit complex scalars with trivial action; Ad of a scalar is the identity.
struct CircleValues {
    using Value = std::complex<double>;
    struct Aut {
        friend bool operator==(const Aut&, const Aut&) = default;
    };

    double tol = 1e-9;

    Value one() const { return 1.0; }
    Value mul(Value a, Value b) const { return a * b; }
    Value inv(Value a) const { return std::conj(a); }
    Value apply(const Aut&, Value v) const { return v; }
    bool eq(Value a, Value b) const { return std::abs(a - b) <= tol; }
    Aut id() const { return {}; }
    Aut compose(const Aut&, const Aut&) const { return {}; }
    Aut ad(Value) const { return {}; }
    bool aut_eq(const Aut&, const Aut&) const { return true; }
    void check_value(Value v) const {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(std::abs(v) - 1.0) > tol)
            throw InputError("scalar cocycle value is not unitary");
    }
    void check_aut(const Aut&) const {}
    std::string text(Value v) const { return std::to_string(v.real()) + "+" + std::to_string(v.imag()) + "i"; }
};

/// Maps α : Γ -> Aut(values) and ω : Γ × Γ -> values, indexed by Γ's
/// element indices; omega is row-major.
template <class Model>
struct Cocycle2 {
    using Value = typename Model::Value;
    using Aut = typename Model::Aut;

    PermGroup gamma;
    Model values;
    std::vector<Aut> alpha;
    std::vector<Value> omega;

    const Value& operator()(Elem a, Elem b) const { return omega.at(std::size_t(a) * gamma.order() + b); }
    Value& operator()(Elem a, Elem b) { return omega.at(std::size_t(a) * gamma.order() + b); }

    bool is_normalized() const {
        for (Elem g = 0; g < gamma.order(); ++g)
            if (!values.eq((*this)(0, g), values.one()) || !values.eq((*this)(g, 0), values.one())) return false;
        return true;
    }
};

/// Outcome of verify_cocycle: `item` is 1 (α_1 = id), 2 (α_a α_b =
/// Ad(ω_ab) α_ab) or 3 (cocycle identity) for the first failure in
/// lexicographic order of the witness.
struct CocycleReport {
    bool ok = true;
    int item = 0;
    std::vector<Elem> witness;
    std::string message;
};

namespace detail {

template <class Model>
void check_tables(const Cocycle2<Model>& c) {
    const std::size_t n = c.gamma.order();
    if (c.alpha.size() != n || c.omega.size() != n * n)
        throw InputError("cocycle tables must have |Gamma| and |Gamma|^2 entries");
    for (const auto& a : c.alpha) c.values.check_aut(a);
    for (const auto& v : c.omega) c.values.check_value(v);
}

}  // namespace detail

/// Checks α_1 = id, α_a α_b = Ad(ω_ab) α_ab, and
/// α_a(ω_bc) ω_{a,bc} = ω_ab ω_{ab,c} over all pairs and triples.
/// With require_unital = false the first item is skipped.
template <class Model>
CocycleReport verify_cocycle(const Cocycle2<Model>& c, bool require_unital = true) {
    detail::check_tables(c);
    const Model& m = c.values;
    const PermGroup& gm = c.gamma;
    CocycleReport r;
    if (require_unital && !m.aut_eq(c.alpha[0], m.id())) return {false, 1, {0}, "alpha at the identity is not the identity"};
    for (Elem a = 0; a < gm.order(); ++a)
        for (Elem b = 0; b < gm.order(); ++b) {
            auto lhs = m.compose(c.alpha[a], c.alpha[b]);
            auto rhs = m.compose(m.ad(c(a, b)), c.alpha[gm.mul(a, b)]);
            if (!m.aut_eq(lhs, rhs)) return {false, 2, {a, b}, "alpha_a alpha_b differs from Ad(omega_ab) alpha_ab"};
        }
    for (Elem a = 0; a < gm.order(); ++a)
        for (Elem b = 0; b < gm.order(); ++b)
            for (Elem d = 0; d < gm.order(); ++d) {
                auto lhs = m.mul(m.apply(c.alpha[a], c(b, d)), c(a, gm.mul(b, d)));
                auto rhs = m.mul(c(a, b), c(gm.mul(a, b), d));
                if (!m.eq(lhs, rhs))
                    return {false, 3, {a, b, d},
                            "cocycle identity fails: " + m.text(lhs) + " vs " + m.text(rhs)};
            }
    return r;
}

/// Coboundary change α'_k = Ad(λ_k) α_k, ω'_{g,h} = λ_g α_g(λ_h) ω_{g,h} λ_{gh}^-1.
template <class Model>
Cocycle2<Model> apply_coboundary(const Cocycle2<Model>& c, const std::vector<typename Model::Value>& lambda) {
    const Model& m = c.values;
    const PermGroup& gm = c.gamma;
    if (lambda.size() != gm.order()) throw InputError("coboundary needs one value per element");
    Cocycle2<Model> out = c;
    for (Elem k = 0; k < gm.order(); ++k) out.alpha[k] = m.compose(m.ad(lambda[k]), c.alpha[k]);
    for (Elem g = 0; g < gm.order(); ++g)
        for (Elem h = 0; h < gm.order(); ++h)
            out(g, h) = m.mul(m.mul(m.mul(lambda[g], m.apply(c.alpha[g], lambda[h])), c(g, h)), m.inv(lambda[gm.mul(g, h)]));
    return out;
}

/// Normalizes a cocycle satisfying items 2 and 3. First α_1 is made the identity through
/// the coboundary λ_1 = ω_11^-1 (λ_k = 1 otherwise); then, with c = ω_11
/// now central, ω_{g,h} is replaced by α_g(c)^-1 ω_{g,h}. For scalar values
/// with trivial action the second step is ω -> ω_11^* ω. Idempotent on
/// normalized input.
template <class Model>
Cocycle2<Model> normalize_cocycle(const Cocycle2<Model>& c) {
    CocycleReport rep = verify_cocycle(c, false);
    if (!rep.ok) throw PreconditionError("normalize: input is not a cocycle (" + rep.message + ")");
    const Model& m = c.values;
    const PermGroup& gm = c.gamma;
    Cocycle2<Model> out = c;
    if (!m.aut_eq(c.alpha[0], m.id())) {
        std::vector<typename Model::Value> lambda(gm.order(), m.one());
        lambda[0] = m.inv(c(0, 0));
        out = apply_coboundary(c, lambda);
    }
    const auto c11 = out(0, 0);
    Cocycle2<Model> norm = out;
    for (Elem g = 0; g < gm.order(); ++g)
        for (Elem h = 0; h < gm.order(); ++h) norm(g, h) = m.mul(m.inv(m.apply(out.alpha[g], c11)), out(g, h));
    if (!norm.is_normalized() || !verify_cocycle(norm).ok)
        throw InvariantViolation("normalization did not produce a normalized cocycle");
    return norm;
}

/// {"quotient_order": n, "values": [[i, j, "element"], ...]} for G-valued
/// cocycles; entries are listed in row-major order.
inline nlohmann::json cocycle_json(const Cocycle2<GroupValues>& c) {
    nlohmann::json j;
    j["quotient_order"] = c.gamma.order();
    j["values"] = nlohmann::json::array();
    for (Elem a = 0; a < c.gamma.order(); ++a)
        for (Elem b = 0; b < c.gamma.order(); ++b) j["values"].push_back({a, b, c.values.text(c(a, b))});
    return j;
}

/// Reads the values table back; the caller supplies Γ, the value group and α.
inline Cocycle2<GroupValues> cocycle_from_json(const nlohmann::json& j, const PermGroup& gamma, const PermGroup& values,
                                               std::vector<Permutation> alpha) {
    try {
        if (j.at("quotient_order").get<std::size_t>() != gamma.order())
            throw InputError("cocycle json: quotient order does not match");
        Cocycle2<GroupValues> c{gamma, GroupValues{values}, std::move(alpha),
                                std::vector<Elem>(gamma.order() * gamma.order(), 0)};
        std::vector<char> seen(c.omega.size(), 0);
        for (const auto& e : j.at("values")) {
            auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
            if (a >= gamma.order() || b >= gamma.order()) throw InputError("cocycle json: index out of range");
            Permutation p = Permutation::from_cycles(values.degree(), e.at(2).get<std::string>());
            c.omega[a * gamma.order() + b] = values.index_of(p);
            seen[a * gamma.order() + b] = 1;
        }
        for (char s : seen)
            if (!s) throw InputError("cocycle json: table is not total");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("cocycle json: ") + e.what());
    } catch (const PreconditionError& e) {
        throw InputError(std::string("cocycle json: ") + e.what());
    }
}

}  // namespace sfw
