#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sfw/error.hpp"
#include "sfw/perm/homomorphism.hpp"

namespace sfw {

/// 4cos²(π/n)
inline double jones_value(std::uint64_t n) {
    const double c = std::cos(std::numbers::pi / static_cast<double>(n));
    return 4.0 * c * c;
}

struct SpectrumVerdict {
    enum class Kind { Discrete, Continuous, NotInSpectrum };
    Kind kind = Kind::NotInSpectrum;
    std::uint64_t n = 0;  // set for Discrete
    double value = 0;
    double residual = 0;
};

inline const char* kind_name(SpectrumVerdict::Kind k) {
    switch (k) {
        case SpectrumVerdict::Kind::Discrete: return "discrete";
        case SpectrumVerdict::Kind::Continuous: return "continuous";
        default: return "not-in-spectrum";
    }
}

/// Slack below 4 that still counts as the continuous part.
inline constexpr double kContinuousSlack = 1e-12;

/// Membership of x in {4cos²(π/n) : n ≥ 3} ∪ [4, ∞). Values of n are scanned
/// upward while 4cos²(π/n) ≤ x + tol; among matches within tol the nearest
/// is reported. Near 4 the discrete points crowd together and several n may
/// match; the residual is returned so that callers can judge.
inline SpectrumVerdict jones_spectrum_query(double x, double tol = 1e-9) {
    if (!std::isfinite(x)) throw InputError("spectrum: value is not finite");
    if (!std::isfinite(tol) || tol <= 0) throw InputError("spectrum: tolerance must be positive");
    SpectrumVerdict v;
    v.value = x;
    if (x >= 4.0 - kContinuousSlack) {
        v.kind = SpectrumVerdict::Kind::Continuous;
        v.residual = x >= 4.0 ? 0.0 : 4.0 - x;
        return v;
    }
    double best = INFINITY;
    std::uint64_t best_n = 0;
    for (std::uint64_t n = 3;; ++n) {
        const double val = jones_value(n);
        const double d = std::abs(val - x);
        if (d < best) {
            best = d;
            best_n = n;
        }
        if (val > x + tol || val >= 4.0 - kContinuousSlack) break;
    }
    if (best <= tol) {
        v.kind = SpectrumVerdict::Kind::Discrete;
        v.n = best_n;
        v.residual = best;
    } else {
        v.residual = std::min(best, 4.0 - x);
    }
    return v;
}

/// One summand (s_i, [G:K_i], [H:γ_i(K_i)]).
struct VirtualPart {
    std::uint64_t s = 0;
    std::uint64_t index_g_k = 0;
    std::uint64_t index_h_gamma_k = 0;
};

struct VirtualEmbeddingSpec {
    std::uint64_t t = 0;
    std::vector<VirtualPart> parts;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InputError("index arithmetic overflows 64 bits");
    return r;
}
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InputError("index arithmetic overflows 64 bits");
    return r;
}

}  // namespace detail

/// t · Σ_i s_i [H:γ_i(K_i)], after checking Σ_i s_i [G:K_i] = t.
inline std::uint64_t virtual_index(const VirtualEmbeddingSpec& spec) {
    if (spec.t == 0) throw InputError("virtual index: t must be positive");
    if (spec.parts.empty()) throw InputError("virtual index: at least one part is required");
    std::uint64_t lhs = 0, sum = 0;
    for (const auto& p : spec.parts) {
        if (p.s == 0 || p.index_g_k == 0 || p.index_h_gamma_k == 0)
            throw InputError("virtual index: part entries must be positive");
        lhs = detail::checked_add(lhs, detail::checked_mul(p.s, p.index_g_k));
        sum = detail::checked_add(sum, detail::checked_mul(p.s, p.index_h_gamma_k));
    }
    if (lhs != spec.t)
        throw PreconditionError("virtual index: sum of s_i [G:K_i] is " + std::to_string(lhs) + " but t is " +
                                std::to_string(spec.t));
    return detail::checked_mul(spec.t, sum);
}

/// A part given by groups: K ≤ G, γ : K -> H injective, multiplicity s.
struct ConcreteVirtualPart {
    PermGroup k;
    GroupHom gamma;
    std::uint64_t s = 1;
};

inline VirtualEmbeddingSpec virtual_spec_from_groups(const PermGroup& g, const PermGroup& h, std::uint64_t t,
                                                     const std::vector<ConcreteVirtualPart>& parts) {
    VirtualEmbeddingSpec spec{t, {}};
    for (const auto& p : parts) {
        PermGroup::require_subgroup(p.k, g, "K_i");
        if (!(p.gamma.source == p.k) || !(p.gamma.target == h))
            throw PreconditionError("virtual index: gamma must map K_i into H");
        if (!p.gamma.is_homomorphism()) throw PreconditionError("virtual index: gamma is not a homomorphism");
        if (!p.gamma.is_injective()) throw PreconditionError("virtual index: gamma is not injective");
        spec.parts.push_back({p.s, g.order() / p.k.order(), h.order() / p.gamma.image_group().order()});
    }
    return spec;
}

using LocalRational = boost::multiprecision::cpp_rational;

struct LocalIndexPart {
    LocalRational trace;
    double local_index = 0;
};

/// Σ_i [p_i M p_i : N p_i] / tr(p_i) for a partition of unity by projections
/// p_i with the given traces.
inline double local_index_combine(const std::vector<LocalIndexPart>& parts) {
    if (parts.empty()) throw InputError("local index: no parts");
    LocalRational total = 0;
    double out = 0;
    for (const auto& p : parts) {
        if (p.trace <= 0 || p.trace > 1) throw InputError("local index: trace outside (0, 1]");
        if (!std::isfinite(p.local_index) || p.local_index <= 0)
            throw InputError("local index: local index must be positive and finite");
        total += p.trace;
        out += p.local_index / static_cast<double>(p.trace);
    }
    if (total != 1) throw PreconditionError("local index: traces sum to " + total.str() + ", not 1");
    return out;
}

namespace detail {

inline void require_index(double x, const char* what) {
    if (!std::isfinite(x) || x <= 0) throw InputError(std::string(what) + " must be positive and finite");
}

}  // namespace detail

/// max([M:R], [R:N]) ≤ [M:N] ≤ [M:R][R:N] up to 1e-12.
inline bool index_chain_check(double idx_mn, double idx_mr, double idx_rn) {
    detail::require_index(idx_mn, "[M:N]");
    detail::require_index(idx_mr, "[M:R]");
    detail::require_index(idx_rn, "[R:N]");
    constexpr double eps = 1e-12;
    return std::max(idx_mr, idx_rn) <= idx_mn + eps && idx_mn <= idx_mr * idx_rn + eps;
}

/// dim(N' ∩ M) ≤ [M:N] + 1 up to 1e-12.
inline bool commutant_bound_check(long long dim, double idx) {
    if (dim < 0) throw InputError("dimension must be nonnegative");
    detail::require_index(idx, "index");
    return static_cast<double>(dim) <= idx + 1.0 + 1e-12;
}

}  // namespace sfw
