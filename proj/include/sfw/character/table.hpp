#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "sfw/character/class_function.hpp"

namespace sfw {

struct CharacterTable {
    std::shared_ptr<const ConjClassData> classes;
    std::vector<ClassFunction> irreducibles;
    std::vector<long long> degrees;

    const PermGroup& group() const { return classes->group; }
    std::size_t size() const noexcept { return irreducibles.size(); }
    const ClassFunction& operator[](std::size_t i) const { return irreducibles.at(i); }

    /// Multiplicity of every irreducible in `chi`.
    std::vector<long long> decompose(const ClassFunction& chi, double tol = default_config().tol.multiplicity) const {
        std::vector<long long> m;
        m.reserve(size());
        for (const auto& irr : irreducibles) m.push_back(multiplicity(chi, irr, tol));
        return m;
    }

    /// Index of the irreducible equal to `chi` within `tol`, or size().
    std::size_t find(const ClassFunction& chi, double tol = default_config().tol.multiplicity) const {
        for (std::size_t i = 0; i < size(); ++i) {
            double d = 0;
            for (std::size_t c = 0; c < chi.values.size(); ++c)
                d = std::max(d, std::abs(chi.values[c] - irreducibles[i].values[c]));
            if (d <= tol) return i;
        }
        return size();
    }
};

namespace detail {

// a[i][j][k] = #{x ∈ C_i : x^-1 z_k ∈ C_j}, the class multiplication
// coefficients C_i C_j = Σ_k a_ijk C_k.
inline std::vector<Eigen::MatrixXd> class_matrices(const ConjClassData& cc) {
    const PermGroup& g = cc.group;
    const std::size_t r = cc.count();
    std::vector<Eigen::MatrixXd> m(r, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)));
    for (std::size_t k = 0; k < r; ++k) {
        Elem z = cc.reps[k];
        for (Elem x = 0; x < g.order(); ++x) {
            std::size_t i = cc.class_of[x];
            std::size_t j = cc.class_of[g.mul(g.inv(x), z)];
            m[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += 1.0;
        }
    }
    return m;
}

inline double round_to(double v, double q) {
    double r = std::round(v / q) * q;
    return r == 0 ? 0.0 : r;
}

}  // namespace detail

/// Irreducible characters via the class algebra: the central characters
/// ω_χ(C) = |C| χ(g_C) / χ(1) are the common eigenvectors of the class-sum
/// matrices. A seeded random combination of those matrices is diagonalised;
/// degrees follow from Σ_C |ω(C)|² / |C| = |G| / χ(1)².
///
/// Characters are sorted by degree, then by descending rounded real parts,
/// then by descending rounded imaginary parts, so the trivial character is
/// entry 0.
inline CharacterTable character_table(const PermGroup& g, const Config& cfg = default_config()) {
    auto cc = class_data(g);
    const std::size_t r = cc->count();
    if (r > cfg.class_cap)
        throw ResourceLimitError("character table: " + std::to_string(r) + " classes exceed class cap " +
                                 std::to_string(cfg.class_cap));
    const auto mats = detail::class_matrices(*cc);
    const auto n = static_cast<Eigen::Index>(r);
    const double order = static_cast<double>(g.order());

    double best_residual = INFINITY;
    for (unsigned attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(0x5eedULL + attempt);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t i = 0; i < r; ++i) combo += coef(rng) * mats[i];

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(combo.cast<Complex>());
        if (es.info() != Eigen::Success) continue;
        const auto& ev = es.eigenvalues();
        double gap = INFINITY;
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index b = a + 1; b < n; ++b) gap = std::min(gap, std::abs(ev(a) - ev(b)));
        if (r > 1 && gap < 1e-6) continue;

        CharacterTable t{cc, {}, {}};
        double residual = 0;
        bool ok = true;
        for (Eigen::Index e = 0; e < n && ok; ++e) {
            Eigen::VectorXcd w = es.eigenvectors().col(e);
            if (std::abs(w(0)) < 1e-12) {
                ok = false;
                break;
            }
            w /= w(0);
            for (std::size_t i = 0; i < r; ++i)
                residual = std::max(residual, (mats[i].cast<Complex>() * w - w(static_cast<Eigen::Index>(i)) * w).norm());
            double s = 0;
            for (std::size_t i = 0; i < r; ++i) s += std::norm(w(static_cast<Eigen::Index>(i))) / static_cast<double>(cc->sizes[i]);
            double deg = std::sqrt(order / s);
            long long d = std::llround(deg);
            residual = std::max(residual, std::abs(deg - static_cast<double>(d)));
            ClassFunction chi{cc, std::vector<Complex>(r)};
            for (std::size_t i = 0; i < r; ++i)
                chi.values[i] = static_cast<double>(d) * w(static_cast<Eigen::Index>(i)) / static_cast<double>(cc->sizes[i]);
            t.irreducibles.push_back(std::move(chi));
            t.degrees.push_back(d);
        }
        if (!ok) continue;

        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                Complex ip = inner_product(t.irreducibles[a], t.irreducibles[b]).value;
                residual = std::max(residual, std::abs(ip - Complex(a == b ? 1.0 : 0.0)));
            }
        long long sq = 0;
        for (long long d : t.degrees) sq += d * d;
        if (sq != static_cast<long long>(g.order())) residual = std::max(residual, 1.0);
        best_residual = std::min(best_residual, residual);
        if (residual > cfg.tol.character) continue;

        std::vector<std::size_t> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        const double q = cfg.tol.multiplicity;
        auto key = [&](std::size_t a) {
            std::vector<double> k{static_cast<double>(t.degrees[a])};
            for (const auto& v : t.irreducibles[a].values) k.push_back(-detail::round_to(v.real(), q));
            for (const auto& v : t.irreducibles[a].values) k.push_back(-detail::round_to(v.imag(), q));
            return k;
        };
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        CharacterTable sorted{cc, {}, {}};
        for (std::size_t a : idx) {
            sorted.irreducibles.push_back(t.irreducibles[a]);
            sorted.degrees.push_back(t.degrees[a]);
        }
        return sorted;
    }
    throw NumericalError("character table: class algebra could not be separated", best_residual);
}

/// {"classes": [{"representative", "size"}], "degrees": [...],
///  "table": [[[re, im], ...], ...]} with values rounded to 12 decimals.
inline nlohmann::json character_table_json(const CharacterTable& t) {
    nlohmann::json j;
    j["order"] = t.group().order();
    j["classes"] = nlohmann::json::array();
    for (std::size_t c = 0; c < t.classes->count(); ++c)
        j["classes"].push_back({{"representative", t.classes->rep(c).to_cycles()}, {"size", t.classes->sizes[c]}});
    j["degrees"] = t.degrees;
    j["table"] = nlohmann::json::array();
    for (const auto& chi : t.irreducibles) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& v : chi.values)
            row.push_back({detail::round_to(v.real(), 1e-12), detail::round_to(v.imag(), 1e-12)});
        j["table"].push_back(std::move(row));
    }
    return j;
}

}  // namespace sfw
