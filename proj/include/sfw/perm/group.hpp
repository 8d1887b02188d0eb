#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sfw/config.hpp"
#include "sfw/error.hpp"
#include "sfw/perm/permutation.hpp"

namespace sfw {

/// Index of an element inside its group's sorted element list.
using Elem = std::uint32_t;

/// A finite permutation group with its full element list.
///
/// Elements are sorted lexicographically by image list, so index 0 is always
/// the identity. The value is an immutable handle: copies share storage and
/// two handles compare equal when they hold the same element set.
class PermGroup {
public:
    /// Trivial group of degree 0.
    PermGroup() : PermGroup(build(0, {}, {Permutation::identity(0)})) {}

    /// Closure of `gens` under composition. Throws ResourceLimitError when the
    /// order exceeds `cfg.order_cap`.
    static PermGroup generate(std::size_t degree, std::vector<Permutation> gens,
                              const Config& cfg = default_config()) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].degree() != degree)
                throw InputError("generator " + std::to_string(i) + " has degree " +
                                 std::to_string(gens[i].degree()) + ", expected " +
                                 std::to_string(degree));
        std::vector<Permutation> elems = closure(degree, gens, cfg.order_cap);
        return PermGroup(build(degree, std::move(gens), std::move(elems)));
    }

    /// Wraps an element set already known to be closed (intersections,
    /// stabilizers, preimages). A small generating set is chosen greedily in
    /// lexicographic order.
    static PermGroup from_closed_set(std::size_t degree, std::vector<Permutation> elems) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        if (elems.empty() || !elems.front().is_identity())
            throw InvariantViolation("element set lacks the identity");
        std::vector<Permutation> gens;
        std::unordered_set<Permutation, PermutationHash> have{Permutation::identity(degree)};
        for (const auto& e : elems) {
            if (have.count(e)) continue;
            gens.push_back(e);
            auto cl = closure(degree, gens, elems.size());
            have = std::unordered_set<Permutation, PermutationHash>(cl.begin(), cl.end());
        }
        if (have.size() != elems.size()) throw InvariantViolation("element set is not closed");
        return PermGroup(build(degree, std::move(gens), std::move(elems)));
    }

    std::size_t degree() const noexcept { return d_->degree; }
    std::size_t order() const noexcept { return d_->elements.size(); }
    std::span<const Permutation> generators() const noexcept { return d_->generators; }
    std::span<const Permutation> elements() const noexcept { return d_->elements; }
    const Permutation& element(Elem i) const { return d_->elements.at(i); }
    static constexpr Elem identity() noexcept { return 0; }

    std::optional<Elem> find(const Permutation& p) const {
        auto it = d_->index.find(p);
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }
    Elem index_of(const Permutation& p) const {
        if (auto i = find(p)) return *i;
        throw PreconditionError("permutation " + p.to_cycles() + " is not in the group");
    }
    bool contains(const Permutation& p) const {
        return p.degree() == degree() && d_->index.count(p) != 0;
    }

    Elem mul(Elem a, Elem b) const {
        if (const auto* table = cayley_table()) return (*table)[std::size_t(a) * order() + b];
        return index_of(d_->elements[a] * d_->elements[b]);
    }
    Elem inv(Elem a) const { return d_->inverse[a]; }
    /// g x g^-1
    Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

    std::uint64_t element_order(Elem a) const { return d_->elements[a].order(); }

    std::map<std::uint64_t, std::size_t> order_histogram() const {
        std::map<std::uint64_t, std::size_t> h;
        for (const auto& e : d_->elements) ++h[e.order()];
        return h;
    }

    std::uint64_t exponent() const {
        std::uint64_t e = 1;
        for (const auto& x : d_->elements) e = std::lcm(e, x.order());
        return e;
    }

    bool is_subgroup_of(const PermGroup& g) const {
        if (degree() != g.degree() || g.order() % order() != 0) return false;
        return std::all_of(d_->elements.begin(), d_->elements.end(),
                           [&](const Permutation& p) { return g.contains(p); });
    }

    bool is_normal_in(const PermGroup& g) const {
        if (!is_subgroup_of(g)) return false;
        for (const auto& x : g.generators())
            for (const auto& h : generators())
                if (!contains(x * h * x.inverse())) return false;
        return true;
    }

    bool is_abelian() const {
        for (const auto& a : generators())
            for (const auto& b : generators())
                if (a * b != b * a) return false;
        return true;
    }

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.d_ == b.d_ || (a.degree() == b.degree() && a.d_->elements == b.d_->elements);
    }

    /// Throws PreconditionError unless `h` is a subgroup of `g`.
    static void require_subgroup(const PermGroup& h, const PermGroup& g, const char* what = "H") {
        if (!h.is_subgroup_of(g))
            throw PreconditionError(std::string(what) + " is not a subgroup of the ambient group");
    }

private:
    struct Data {
        std::size_t degree = 0;
        std::vector<Permutation> generators;
        std::vector<Permutation> elements;
        std::unordered_map<Permutation, Elem, PermutationHash> index;
        std::vector<Elem> inverse;
        mutable std::once_flag table_once;
        mutable std::vector<Elem> table;
        bool table_enabled = false;
    };

    explicit PermGroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}

    static std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens,
                                            std::size_t cap) {
        std::unordered_set<Permutation, PermutationHash> seen;
        std::deque<Permutation> queue;
        Permutation id = Permutation::identity(degree);
        seen.insert(id);
        queue.push_back(id);
        while (!queue.empty()) {
            Permutation x = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : gens) {
                Permutation y = x * g;
                if (seen.insert(y).second) {
                    if (seen.size() > cap)
                        throw ResourceLimitError("group order exceeds cap " + std::to_string(cap));
                    queue.push_back(std::move(y));
                }
            }
        }
        std::vector<Permutation> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::shared_ptr<Data> build(std::size_t degree, std::vector<Permutation> gens,
                                       std::vector<Permutation> elems) {
        auto d = std::make_shared<Data>();
        d->degree = degree;
        d->generators = std::move(gens);
        d->elements = std::move(elems);
        d->index.reserve(d->elements.size());
        for (Elem i = 0; i < d->elements.size(); ++i) d->index.emplace(d->elements[i], i);
        d->inverse.resize(d->elements.size());
        for (Elem i = 0; i < d->elements.size(); ++i)
            d->inverse[i] = d->index.at(d->elements[i].inverse());
        const double n = static_cast<double>(d->elements.size());
        d->table_enabled = n * n <= 4e6 && n * n * static_cast<double>(degree + 1) <= 2e8;
        return d;
    }

    const std::vector<Elem>* cayley_table() const {
        if (!d_->table_enabled) return nullptr;
        std::call_once(d_->table_once, [d = d_.get()] {
            const std::size_t n = d->elements.size();
            d->table.resize(n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    d->table[a * n + b] = d->index.at(d->elements[a] * d->elements[b]);
        });
        return &d_->table;
    }

    std::shared_ptr<Data> d_;
};

/// Group generated by `gens` on `degree` points.
inline PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                       const Config& cfg = default_config()) {
    return PermGroup::generate(degree, std::move(gens), cfg);
}

/// Convenience: generators in cycle notation.
inline PermGroup group_from_cycles(std::size_t degree, const std::vector<std::string>& cycles,
                                   const Config& cfg = default_config()) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(degree, c));
    return PermGroup::generate(degree, std::move(gens), cfg);
}

inline PermGroup trivial_group(std::size_t degree) {
    return PermGroup::generate(degree, {});
}

inline PermGroup intersection(const PermGroup& a, const PermGroup& b) {
    std::vector<Permutation> common;
    for (const auto& x : a.elements())
        if (b.contains(x)) common.push_back(x);
    return PermGroup::from_closed_set(a.degree(), std::move(common));
}

/// x^-1 H x
inline PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& x) {
    Permutation xi = x.inverse();
    std::vector<Permutation> elems;
    elems.reserve(h.order());
    for (const auto& e : h.elements()) elems.push_back(xi * e * x);
    return PermGroup::from_closed_set(h.degree(), std::move(elems));
}

inline PermGroup center(const PermGroup& g) {
    std::vector<Permutation> z;
    for (const auto& x : g.elements()) {
        bool central = true;
        for (const auto& s : g.generators())
            if (x * s != s * x) {
                central = false;
                break;
            }
        if (central) z.push_back(x);
    }
    return PermGroup::from_closed_set(g.degree(), std::move(z));
}

}  // namespace sfw
