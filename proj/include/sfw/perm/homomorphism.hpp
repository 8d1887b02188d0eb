#pragma once

#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfw/error.hpp"
#include "sfw/perm/group.hpp"

namespace sfw {

/// Extends generator images to a map on every element of `g` by walking the
/// right Cayley graph, f(x s) = f(x) f(s). Returns nullopt when two words for
/// the same element disagree, i.e. the images do not define a homomorphism.
template <class T, class Mul, class Eq>
std::optional<std::vector<T>> extend_homomorphism(const PermGroup& g, std::span<const T> gen_images,
                                                  const T& identity, Mul mul, Eq eq) {
    const auto gens = g.generators();
    if (gen_images.size() != gens.size())
        throw InputError("expected " + std::to_string(gens.size()) + " generator images, got " +
                         std::to_string(gen_images.size()));
    std::vector<Elem> gen_elems;
    for (const auto& s : gens) gen_elems.push_back(g.index_of(s));

    std::vector<std::optional<T>> img(g.order());
    img[PermGroup::identity()] = identity;
    std::deque<Elem> queue{PermGroup::identity()};
    while (!queue.empty()) {
        Elem x = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < gen_elems.size(); ++j) {
            Elem y = g.mul(x, gen_elems[j]);
            T fy = mul(*img[x], gen_images[j]);
            if (!img[y]) {
                img[y] = std::move(fy);
                queue.push_back(y);
            } else if (!eq(*img[y], fy)) {
                return std::nullopt;
            }
        }
    }
    std::vector<T> out;
    out.reserve(g.order());
    for (auto& v : img) out.push_back(std::move(*v));
    return out;
}

/// A homomorphism between permutation groups stored as an element table.
struct GroupHom {
    PermGroup source;
    PermGroup target;
    std::vector<Elem> image;  // indexed by source element

    Elem operator()(Elem x) const { return image.at(x); }
    const Permutation& operator()(const Permutation& p) const {
        return target.element(image.at(source.index_of(p)));
    }

    /// Exhaustive check of f(xy) = f(x) f(y) on x ∈ G, y a generator.
    bool is_homomorphism() const {
        if (image.size() != source.order()) return false;
        for (const auto& s : source.generators()) {
            Elem se = source.index_of(s);
            for (Elem x = 0; x < source.order(); ++x)
                if (image[source.mul(x, se)] != target.mul(image[x], image[se])) return false;
        }
        return image[PermGroup::identity()] == PermGroup::identity();
    }

    bool is_injective() const {
        std::vector<char> hit(target.order(), 0);
        for (Elem y : image) {
            if (hit[y]) return false;
            hit[y] = 1;
        }
        return true;
    }

    bool is_surjective() const {
        std::vector<char> hit(target.order(), 0);
        std::size_t n = 0;
        for (Elem y : image)
            if (!hit[y]) {
                hit[y] = 1;
                ++n;
            }
        return n == target.order();
    }

    PermGroup kernel() const {
        std::vector<Permutation> k;
        for (Elem x = 0; x < source.order(); ++x)
            if (image[x] == PermGroup::identity()) k.push_back(source.element(x));
        return PermGroup::from_closed_set(source.degree(), std::move(k));
    }

    /// Image subgroup f(source).
    PermGroup image_group() const {
        std::vector<Permutation> im;
        for (Elem y : image) im.push_back(target.element(y));
        return PermGroup::from_closed_set(target.degree(), std::move(im));
    }
};

/// Homomorphism determined by images of source.generators(). Throws
/// InputError when the images do not extend.
inline GroupHom hom_from_generator_images(const PermGroup& source, const PermGroup& target,
                                          const std::vector<Permutation>& gen_images) {
    std::vector<Elem> imgs;
    for (const auto& p : gen_images) {
        auto e = target.find(p);
        if (!e) throw InputError("generator image " + p.to_cycles() + " not in target group");
        imgs.push_back(*e);
    }
    auto table = extend_homomorphism<Elem>(
        source, imgs, PermGroup::identity(), [&](Elem a, Elem b) { return target.mul(a, b); },
        [](Elem a, Elem b) { return a == b; });
    if (!table) throw InputError("generator images do not define a homomorphism");
    return GroupHom{source, target, std::move(*table)};
}

/// Inclusion of a subgroup.
inline GroupHom inclusion_hom(const PermGroup& sub, const PermGroup& g) {
    PermGroup::require_subgroup(sub, g, "source");
    GroupHom f{sub, g, {}};
    for (const auto& x : sub.elements()) f.image.push_back(g.index_of(x));
    return f;
}

/// Action of a group on {0, ..., size-1}: one permutation per group element.
struct GroupAction {
    PermGroup group;
    std::size_t set_size = 0;
    std::vector<Permutation> images;  // indexed by group element

    const Permutation& operator()(Elem g) const { return images.at(g); }

    /// act(x s) = act(x) act(s) for all x and generators s, act(e) = id.
    bool is_action() const {
        if (images.size() != group.order()) return false;
        for (const auto& p : images)
            if (p.degree() != set_size) return false;
        if (!images[PermGroup::identity()].is_identity()) return false;
        for (const auto& s : group.generators()) {
            Elem se = group.index_of(s);
            for (Elem x = 0; x < group.order(); ++x)
                if (images[group.mul(x, se)] != images[x] * images[se]) return false;
        }
        return true;
    }

    bool is_faithful() const {
        for (Elem x = 1; x < group.order(); ++x)
            if (images[x].is_identity()) return false;
        return true;
    }
};

/// Action determined by generator images; InputError when not an action.
inline GroupAction action_from_generator_images(const PermGroup& g, std::size_t set_size,
                                                const std::vector<Permutation>& gen_images) {
    for (const auto& p : gen_images)
        if (p.degree() != set_size) throw InputError("action image has wrong degree");
    auto table = extend_homomorphism<Permutation>(
        g, gen_images, Permutation::identity(set_size),
        [](const Permutation& a, const Permutation& b) { return a * b; },
        [](const Permutation& a, const Permutation& b) { return a == b; });
    if (!table) throw InputError("generator images do not define a group action");
    return GroupAction{g, set_size, std::move(*table)};
}

/// Natural action of a permutation group on its points.
inline GroupAction natural_action(const PermGroup& g) {
    return GroupAction{g, g.degree(), {g.elements().begin(), g.elements().end()}};
}

}  // namespace sfw
