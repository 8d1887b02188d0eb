#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfw/error.hpp"

namespace sfw {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1} stored as its image list.
///
/// Composition is rightmost-first: `(a * b)(x) == a(b(x))`. Ordering is
/// lexicographic on the image list, which makes the identity the least
/// element of any group that contains it.
class Permutation {
public:
    Permutation() = default;

    /// Throws InputError unless `images` is a bijection.
    explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size(), 0);
        for (std::size_t x = 0; x < images_.size(); ++x) {
            Point y = images_[x];
            if (y >= images_.size() || seen[y])
                throw InputError("not a bijection: image " + std::to_string(y) + " at position " +
                                 std::to_string(x));
            seen[y] = 1;
        }
    }

    static Permutation identity(std::size_t degree) {
        Permutation p;
        p.images_.resize(degree);
        std::iota(p.images_.begin(), p.images_.end(), Point{0});
        return p;
    }

    /// Parses disjoint or non-disjoint cycle notation, e.g. "(0 1)(2 3 4)".
    /// Cycles are composed rightmost-first; "()" or "" is the identity.
    static Permutation from_cycles(std::size_t degree, std::string_view text) {
        Permutation result = identity(degree);
        std::size_t pos = 0;
        auto fail = [&](const std::string& why) {
            throw InputError("cycle string \"" + std::string(text) + "\" position " +
                             std::to_string(pos) + ": " + why);
        };
        std::vector<std::vector<Point>> cycles;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ' ' || c == ',') {
                ++pos;
                continue;
            }
            if (c != '(') fail("expected '('");
            ++pos;
            std::vector<Point> cycle;
            while (true) {
                while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
                if (pos >= text.size()) fail("unterminated cycle");
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                if (text[pos] < '0' || text[pos] > '9') fail("expected digit");
                std::uint64_t v = 0;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                    v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                    if (v >= degree) fail("point " + std::to_string(v) + " exceeds degree");
                    ++pos;
                }
                cycle.push_back(static_cast<Point>(v));
            }
            std::vector<char> seen(degree, 0);
            for (Point x : cycle) {
                if (seen[x]) fail("repeated point in cycle");
                seen[x] = 1;
            }
            cycles.push_back(std::move(cycle));
        }
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
            Permutation cyc = identity(degree);
            const auto& cy = *it;
            for (std::size_t i = 0; i < cy.size(); ++i) cyc.images_[cy[i]] = cy[(i + 1) % cy.size()];
            result = cyc * result;
        }
        return result;
    }

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator[](Point x) const noexcept { return images_[x]; }
    Point operator()(Point x) const noexcept { return images_[x]; }
    std::span<const Point> images() const noexcept { return images_; }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw InputError("composing permutations of different degree");
        Permutation r;
        r.images_.resize(a.degree());
        for (std::size_t x = 0; x < a.degree(); ++x) r.images_[x] = a.images_[b.images_[x]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(degree());
        for (std::size_t x = 0; x < degree(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
        return r;
    }

    bool is_identity() const noexcept {
        for (std::size_t x = 0; x < images_.size(); ++x)
            if (images_[x] != x) return false;
        return true;
    }

    std::size_t support_size() const noexcept {
        std::size_t n = 0;
        for (std::size_t x = 0; x < images_.size(); ++x) n += images_[x] != x;
        return n;
    }

    /// Order as the lcm of cycle lengths.
    std::uint64_t order() const {
        std::uint64_t ord = 1;
        std::vector<char> seen(degree(), 0);
        for (std::size_t x = 0; x < degree(); ++x) {
            if (seen[x]) continue;
            std::uint64_t len = 0;
            for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
                seen[y] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    /// Disjoint cycle notation; "()" for the identity.
    std::string to_cycles() const {
        std::string out;
        std::vector<char> seen(degree(), 0);
        for (std::size_t x = 0; x < degree(); ++x) {
            if (seen[x] || images_[x] == x) continue;
            out += '(';
            for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
                seen[y] = 1;
                if (y != x) out += ' ';
                out += std::to_string(y);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<Point> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Point x : p.images()) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace sfw
