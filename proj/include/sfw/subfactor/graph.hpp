#pragma once

#include <cmath>
#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfw/character/table.hpp"
#include "sfw/config.hpp"
#include "sfw/perm/cosets.hpp"

namespace sfw {

struct GraphVertex {
    std::string label;
    std::string group;    // "K", "H" or "G"
    long group_index = -1;  // double coset index for K vertices, -1 otherwise
    std::size_t irrep_index = 0;
    long long degree = 0;

    friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct GraphEdge {
    std::size_t even = 0;
    std::size_t odd = 0;
    long long multiplicity = 0;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Bipartite graph with edge multiplicities. The designated vertex is an
/// even vertex; `trivial_vertices` records the labels of both trivial
/// characters (even first, then odd).
struct BipartiteMultiGraph {
    std::string name;
    std::vector<GraphVertex> even;
    std::vector<GraphVertex> odd;
    std::vector<GraphEdge> edges;  // sorted by (even, odd), multiplicity > 0
    std::size_t designated = 0;
    std::vector<std::string> trivial_vertices;

    friend bool operator==(const BipartiteMultiGraph&, const BipartiteMultiGraph&) = default;

    std::size_t vertex_count() const noexcept { return even.size() + odd.size(); }

    long long multiplicity(std::size_t e, std::size_t o) const {
        for (const auto& ed : edges)
            if (ed.even == e && ed.odd == o) return ed.multiplicity;
        return 0;
    }

    bool is_connected() const {
        if (vertex_count() == 0) return false;
        std::vector<char> se(even.size(), 0), so(odd.size(), 0);
        std::deque<std::pair<bool, std::size_t>> q;
        std::size_t seen = 0;
        auto visit = [&](bool is_even, std::size_t v) {
            auto& s = is_even ? se : so;
            if (!s[v]) {
                s[v] = 1;
                ++seen;
                q.push_back({is_even, v});
            }
        };
        if (!even.empty())
            visit(true, 0);
        else
            visit(false, 0);
        while (!q.empty()) {
            auto [ev, v] = q.front();
            q.pop_front();
            for (const auto& ed : edges) {
                if (ev && ed.even == v) visit(false, ed.odd);
                if (!ev && ed.odd == v) visit(true, ed.even);
            }
        }
        return seen == vertex_count();
    }

    /// ‖Δ‖², the largest eigenvalue of A Aᵀ on the even vertices, by power
    /// iteration from the all-ones vector. Stops when the Rayleigh quotient
    /// changes by less than 1e-12 (relative) or after 10⁴ steps.
    double norm_squared() const {
        if (even.empty() || odd.empty()) return 0.0;
        std::vector<double> v(even.size(), 1.0), w(odd.size());
        double lambda = 0;
        for (int it = 0; it < 10000; ++it) {
            std::fill(w.begin(), w.end(), 0.0);
            for (const auto& ed : edges) w[ed.odd] += static_cast<double>(ed.multiplicity) * v[ed.even];
            std::vector<double> nv(even.size(), 0.0);
            for (const auto& ed : edges) nv[ed.even] += static_cast<double>(ed.multiplicity) * w[ed.odd];
            double num = 0, den = 0, len = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                num += v[i] * nv[i];
                den += v[i] * v[i];
                len += nv[i] * nv[i];
            }
            double next = num / den;
            len = std::sqrt(len);
            if (len == 0) return 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = nv[i] / len;
            if (it > 0 && std::abs(next - lambda) <= 1e-12 * std::max(1.0, next)) return next;
            lambda = next;
        }
        return lambda;
    }
};

namespace detail {

// Keeps the component of `start` (even side when start_even) and reindexes.
inline BipartiteMultiGraph component(const BipartiteMultiGraph& g, bool start_even, std::size_t start) {
    std::vector<char> se(g.even.size(), 0), so(g.odd.size(), 0);
    std::deque<std::pair<bool, std::size_t>> q{{start_even, start}};
    (start_even ? se : so)[start] = 1;
    while (!q.empty()) {
        auto [ev, v] = q.front();
        q.pop_front();
        for (const auto& ed : g.edges) {
            if (ev && ed.even == v && !so[ed.odd]) {
                so[ed.odd] = 1;
                q.push_back({false, ed.odd});
            }
            if (!ev && ed.odd == v && !se[ed.even]) {
                se[ed.even] = 1;
                q.push_back({true, ed.even});
            }
        }
    }
    BipartiteMultiGraph out{g.name, {}, {}, {}, 0, g.trivial_vertices};
    std::vector<std::size_t> me(g.even.size()), mo(g.odd.size());
    for (std::size_t i = 0; i < g.even.size(); ++i)
        if (se[i]) {
            me[i] = out.even.size();
            out.even.push_back(g.even[i]);
        }
    for (std::size_t i = 0; i < g.odd.size(); ++i)
        if (so[i]) {
            mo[i] = out.odd.size();
            out.odd.push_back(g.odd[i]);
        }
    for (const auto& ed : g.edges)
        if (se[ed.even] && so[ed.odd]) out.edges.push_back({me[ed.even], mo[ed.odd], ed.multiplicity});
    out.designated = se[g.designated] ? me[g.designated] : 0;
    return out;
}

inline std::vector<GraphVertex> irrep_vertices(const CharacterTable& t, const std::string& group, long index) {
    std::vector<GraphVertex> v;
    for (std::size_t r = 0; r < t.size(); ++r) {
        std::string label = index >= 0 ? group + std::to_string(index) + "." + std::to_string(r)
                                       : group + "." + std::to_string(r);
        v.push_back({label, group, index, r, t.degrees[r]});
    }
    return v;
}

}  // namespace detail

/// Even vertices: irreducibles of K_i = H ∩ g_i^-1 H g_i over the double
/// coset representatives g_i; odd vertices: irreducibles of H; ρ₀ ∈ K̂_i and
/// ρ₁ ∈ Ĥ are joined by ⟨Res_{K_i} ρ₁, ρ₀⟩ edges. Returns the component of
/// the trivial character of H, designating the trivial character of K_0 = H.
inline BipartiteMultiGraph principal_graph(const PermGroup& g, const PermGroup& h, const Config& cfg = default_config()) {
    DoubleCosetData dc = double_coset_data(g, h);
    CharacterTable th = character_table(h, cfg);
    BipartiteMultiGraph full;
    full.name = "principal";
    full.odd = detail::irrep_vertices(th, "H", -1);
    for (std::size_t i = 0; i < dc.count(); ++i) {
        CharacterTable tk = character_table(dc.stabilizers[i], cfg);
        const std::size_t base = full.even.size();
        auto verts = detail::irrep_vertices(tk, "K", static_cast<long>(i));
        full.even.insert(full.even.end(), verts.begin(), verts.end());
        for (std::size_t o = 0; o < th.size(); ++o) {
            ClassFunction res = restrict(th[o], dc.stabilizers[i]);
            for (std::size_t e = 0; e < tk.size(); ++e)
                if (long long m = multiplicity(res, tk[e], cfg.tol.multiplicity); m > 0)
                    full.edges.push_back({base + e, o, m});
        }
    }
    std::sort(full.edges.begin(), full.edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return std::tie(a.even, a.odd) < std::tie(b.even, b.odd); });
    full.designated = 0;
    full.trivial_vertices = {full.even[0].label, full.odd[0].label};
    return detail::component(full, false, 0);
}

/// Even vertices Ĝ, odd vertices Ĥ, edges ⟨Res_H ρ₀, ρ₁⟩; component and
/// designated vertex at the trivial character of G.
inline BipartiteMultiGraph dual_principal_graph(const PermGroup& g, const PermGroup& h,
                                                const Config& cfg = default_config()) {
    PermGroup::require_subgroup(h, g);
    CharacterTable tg = character_table(g, cfg);
    CharacterTable th = character_table(h, cfg);
    BipartiteMultiGraph full;
    full.name = "dual";
    full.even = detail::irrep_vertices(tg, "G", -1);
    full.odd = detail::irrep_vertices(th, "H", -1);
    for (std::size_t e = 0; e < tg.size(); ++e) {
        ClassFunction res = restrict(tg[e], h);
        for (std::size_t o = 0; o < th.size(); ++o)
            if (long long m = multiplicity(res, th[o], cfg.tol.multiplicity); m > 0) full.edges.push_back({e, o, m});
    }
    full.designated = 0;
    full.trivial_vertices = {full.even[0].label, full.odd[0].label};
    return detail::component(full, true, 0);
}

/// {"name", "even": [{label, group, group_index, irrep_index, degree}],
///  "odd": [...], "edges": [[e, o, mult]], "designated", "trivial_vertices",
///  "norm_squared"}
inline nlohmann::json graph_json(const BipartiteMultiGraph& g) {
    auto verts = [](const std::vector<GraphVertex>& vs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& v : vs)
            a.push_back({{"label", v.label},
                         {"group", v.group},
                         {"group_index", v.group_index},
                         {"irrep_index", v.irrep_index},
                         {"degree", v.degree}});
        return a;
    };
    nlohmann::json j;
    j["name"] = g.name;
    j["even"] = verts(g.even);
    j["odd"] = verts(g.odd);
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) j["edges"].push_back({e.even, e.odd, e.multiplicity});
    j["designated"] = g.even.empty() ? "" : g.even[g.designated].label;
    j["trivial_vertices"] = g.trivial_vertices;
    j["norm_squared"] = g.norm_squared();
    return j;
}

inline BipartiteMultiGraph graph_from_json(const nlohmann::json& j) {
    try {
        BipartiteMultiGraph g;
        g.name = j.at("name").get<std::string>();
        auto verts = [](const nlohmann::json& a) {
            std::vector<GraphVertex> vs;
            for (const auto& v : a)
                vs.push_back({v.at("label").get<std::string>(), v.at("group").get<std::string>(),
                              v.at("group_index").get<long>(), v.at("irrep_index").get<std::size_t>(),
                              v.at("degree").get<long long>()});
            return vs;
        };
        g.even = verts(j.at("even"));
        g.odd = verts(j.at("odd"));
        for (const auto& e : j.at("edges")) {
            GraphEdge ed{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<long long>()};
            if (ed.even >= g.even.size() || ed.odd >= g.odd.size() || ed.multiplicity <= 0)
                throw InputError("graph: edge out of range or with nonpositive multiplicity");
            g.edges.push_back(ed);
        }
        const std::string des = j.at("designated").get<std::string>();
        bool found = false;
        for (std::size_t i = 0; i < g.even.size(); ++i)
            if (g.even[i].label == des) {
                g.designated = i;
                found = true;
            }
        if (!found) throw InputError("graph: designated vertex " + des + " not among even vertices");
        g.trivial_vertices = j.at("trivial_vertices").get<std::vector<std::string>>();
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph json: ") + e.what());
    }
}

/// DOT rendering: even vertices share one rank, odd vertices another; edges
/// with multiplicity above one carry a label.
inline std::string graph_dot(const BipartiteMultiGraph& g) {
    std::ostringstream os;
    os << "graph " << (g.name.empty() ? "G" : g.name) << " {\n";
    os << "  rankdir=TB;\n";
    os << "  { rank=same;";
    for (std::size_t i = 0; i < g.even.size(); ++i) {
        os << " \"" << g.even[i].label << "\"";
        if (i == g.designated) os << " [shape=doublecircle]";
        os << ";";
    }
    os << " }\n";
    os << "  { rank=same;";
    for (const auto& v : g.odd) os << " \"" << v.label << "\";";
    os << " }\n";
    for (const auto& e : g.edges) {
        os << "  \"" << g.even[e.even].label << "\" -- \"" << g.odd[e.odd].label << "\"";
        if (e.multiplicity > 1) os << " [label=\"" << e.multiplicity << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace sfw
